#include "knotforms/json_io.hpp"

#include <fstream>
#include <set>

#include "knotforms/rational.hpp"

namespace knotforms {

json matrix_to_json(const SeifertMatrix& v) {
    json rows = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < v.size(); ++j) {
            const mpz_class& e = v.at(i, j);
            if (e.fits_slong_p())
                row.push_back(e.get_si());
            else
                row.push_back(e.get_str());
        }
        rows.push_back(row);
    }
    return json{{"size", v.size()}, {"rows", rows}};
}

namespace {

mpz_class int_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw ParseError("matrix entry must be an integer");
}

}  // namespace

SeifertMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("rows"))
        throw ParseError("matrix object needs \"size\" and \"rows\"");
    const auto n = j.at("size").get<std::size_t>();
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != n) throw ParseError("\"rows\" must list `size` rows");
    Matrix<mpz_class> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows.at(i);
        if (!row.is_array() || row.size() != n) throw ParseError("row length differs from size");
        for (std::size_t k = 0; k < n; ++k) m.at(i, k) = int_from_json(row.at(k));
    }
    return SeifertMatrix(m);
}

json interval_to_json(const CertifiedInterval& iv) {
    return json{{"lo", rational_str(iv.lo)}, {"hi", rational_str(iv.hi)}, {"exact", iv.exact()}};
}

json profile_to_json(const SignatureProfile& p) {
    json cuts = json::array();
    for (const auto& c : p.cuts) {
        json jc;
        if (c.exact_theta) jc["theta"] = rational_str(*c.exact_theta);
        jc["theta_lo"] = rational_str(c.theta.lo);
        jc["theta_hi"] = rational_str(c.theta.hi);
        if (c.exact_z) jc["z"] = rational_str(*c.exact_z);
        jc["z_lo"] = rational_str(c.z.lo);
        jc["z_hi"] = rational_str(c.z.hi);
        jc["exact"] = c.exact_theta.has_value();
        cuts.push_back(jc);
    }
    json out{{"cuts", cuts}, {"arcs", p.arcs}};
    if (p.constant_value) out["constant"] = *p.constant_value;
    return out;
}

json verdict_to_json(const Verdict& v) {
    json factors1 = json::array(), factors2 = json::array();
    for (const auto& f : v.j1_factors) factors1.push_back(poly_str(f));
    for (const auto& f : v.j2_factors) factors2.push_back(poly_str(f));
    return json{
        {"eta_valid", v.eta_valid},
        {"modules_agree_through_n", v.modules_agree_through_n},
        {"lower_forms_agree", v.lower_forms_agree},
        {"bln_distinguished",
         v.bln_distinguished == BlnComparison::Distinguished ? "distinguished" : "inconclusive"},
        {"rho1", interval_to_json(v.rho1)},
        {"rho2", interval_to_json(v.rho2)},
        {"j1_invariant_factors", factors1},
        {"j2_invariant_factors", factors2},
        {"notes", v.notes},
    };
}

const Corpus::Entry* Corpus::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

Corpus corpus_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries")) throw ParseError("corpus needs \"entries\"");
    Corpus c;
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    std::set<std::string> seen;
    for (const json& je : j.at("entries")) {
        Corpus::Entry e;
        e.name = je.at("name").get<std::string>();
        if (!seen.insert(e.name).second) throw ParseError("duplicate corpus name: " + e.name);
        try {
            e.matrix = matrix_from_json(je.at("matrix"));
        } catch (const Error& err) {
            throw ParseError("entry \"" + e.name + "\": " + err.what());
        }
        e.fibered = je.value("fibered", false);
        c.entries.push_back(std::move(e));
    }
    return c;
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("corpus JSON: ") + e.what());
    }
    return corpus_from_json(j);
}

json corpus_to_json(const Corpus& c) {
    json entries = json::array();
    for (const auto& e : c.entries) {
        json je{{"name", e.name}, {"matrix", matrix_to_json(e.matrix)}};
        if (e.fibered) je["fibered"] = true;
        entries.push_back(je);
    }
    return json{{"seed", c.seed}, {"entries", entries}};
}

}  // namespace knotforms
