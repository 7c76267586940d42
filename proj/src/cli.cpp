#include "knotforms/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "knotforms/alexander.hpp"
#include "knotforms/blanchfield.hpp"
#include "knotforms/infection.hpp"
#include "knotforms/json_io.hpp"
#include "knotforms/magnus.hpp"

namespace knotforms {

namespace {

struct Context {
    bool as_json = false;
    bool approx = false;
    std::string corpus_path;
    std::optional<Corpus> corpus;
    std::ostream* out = nullptr;

    const Corpus* corpus_or_null() {
        if (!corpus && !corpus_path.empty()) corpus = load_corpus(corpus_path);
        return corpus ? &*corpus : nullptr;
    }

    // Resolves a knot argument: catalog name, corpus entry, or JSON file.
    SeifertMatrix knot(const std::string& arg) {
        const auto& names = catalog_names();
        if (std::find(names.begin(), names.end(), arg) != names.end()) return catalog(arg);
        if (const Corpus* c = corpus_or_null())
            if (const Corpus::Entry* e = c->find(arg)) return e->matrix;
        if (std::filesystem::exists(arg)) {
            std::ifstream in(arg);
            json j;
            try {
                j = json::parse(in);
            } catch (const json::parse_error& e) {
                throw ParseError(std::string(arg) + ": " + e.what());
            }
            return matrix_from_json(j);
        }
        throw UnknownName(arg);
    }

    FiberedKnotRecord fibered(const std::string& arg) {
        const auto& names = catalog_names();
        if (std::find(names.begin(), names.end(), arg) != names.end())
            return fibered_catalog(arg);
        if (const Corpus* c = corpus_or_null())
            if (const Corpus::Entry* e = c->find(arg)) {
                if (!e->fibered) throw NotFibered();
                return FiberedKnotRecord(e->matrix, e->name);
            }
        throw UnknownName(arg);
    }

    void emit(const json& j, const std::string& human) {
        if (as_json)
            *out << j.dump(2) << "\n";
        else
            *out << human;
    }
};

std::string interval_str(const CertifiedInterval& iv, bool approx) {
    std::ostringstream s;
    if (iv.exact()) {
        s << rational_str(iv.lo) << " (exact)";
        if (approx) s << "  ~ " << iv.lo.get_d();
    } else {
        s << "[" << rational_str(iv.lo) << ", " << rational_str(iv.hi) << "]";
        if (approx) s << "  ~ [" << iv.lo.get_d() << ", " << iv.hi.get_d() << "]";
    }
    return s.str();
}

std::string matrix_str(const SeifertMatrix& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s << "[";
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (j) s << ", ";
            s << v.at(i, j).get_str();
        }
        s << "]\n";
    }
    if (v.size() == 0) s << "[]\n";
    return s.str();
}

std::string cut_str(const ThetaCut& c) {
    std::ostringstream s;
    if (c.exact_theta)
        s << "theta = " << rational_str(*c.exact_theta) << " (exact)";
    else
        s << "theta in [" << rational_str(c.theta.lo) << ", " << rational_str(c.theta.hi) << "]";
    if (c.exact_z)
        s << ", z = " << rational_str(*c.exact_z);
    else
        s << ", z in [" << rational_str(c.z.lo) << ", " << rational_str(c.z.hi) << "]";
    return s.str();
}

void cmd_alex(Context& ctx, const std::string& knot) {
    SeifertMatrix v = ctx.knot(knot);
    LaurentPoly delta = alexander_poly(v);
    auto factors = invariant_factors(presentation(v));
    json jf = json::array();
    for (const auto& f : factors) jf.push_back(poly_str(f));
    std::ostringstream human;
    human << poly_str(delta) << "\n";
    human << "invariant factors:";
    if (factors.empty()) human << " (none, trivial module)";
    for (const auto& f : factors) human << " " << poly_str(f) << ";";
    human << "\n";
    ctx.emit(json{{"alexander", poly_str(delta)}, {"invariant_factors", jf}}, human.str());
}

void cmd_iso(Context& ctx, const std::string& k1, const std::string& k2) {
    SeifertMatrix v1 = ctx.knot(k1), v2 = ctx.knot(k2);
    auto f1 = invariant_factors(presentation(v1));
    auto f2 = invariant_factors(presentation(v2));
    bool iso = f1 == f2;
    json jf1 = json::array(), jf2 = json::array();
    for (const auto& f : f1) jf1.push_back(poly_str(f));
    for (const auto& f : f2) jf2.push_back(poly_str(f));
    std::ostringstream human;
    human << "modules isomorphic: " << (iso ? "true" : "false") << "\n";
    ctx.emit(json{{"isomorphic", iso}, {"factors1", jf1}, {"factors2", jf2}}, human.str());
}

void cmd_blanchfield(Context& ctx, const std::string& knot) {
    SeifertMatrix v = ctx.knot(knot);
    auto w = blanchfield_matrix(v);
    json rows = json::array();
    std::ostringstream human;
    for (std::size_t i = 0; i < w.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < w.cols(); ++j) {
            row.push_back(rf_str(w.at(i, j)));
            human << (j ? "  |  " : "") << rf_str(w.at(i, j));
        }
        human << "\n";
        rows.push_back(row);
    }
    if (w.rows() == 0) human << "(empty matrix)\n";
    ctx.emit(json{{"size", w.rows()}, {"entries", rows}}, human.str());
}

void cmd_sig(Context& ctx, const std::string& knot, const std::string& s_arg,
             const std::string& omega_arg) {
    SeifertMatrix v = ctx.knot(knot);
    std::optional<CirclePoint> omega;
    if (!s_arg.empty()) {
        omega = circle_point(parse_rational(s_arg));
    } else {
        auto comma = omega_arg.find(',');
        if (comma == std::string::npos)
            throw ParseError("--omega wants \"re,im\" with re^2 + im^2 = 1");
        omega = CirclePoint(parse_rational(omega_arg.substr(0, comma)),
                            parse_rational(omega_arg.substr(comma + 1)));
    }
    int sig = lt_signature_at(v, *omega);
    std::ostringstream human;
    human << sig << "\n";
    ctx.emit(json{{"omega", {{"re", rational_str(omega->re)}, {"im", rational_str(omega->im)}}},
                  {"signature", sig}},
             human.str());
}

void cmd_sig_profile(Context& ctx, const std::string& knot) {
    SeifertMatrix v = ctx.knot(knot);
    SignatureProfile p = signature_profile(v);
    std::ostringstream human;
    if (p.cuts.empty()) {
        human << "no cuts; sigma = " << (p.constant_value ? *p.constant_value : 0)
              << " on the whole circle\n";
    } else {
        for (std::size_t i = 0; i < p.cuts.size(); ++i)
            human << "cut " << i << ": " << cut_str(p.cuts[i]) << "\n";
        for (std::size_t i = 0; i < p.arcs.size(); ++i) {
            std::size_t next = (i + 1) % p.cuts.size();
            human << "arc " << i << " (cut " << i << " -> cut " << next;
            if (next == 0) human << ", through theta = 0";
            human << "): sigma = " << p.arcs[i] << "\n";
        }
    }
    ctx.emit(profile_to_json(p), human.str());
}

void cmd_sig_integral(Context& ctx, const std::string& knot, const std::string& eps_arg) {
    SeifertMatrix v = ctx.knot(knot);
    CertifiedInterval iv = signature_integral(v, parse_rational(eps_arg));
    ctx.emit(interval_to_json(iv), interval_str(iv, ctx.approx) + "\n");
}

void cmd_s_equiv(Context& ctx, const std::string& knot, unsigned moves, std::uint64_t seed) {
    SeifertMatrix v = ctx.knot(knot);
    SeifertMatrix w = random_s_equivalent(v, moves, seed);
    std::ostringstream human;
    human << matrix_str(w);
    human << "delta: " << poly_str(alexander_poly(w)) << "\n";
    ctx.emit(matrix_to_json(w), human.str());
}

void cmd_derived(Context& ctx, const std::string& word_arg, int level, int rank, int witness) {
    if (witness >= 0) {
        FreeWord w = derived_witness(rank, witness);
        std::ostringstream human;
        human << word_str(w) << "\n";
        ctx.emit(json{{"witness_level", witness}, {"word", word_str(w)}}, human.str());
        return;
    }
    FreeWord w = parse_word(word_arg, rank);
    bool member = in_derived(w, level);
    std::ostringstream human;
    human << "in F^(" << level << "): " << (member ? "true" : "false") << "\n";
    ctx.emit(json{{"word", word_str(w)}, {"level", level}, {"in_derived", member}}, human.str());
}

void cmd_infect(Context& ctx, const std::string& base, const std::string& eta_arg, int n,
                const std::string& j1, const std::string& j2, const std::string& eps_arg) {
    FiberedKnotRecord rec = ctx.fibered(base);
    FreeWord eta = parse_word(eta_arg, rec.fiber_rank);
    InfectionSpec spec(rec, eta, n, ctx.knot(j1), ctx.knot(j2));
    Verdict v = verdict(spec, parse_rational(eps_arg));
    std::ostringstream human;
    human << "eta valid: " << (v.eta_valid ? "true" : "false") << "\n";
    human << "modules agree through n: " << (v.modules_agree_through_n ? "true" : "false") << "\n";
    human << "lower linking forms agree: " << (v.lower_forms_agree ? "true" : "false") << "\n";
    human << "rho(J1) = " << interval_str(v.rho1, ctx.approx) << "\n";
    human << "rho(J2) = " << interval_str(v.rho2, ctx.approx) << "\n";
    human << "verdict: "
          << (v.bln_distinguished == BlnComparison::Distinguished ? "Distinguished"
                                                                  : "Inconclusive")
          << "\n";
    for (const auto& note : v.notes) human << "  - " << note << "\n";
    ctx.emit(verdict_to_json(v), human.str());
}

int cmd_corpus_check(Context& ctx, const std::string& path) {
    Corpus corpus = load_corpus(path);
    std::ostream& out = *ctx.out;
    bool ok = true;
    json report = json::array();
    std::mt19937_64 rng(corpus.seed);
    for (const auto& e : corpus.entries) {
        std::string failure;
        try {
            // Entry invariants were enforced at parse; run the cross-module
            // suite: Hermitian identity, symmetry of delta, |delta(1)| = 1,
            // and invariance under a random S-equivalence move sequence.
            LaurentPoly delta = alexander_poly(e.matrix);
            if (!equal_up_to_unit(involute(delta), delta))
                failure = "alexander polynomial not symmetric";
            mpq_class at_one = delta.eval(1);
            if (failure.empty() && at_one != 1 && at_one != -1)
                failure = "delta(1) is not a unit";
            if (failure.empty() && !is_hermitian(blanchfield_matrix(e.matrix)))
                failure = "blanchfield matrix is not hermitian";
            if (failure.empty()) {
                SeifertMatrix moved = random_s_equivalent(e.matrix, 3, rng());
                if (!equal_up_to_unit(alexander_poly(moved), delta))
                    failure = "delta not preserved under S-equivalence moves";
                else if (invariant_factors(presentation(moved)) !=
                         invariant_factors(presentation(e.matrix)))
                    failure = "invariant factors not preserved under S-equivalence moves";
            }
        } catch (const Error& err) {
            failure = err.what();
        }
        if (failure.empty()) {
            out << "ok " << e.name << "\n";
            report.push_back(json{{"name", e.name}, {"ok", true}});
        } else {
            out << "FAIL " << e.name << ": " << failure << "\n";
            report.push_back(json{{"name", e.name}, {"ok", false}, {"error", failure}});
            ok = false;
        }
    }
    out << (ok ? "corpus ok" : "corpus has failures") << " (" << corpus.entries.size()
        << " entries)\n";
    if (ctx.as_json) out << report.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx;
    ctx.out = &out;

    CLI::App app{"exact knot invariants: Alexander modules, Blanchfield forms, "
                 "Levine-Tristram signatures, and infection comparisons"};
    app.require_subcommand(1);
    app.add_flag("--json", ctx.as_json, "machine-readable JSON output");
    app.add_flag("--approx", ctx.approx, "add decimal renderings next to exact values");
    app.add_option("--corpus", ctx.corpus_path, "corpus JSON file for resolving knot names");

    std::string knot, knot2, s_arg, omega_arg, word_arg, eps_arg = "1/1000000";
    std::string base, eta_arg, j1, j2, corpus_path;
    unsigned moves = 3;
    std::uint64_t seed = 1;
    int level = 1, rank = 2, witness = -1, order_n = 1;

    auto* alex = app.add_subcommand("alex", "Alexander polynomial and invariant factors");
    alex->add_option("knot", knot)->required();

    auto* iso = app.add_subcommand("iso", "compare rationalized Alexander modules");
    iso->add_option("knot1", knot)->required();
    iso->add_option("knot2", knot2)->required();

    auto* blanch = app.add_subcommand("blanchfield", "Blanchfield pairing matrix");
    blanch->add_option("knot", knot)->required();

    auto* sig = app.add_subcommand("sig", "Levine-Tristram signature at one circle point");
    sig->add_option("knot", knot)->required();
    auto* s_opt = sig->add_option("--s", s_arg, "rational circle parameter s");
    sig->add_option("--omega", omega_arg, "exact circle point \"re,im\"")->excludes(s_opt);

    auto* prof = app.add_subcommand("sig-profile", "arc decomposition of the signature function");
    prof->add_option("knot", knot)->required();

    auto* integral = app.add_subcommand("sig-integral",
                                        "integral of the signatures over the unit-length circle");
    integral->add_option("knot", knot)->required();
    integral->add_option("--eps", eps_arg, "certified width target (rational)");

    auto* sequiv = app.add_subcommand("s-equiv", "apply random S-equivalence moves");
    sequiv->add_option("knot", knot)->required();
    sequiv->add_option("--moves", moves, "number of moves");
    sequiv->add_option("--seed", seed, "random seed");

    auto* derived = app.add_subcommand("derived", "derived-series membership for free-group words");
    derived->add_option("--word", word_arg, "word, e.g. \"a b A B\" or \"[a,b]\"");
    derived->add_option("--level", level, "derived-series level n");
    derived->add_option("--rank", rank, "free-group rank (default 2)");
    derived->add_option("--witness", witness, "emit a verified witness for this level instead");

    auto* infect = app.add_subcommand("infect", "certified comparison of two infections");
    infect->add_option("--base", base, "fibered base knot (catalog or fibered corpus entry)")
        ->required();
    infect->add_option("--eta", eta_arg, "infection curve as a word in the fiber group")
        ->required();
    infect->add_option("--n", order_n, "order of the comparison")->required();
    infect->add_option("--j1", j1, "first infecting knot")->required();
    infect->add_option("--j2", j2, "second infecting knot")->required();
    infect->add_option("--eps", eps_arg, "certified width target (rational)");

    auto* check = app.add_subcommand("corpus-check", "validate a corpus file and run the "
                                                     "cross-module invariant suite");
    check->add_option("path", corpus_path)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (alex->parsed()) cmd_alex(ctx, knot);
        else if (iso->parsed()) cmd_iso(ctx, knot, knot2);
        else if (blanch->parsed()) cmd_blanchfield(ctx, knot);
        else if (sig->parsed()) {
            if (s_arg.empty() && omega_arg.empty())
                throw ParseError("sig needs --s or --omega");
            cmd_sig(ctx, knot, s_arg, omega_arg);
        } else if (prof->parsed()) cmd_sig_profile(ctx, knot);
        else if (integral->parsed()) cmd_sig_integral(ctx, knot, eps_arg);
        else if (sequiv->parsed()) cmd_s_equiv(ctx, knot, moves, seed);
        else if (derived->parsed()) {
            if (word_arg.empty() && witness < 0)
                throw ParseError("derived needs --word or --witness");
            cmd_derived(ctx, word_arg, level, rank, witness);
        } else if (infect->parsed()) cmd_infect(ctx, base, eta_arg, order_n, j1, j2, eps_arg);
        else if (check->parsed()) return cmd_corpus_check(ctx, corpus_path);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace knotforms
