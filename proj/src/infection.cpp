#include "knotforms/infection.hpp"

#include "knotforms/alexander.hpp"
#include "knotforms/magnus.hpp"

namespace knotforms {

FiberedKnotRecord::FiberedKnotRecord(SeifertMatrix s, std::string n)
    : seifert(std::move(s)), fiber_rank(static_cast<int>(seifert.size())), name(std::move(n)) {}

FiberedKnotRecord fibered_catalog(const std::string& name) {
    if (!catalog_is_fibered(name)) throw UnknownName(name + " (not marked fibered)");
    return FiberedKnotRecord(catalog(name), name);
}

InfectionSpec::InfectionSpec(FiberedKnotRecord b, FreeWord e, int n, SeifertMatrix a,
                             SeifertMatrix c)
    : base(std::move(b)), eta(std::move(e)), order_n(n), j1(std::move(a)), j2(std::move(c)) {
    if (base.fiber_rank < 2) throw NotFibered();
    if (eta.rank() != base.fiber_rank)
        throw InvalidEta("eta has rank " + std::to_string(eta.rank()) + ", fiber rank is " +
                         std::to_string(base.fiber_rank));
    if (order_n < 1) throw InvalidEta("order n must be at least 1");
}

bool validate_eta(const InfectionSpec& spec) {
    // G^(m) corresponds to F^(m-1) under G' ~ F: eta in G^(n) \ G^(n+1).
    return in_derived(spec.eta, spec.order_n - 1) && !in_derived(spec.eta, spec.order_n);
}

bool modules_agree(const InfectionSpec& spec) {
    return modules_isomorphic(spec.j1, spec.j2);
}

Verdict verdict(const InfectionSpec& spec, const mpq_class& eps) {
    if (spec.base.fiber_rank < 2) throw NotFibered();
    Verdict v;
    v.eta_valid = validate_eta(spec);
    v.j1_factors = invariant_factors(presentation(spec.j1));
    v.j2_factors = invariant_factors(presentation(spec.j2));
    v.modules_agree_through_n = v.eta_valid && v.j1_factors == v.j2_factors;
    v.lower_forms_agree = v.eta_valid;
    v.rho1 = signature_integral(spec.j1, eps);
    v.rho2 = signature_integral(spec.j2, eps);

    const bool disjoint = v.rho1.hi < v.rho2.lo || v.rho2.hi < v.rho1.lo;
    if (v.eta_valid && v.modules_agree_through_n && disjoint)
        v.bln_distinguished = BlnComparison::Distinguished;

    if (!v.eta_valid) {
        v.notes.push_back(
            "eta does not lie in G^(n) \\ G^(n+1) of the base knot group; the comparison "
            "criterion does not apply");
        return v;
    }
    v.notes.push_back(
        "order-i Alexander modules of the two infections agree for 0 <= i <= n: both equal "
        "A_i(base) below n, and at order n both equal A_n(base) + A_0(J) tensored over the "
        "order-n solvable quotient, using that J1 and J2 have isomorphic classical modules");
    v.notes.push_back(
        "order-i linking forms of the two infections agree with the base knot's for "
        "0 <= i <= n-1, induced by the degree-one maps back to the base exterior");
    if (v.bln_distinguished == BlnComparison::Distinguished) {
        v.notes.push_back(
            "order-n linking forms differ: for a fibered nontrivial base, isomorphic forms "
            "would force equal Levine-Tristram signature integrals of the infecting knots, "
            "and the certified integrals are disjoint");
    } else {
        v.notes.push_back(
            "signature integrals do not separate the infecting knots at this precision; the "
            "criterion is sufficient, not necessary, so no conclusion is drawn");
    }
    bool literal_mirror_pair = spec.j2 == inverse(spec.j1) || spec.j1 == inverse(spec.j2);
    if (!literal_mirror_pair) {
        v.notes.push_back(
            "note: J2 is not the exact concordance inverse -J1; the general unequal-integral "
            "criterion is applied instead of the mirrored-pair statement");
    }
    return v;
}

}  // namespace knotforms
