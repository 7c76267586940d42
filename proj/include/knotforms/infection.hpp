#pragma once

#include <string>
#include <vector>

#include "knotforms/freeword.hpp"
#include "knotforms/laurent.hpp"
#include "knotforms/seifert.hpp"
#include "knotforms/signatures.hpp"

namespace knotforms {

// A fibered knot: its Seifert matrix together with the rank of the free
// commutator subgroup of the exterior, which equals twice the fiber genus.
struct FiberedKnotRecord {
    SeifertMatrix seifert;
    int fiber_rank;
    std::string name;

    FiberedKnotRecord(SeifertMatrix s, std::string n);
};

FiberedKnotRecord fibered_catalog(const std::string& name);  // UnknownName

// Data of the satellite comparison: infect the fibered base knot along the
// curve eta (a word in the fiber group) at order n, once with j1 and once
// with j2.
struct InfectionSpec {
    FiberedKnotRecord base;
    FreeWord eta;
    int order_n;
    SeifertMatrix j1, j2;

    InfectionSpec(FiberedKnotRecord b, FreeWord e, int n, SeifertMatrix a, SeifertMatrix c);
};

enum class BlnComparison { Distinguished, Inconclusive };

// Certified comparison output. Distinguished is a theorem-backed
// certificate that the nth-order linking forms differ; Inconclusive never
// claims they agree.
struct Verdict {
    bool eta_valid = false;
    bool modules_agree_through_n = false;
    bool lower_forms_agree = false;
    BlnComparison bln_distinguished = BlnComparison::Inconclusive;
    CertifiedInterval rho1{0, 0}, rho2{0, 0};
    std::vector<LaurentPoly> j1_factors, j2_factors;
    std::vector<std::string> notes;
};

// eta lies in the n-th but not the (n+1)-st derived subgroup of the knot
// group: with the commutator subgroup free of rank k, this is membership in
// F_k^(n-1) minus F_k^(n).
bool validate_eta(const InfectionSpec& spec);

// The two infections have isomorphic i-th order Alexander modules for
// 0 <= i <= n; reduces to isomorphism of the classical modules of j1, j2.
bool modules_agree(const InfectionSpec& spec);

// Full decision procedure; eps controls the certified width of the two
// signature integrals. NotFibered when the fiber rank is below 2.
Verdict verdict(const InfectionSpec& spec, const mpq_class& eps);

}  // namespace knotforms
