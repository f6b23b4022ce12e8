#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacstrata/poly.hpp"
#include "jacstrata/semimodule.hpp"

namespace jacstrata {

/// One-parameter family of units of O~ tensored with k(b): a sum of terms
/// c * b^w * t^j with exact rational arithmetic in b.  The t-order over the
/// function field must be 0, so the generic member generates a free module of
/// the right codimension.
struct DeformationFamily {
    std::vector<BPoly> coeff;      // index j in [0, v0]; coefficient of t^j
    bool truncated_terms = false;  // t-exponents above v0 were dropped

    bool is_unit() const { return !coeff.empty() && !coeff[0].is_zero(); }

    /// Canonical rendering, terms by ascending t-exponent.
    std::string expr() const;

    friend bool operator==(const DeformationFamily& a, const DeformationFamily& b) {
        return a.coeff == b.coeff;
    }
};

/// Parse `sum of [sign][c][*][t^i][*][b^j]` with whitespace ignored.
/// t-exponents above v0 are truncated with a warning flag, not an error.
DeformationFamily parse_family(const std::string& expr, const NumericalSemigroup& s);

/// The family's module reduced mod C: one row per semigroup element below the
/// conductor, columns t^0 .. t^{v0-1}.
struct PolyLattice {
    int cols = 0;
    std::vector<std::vector<BPoly>> rows;
    int generic_rank = 0;  // rank over the fraction field Q(b)
};

PolyLattice build_lattice(const NumericalSemigroup& s, const DeformationFamily& fam);

/// Saturate at b = 0: repeatedly find a rational combination of rows that
/// vanishes at b = 0, replace the dying row by (combination)/b.  The row span
/// over Q(b) is unchanged and the b = 0 evaluations end up independent.
PolyLattice saturate_lattice(PolyLattice lattice);

struct LimitResult {
    bool monomial = false;
    std::optional<GammaSemimodule> module;        // set when monomial
    std::vector<std::vector<Rational>> basis;     // reduced echelon at b = 0
    std::vector<int> orders;                      // pivot columns, ascending
    int codim = 0;
};

/// Flat limit of the family at b = 0, computed by saturation in the
/// truncation O~/C; always invariant under the multiplication operators.
LimitResult flat_limit(SemigroupPtr s, const DeformationFamily& fam);

struct SearchBudget {
    int max_b_degree = 1;
    int max_support = 2;
    std::vector<long long> coefficients{1};

    std::string describe() const;
};

/// Exhaustive search for a one-parameter family whose flat limit equals the
/// target, over patterns c_j b^{w_j} t^j within the budget.  A None result
/// means "no certificate within budget", never a proof of non-membership.
/// Parallel sweep; the returned family is the one earliest in canonical
/// pattern order regardless of the schedule.
std::optional<DeformationFamily> certificate_search(SemigroupPtr s,
                                                    const GammaSemimodule& target,
                                                    const SearchBudget& budget);

/// Single-threaded reference sweep for the same pattern space.
std::optional<DeformationFamily> certificate_search_serial(SemigroupPtr s,
                                                           const GammaSemimodule& target,
                                                           const SearchBudget& budget);

struct FiltCertEntry {
    GammaSemimodule module;
    bool found = false;
    std::optional<DeformationFamily> family;
    int rung = -1;  // index of the first budget rung that certified it
};

struct FiltCertReport {
    std::vector<SearchBudget> ladder;
    std::vector<FiltCertEntry> entries;  // canonical module order
    bool all_found = false;
};

/// Budget ladder the report walks per fixed point, smallest first.
std::vector<SearchBudget> default_ladder();

/// For every monomial fixed point of Filt(C, delta), search the ladder for a
/// boundary certificate and report found / not-found within budget.
FiltCertReport filt_certificate_report(SemigroupPtr s,
                                       const std::vector<SearchBudget>& ladder =
                                           default_ladder());

}  // namespace jacstrata
