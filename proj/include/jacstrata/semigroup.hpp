#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "jacstrata/errors.hpp"

namespace jacstrata {

/// Numerical semigroup: additively closed subset of the nonnegative integers
/// containing 0 with finite complement.  Models the value semigroup of a
/// monomial unibranch curve singularity; integers are t-orders throughout.
///
/// Immutable after construction, safe to share across threads.
class NumericalSemigroup {
public:
    /// Build from a generating set.  The minimal generating set is recomputed
    /// from the closure, so redundant input generators are harmless.
    /// 1 among the generators (the smooth case) is rejected unless
    /// allow_smooth is set; the smooth semigroup is needed internally as the
    /// endpoint of normalization chains.
    static NumericalSemigroup from_generators(const std::vector<int>& gens,
                                              bool allow_smooth = false);

    /// Build from an explicit membership set below a given conductor bound.
    /// below[i] says whether i is a member, for i in [0, c); everything >= c
    /// is a member.  The true conductor is recomputed.
    static NumericalSemigroup from_elements(const std::vector<uint8_t>& below, int c);

    bool contains(long long n) const {
        if (n < 0) return false;
        if (n >= (int)member_.size()) return true;  // bound exceeds conductor
        return member_[(size_t)n] != 0;
    }

    const std::vector<int>& generators() const { return generators_; }
    int conductor() const { return v0_; }  // v0: least c with [c, inf) contained
    int delta() const { return (int)gaps_.size(); }
    int gamma() const { return v0_ - delta(); }
    const std::vector<int>& gaps() const { return gaps_; }
    const std::vector<int>& elements_below() const { return below_; }
    int multiplicity() const { return generators_.empty() ? 0 : generators_.front(); }
    bool is_smooth() const { return v0_ == 0; }
    int bound() const { return (int)member_.size(); }

    /// i-th smallest element of the semigroup (s_0 = 0, s_1 = multiplicity, ...).
    int nth_element(int i) const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.v0_ == b.v0_ && a.gaps_ == b.gaps_;
    }
    friend bool operator!=(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return !(a == b);
    }
    /// Canonical order: lexicographic on gap sets.
    friend bool operator<(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gaps_ < b.gaps_;
    }

private:
    NumericalSemigroup() = default;
    void finalize(const std::vector<uint8_t>& member, int scan_bound);

    std::vector<int> generators_;       // minimal generating set
    std::vector<int> gaps_;             // complement, sorted
    std::vector<int> below_;            // members in [0, v0), sorted
    std::vector<uint8_t> member_;       // membership over [0, v0 + max gen + 1)
    int v0_ = 0;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

inline SemigroupPtr make_semigroup(const std::vector<int>& gens, bool allow_smooth = false) {
    return std::make_shared<const NumericalSemigroup>(
        NumericalSemigroup::from_generators(gens, allow_smooth));
}

/// Classical identities tying gaps, conductor and symmetry together.  Every
/// flag must hold for a valid semigroup; a false flag indicates an
/// implementation bug and is surfaced, never hidden.
struct IdentityReport {
    bool gap_count_is_delta = false;       // #gaps == delta
    bool below_count_is_gamma = false;     // #(members < v0) == gamma
    bool forward_symmetry = false;         // j in S => v0-1-j not in S
    bool conductor_bounds = false;         // delta-1 <= v0 <= 2 delta
    int symmetric_gap_pairs = 0;           // #{j : j, v0-1-j both gaps}
    bool pair_count_matches = false;       // count == 2 delta - v0

    bool all_hold() const {
        return gap_count_is_delta && below_count_is_gamma && forward_symmetry &&
               conductor_bounds && pair_count_matches;
    }
};

IdentityReport check_identities(const NumericalSemigroup& s);

/// Gorenstein test: j in S iff v0-1-j not in S, for all j below the conductor.
bool is_symmetric(const NumericalSemigroup& s);

/// Three equivalent ways of saying the members below the conductor form
/// the arithmetic progression 0, k1, 2 k1, ...; evaluated independently:
///   (i)  v0 == s_{gamma-1} + s_1
///   (ii) s_i == i * s_1 for all i <= gamma
///   (iii) rk(M / (M^2 + tC)) == 1
/// with s_i the i-th smallest semigroup element.  Their equivalence is an
/// invariant checked by the test suite, never assumed here.
std::array<bool, 3> arithmetic_progression_conditions(const NumericalSemigroup& s);

/// Chain of partial normalizations S = S^0, S^1, ..., N, each step adjoining
/// [cond - 1, inf); delta drops by exactly one per step.
struct NormalizationChain {
    std::vector<NumericalSemigroup> steps;
    std::vector<int> deltas;
};

NormalizationChain normalization_chain(const NumericalSemigroup& s);

/// Curve-type tags keyed to the structure of S and of its first partial
/// normalization.  Exactly one of the class tags holds, except that
/// locally_planar may co-occur with m_equals_c (e.g. <2,3>).
struct TypeTags {
    bool locally_planar = false;   // at most 2 minimal generators
    bool m_equals_c = false;       // S = {0} + [v0, inf)
    bool gorenstein_m1c1 = false;  // symmetric and M^1 = C^1; S = <k1..2k1-2>
    bool rk_mc1_m1c1 = false;      // S = {0, k1} + [k1+2, inf)
    bool general = false;
    bool smooth = false;

    std::string primary() const {
        if (smooth) return "smooth";
        if (m_equals_c) return "M_equals_C";
        if (gorenstein_m1c1) return "gorenstein_M1C1";
        if (rk_mc1_m1c1) return "rkMC1_M1C1";
        if (locally_planar) return "locally_planar";
        return "general";
    }
};

TypeTags classify_type(const NumericalSemigroup& s);

}  // namespace jacstrata
