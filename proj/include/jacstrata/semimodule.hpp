#pragma once

#include <optional>
#include <vector>

#include "jacstrata/semigroup.hpp"

namespace jacstrata {

/// Monomial module F with C <= F <= O~, stored as its order set below the
/// conductor; the tail [v0, inf) is always implicitly present.  `shift`
/// carries degree bookkeeping for normalized / dualized modules: the module
/// originally seen was t^shift times this one.
class GammaSemimodule {
public:
    GammaSemimodule(SemigroupPtr parent, std::vector<uint8_t> below, int shift = 0);

    const NumericalSemigroup& parent() const { return *parent_; }
    SemigroupPtr parent_ptr() const { return parent_; }

    bool contains(int n) const {
        if (n < 0) return false;
        if (n >= (int)below_.size()) return true;  // tail
        return below_[(size_t)n] != 0;
    }

    const std::vector<uint8_t>& below() const { return below_; }
    int shift() const { return shift_; }
    bool is_normalized() const { return contains(0); }

    /// Orders below the conductor, sorted ascending.
    std::vector<int> orders_below() const;

    /// Smallest order; v0 when the module is the conductor ideal itself.
    int min_order() const;

    /// Below-bitset read as an integer (bit i = membership of i); the
    /// canonical enumeration key.  Requires v0 <= 63.
    uint64_t below_mask() const;

    friend bool operator==(const GammaSemimodule& a, const GammaSemimodule& b) {
        return a.below_ == b.below_ && *a.parent_ == *b.parent_;
    }
    friend bool operator!=(const GammaSemimodule& a, const GammaSemimodule& b) {
        return !(a == b);
    }

private:
    SemigroupPtr parent_;
    std::vector<uint8_t> below_;
    int shift_ = 0;
};

enum class CreateMode { Validate, Generate };

/// Build a semimodule from elements of [0, v0).  Validate mode requires the
/// given set (plus tail) to already be stable under semigroup addition;
/// Generate mode closes the set and is never an error.
GammaSemimodule semimodule_create(SemigroupPtr s, const std::vector<int>& elements,
                                  CreateMode mode);

/// Shift so the smallest order becomes 0; the shift is recorded on the result.
GammaSemimodule normalize(const GammaSemimodule& m);

struct Ranks {
    int codim = 0;      // #([0, v0) \ Delta), the d of E(C, d)
    int rk_mod_c = 0;   // rk(F / C) = #(Delta below v0)
    int rk_mod_fc = 0;  // rk(F / FC) = #(Delta in [min, min + v0))
    int r = 0;          // rk_mod_fc - 1, the stratum parameter
};

Ranks ranks(const GammaSemimodule& m);

struct EndSemigroup {
    NumericalSemigroup end;  // {z >= 0 : z + Delta <= Delta}, always >= parent
    bool descends = false;   // v0 - 1 in End, i.e. End contains t^{-1}C
};

EndSemigroup end_semigroup(const GammaSemimodule& m);

/// Dual {z : z + Delta <= Gamma}, re-normalized; the (possibly negative)
/// normalization shift is recorded on the result.
GammaSemimodule dual(const GammaSemimodule& m);

/// The canonical one-step filtration: orders o_0 < o_1 < ... below v0
/// followed by v0, with F_j = {d in Delta : d >= o_j}.
struct FiltrationData {
    std::vector<int> orders;            // strictly increasing, last entry v0
    std::vector<GammaSemimodule> steps; // steps[j] = F_j; final step is C
};

FiltrationData canonical_filtration(const GammaSemimodule& m);

/// Monomial membership test for Filt(C, delta): the j-th order of Delta must
/// dominate the j-th semigroup element below the conductor.
/// Requires codim == delta.
bool in_filt_locus(const GammaSemimodule& m);

/// The dualizing module {z >= 0 : v0 - 1 - z not in Gamma}; equals Gamma
/// exactly in the symmetric (Gorenstein) case.
GammaSemimodule dualizing_semimodule(SemigroupPtr s);

struct EnumOptions {
    std::optional<int> codim;     // keep only modules of this codimension
    bool normalized_only = false; // keep only modules containing 0
};

/// Exhaustive, duplicate-free enumeration of all monomial modules over s, in
/// canonical order (below-bitset as integer, ascending).  May run in parallel
/// internally; the output order never depends on the schedule.
std::vector<GammaSemimodule> enumerate_semimodules(SemigroupPtr s,
                                                   const EnumOptions& opt = {});

/// Single-threaded reference enumeration; kept as the oracle the parallel
/// kernel is tested and benchmarked against.
std::vector<GammaSemimodule> enumerate_semimodules_serial(SemigroupPtr s,
                                                          const EnumOptions& opt = {});

}  // namespace jacstrata
