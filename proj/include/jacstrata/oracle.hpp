#pragma once

#include <map>
#include <vector>

#include "jacstrata/semimodule.hpp"

namespace jacstrata {

/// A point of E(C, d) over a small prime field: a subspace of the
/// v0-dimensional truncation O~/C, closed under every shift operator t^{k_i},
/// stored as a reduced-echelon basis.  The pivot columns are the order
/// sequence of the corresponding module.
struct InvariantSubspace {
    int q = 2;
    std::vector<int> pivots;                   // ascending; dim = pivots.size()
    std::vector<std::vector<uint8_t>> basis;   // reduced echelon rows over F_q
    bool monomial = false;                     // coordinate subspace
};

/// Exhaustive enumeration of the codimension-d invariant subspaces over F_q,
/// by echelon pivot pattern with invariance rejection.  Canonical order:
/// pivot set lexicographic, then free entries as a base-q counter.
/// Feasibility bound: v0 <= 8 and q in {2, 3}.
std::vector<InvariantSubspace> enumerate_invariant_subspaces(const NumericalSemigroup& s,
                                                             int q, int d);

/// Single-threaded reference enumeration, kept for tests and benchmarks.
std::vector<InvariantSubspace> enumerate_invariant_subspaces_serial(
    const NumericalSemigroup& s, int q, int d);

/// Ground-truth report at codimension delta: order sequences, Filt counts,
/// per-stratum counts, and the cross-check that coordinate subspaces match
/// the monomial enumeration exactly.
struct OracleReport {
    int q = 2;
    int codim = 0;
    long long count = 0;
    long long monomial_count = 0;
    long long filt_count = 0;
    long long monomial_filt_count = 0;
    bool orders_strictly_increasing = false;
    std::map<int, long long> per_stratum;      // r -> count
    bool monomial_matches_enumeration = false; // bijection with semimodules
    bool filt_flags_agree = false;             // monomial Filt flag == in_filt_locus
};

OracleReport oracle_report(SemigroupPtr s, int q);

}  // namespace jacstrata
