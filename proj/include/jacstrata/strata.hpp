#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacstrata/semimodule.hpp"

namespace jacstrata {

enum class PSplit { P1, P2, NotApplicable };

/// One annotated fixed point inside a stratum.
struct ModuleAnnotation {
    GammaSemimodule module;
    Ranks rk;
    bool descends = false;        // End contains t^{-1}C
    bool end_is_gamma = false;    // End equals the semigroup itself
    NumericalSemigroup end;
    std::optional<bool> in_filt;  // set when codim == delta
    std::optional<PSplit> p_split;// set for rkMC1_M1C1 curves
};

struct Stratum {
    int r = 0;
    std::vector<ModuleAnnotation> modules;   // canonical order
    bool descending_only = false;            // every member descends
    std::optional<size_t> witness;           // least non-descending member
};

/// Stratification of the normalized fixed points by r = rk(F / FC) - 1.
struct StratumReport {
    int min_components = 0;              // 2 delta - v0 + 1
    int r_lo = 0, r_hi = 0;              // the range [gamma-1, delta-1]
    std::vector<Stratum> strata;         // ascending r, nonempty strata only
    std::vector<int> extra_strata;       // nonempty r outside [r_lo, r_hi]
    bool witnesses_complete = false;     // every r in range has a witness
};

StratumReport stratify(SemigroupPtr s);

/// Split of a normalized module by the order of its first proper
/// filtration step: P1 when the second order is 1, P2 when it is >= 2.
PSplit p_split(const NumericalSemigroup& s, const GammaSemimodule& m);

/// Closure-membership test for the P2 strata, on a non-normalized
/// representative with ord >= 1: either ord = 1 and the module contains
/// t^{k1+1} O~, or ord >= 2 and the last order is at least k1.
bool p2_closure_predicate(const NumericalSemigroup& s, const GammaSemimodule& m);

/// Test for a point lying in the closures of two consecutive P2 strata:
/// F inside t O~ with rk(F/C) = r+1 and second order at least 3.
bool p2_overlap_predicate(const NumericalSemigroup& s, const GammaSemimodule& m, int r);

/// Component witness for rkMC1_M1C1 curves: the module generated by
/// {0, 2, 3, ..., i}.  Lands in stratum r = i with split P2; one such
/// witness per stratum shows the strata are pairwise distinct.
GammaSemimodule stratum_component_witness(SemigroupPtr s, int i);

/// Boundary condition for Gorenstein curves with M' = C': a point of
/// E(C, delta) with ord = r >= 1 lies over the normalized curve's stratum
/// r-1 exactly when its second order is >= k1 and #(Delta in [k1, k1+r))
/// is r - 1.
bool gorenstein_boundary_predicate(const NumericalSemigroup& s, const GammaSemimodule& m);

/// Containment DAG of the open and closure graphs for M = C curves.  Nodes
/// are (normalization level, stratum); an open edge points one level up at
/// the same stratum, closure edges add the diagonal step to stratum r+1.
struct StrataDag {
    struct Node { int level; int r; };
    enum class EdgeKind { Open, Closure };
    struct Edge { size_t from; size_t to; EdgeKind kind; };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
};

StrataDag strata_dag(const NumericalSemigroup& s);

/// DOT serialization; solid edges for the open graph, dashed for closures.
std::string to_dot(const StrataDag& dag);

/// Re-read a module over the i-th partial normalization as a module over the
/// base semigroup.  Stability is inherited; the degree bookkeeping records
/// the drop -i = -rk(O^i / O).
struct PushforwardResult {
    GammaSemimodule module;
    int degree_offset = 0;
};

PushforwardResult pushforward(const NormalizationChain& chain, int level,
                              const GammaSemimodule& m);

}  // namespace jacstrata
