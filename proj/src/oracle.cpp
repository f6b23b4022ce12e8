#include "jacstrata/oracle.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jacstrata {

namespace {

// Arithmetic tables for F_q, q prime and tiny.
struct Fq {
    int q;
    int add(int a, int b) const { return (a + b) % q; }
    int sub(int a, int b) const { return (a - b + q) % q; }
    int mul(int a, int b) const { return (a * b) % q; }
    int inv(int a) const {
        for (int x = 1; x < q; ++x)
            if (mul(a, x) == 1) return x;
        return 0;
    }
};

struct PivotPattern {
    std::vector<int> pivots;
    std::vector<std::pair<int, int>> free_cells;  // (row, col), row-major
};

// Reduce w against the echelon basis; true when w lies in the row span.
bool in_span(const Fq& f, const std::vector<std::vector<uint8_t>>& basis,
             const std::vector<int>& pivots, std::vector<uint8_t>& w) {
    const int cols = (int)w.size();
    for (int c = 0; c < cols; ++c) {
        if (!w[(size_t)c]) continue;
        int row = -1;
        for (size_t i = 0; i < pivots.size(); ++i)
            if (pivots[i] == c) { row = (int)i; break; }
        if (row < 0) return false;
        const int fac = w[(size_t)c];
        for (int cc = c; cc < cols; ++cc)
            w[(size_t)cc] = f.sub(w[(size_t)cc], f.mul(fac, basis[(size_t)row][(size_t)cc]));
    }
    return true;
}

bool invariant(const Fq& f, const NumericalSemigroup& s,
               const std::vector<std::vector<uint8_t>>& basis,
               const std::vector<int>& pivots) {
    const int v0 = s.conductor();
    for (int g : s.generators()) {
        if (g >= v0) continue;  // shift kills the whole truncation
        for (const auto& row : basis) {
            std::vector<uint8_t> w((size_t)v0, 0);
            for (int c = 0; c + g < v0; ++c) w[(size_t)(c + g)] = row[(size_t)c];
            if (!in_span(f, basis, pivots, w)) return false;
        }
    }
    return true;
}

void scan_pattern(const Fq& f, const NumericalSemigroup& s, const PivotPattern& pat,
                  std::vector<InvariantSubspace>& out) {
    const int v0 = s.conductor();
    const int k = (int)pat.pivots.size();
    const int nfree = (int)pat.free_cells.size();

    long long total = 1;
    for (int i = 0; i < nfree; ++i) total *= f.q;

    std::vector<std::vector<uint8_t>> basis((size_t)k, std::vector<uint8_t>((size_t)v0, 0));
    for (int i = 0; i < k; ++i) basis[(size_t)i][(size_t)pat.pivots[i]] = 1;

    for (long long counter = 0; counter < total; ++counter) {
        long long c = counter;
        for (int i = nfree - 1; i >= 0; --i) {
            basis[(size_t)pat.free_cells[(size_t)i].first]
                 [(size_t)pat.free_cells[(size_t)i].second] = (uint8_t)(c % f.q);
            c /= f.q;
        }
        if (!invariant(f, s, basis, pat.pivots)) continue;
        InvariantSubspace sub;
        sub.q = f.q;
        sub.pivots = pat.pivots;
        sub.basis = basis;
        sub.monomial = counter == 0;  // all free entries zero
        out.push_back(std::move(sub));
    }
}

std::vector<PivotPattern> pivot_patterns(const NumericalSemigroup& s, int d) {
    const int v0 = s.conductor();
    const int k = v0 - d;
    std::vector<PivotPattern> pats;
    std::vector<int> idx((size_t)std::max(k, 0));
    for (int i = 0; i < k; ++i) idx[(size_t)i] = i;
    if (k == 0) {
        pats.push_back({});
        return pats;
    }
    for (;;) {
        PivotPattern p;
        p.pivots = idx;
        for (int i = 0; i < k; ++i)
            for (int c = idx[(size_t)i] + 1; c < v0; ++c)
                if (!std::binary_search(idx.begin(), idx.end(), c))
                    p.free_cells.push_back({i, c});
        pats.push_back(std::move(p));
        // next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && idx[(size_t)i] == v0 - k + i) --i;
        if (i < 0) break;
        ++idx[(size_t)i];
        for (int j = i + 1; j < k; ++j) idx[(size_t)j] = idx[(size_t)j - 1] + 1;
    }
    return pats;
}

void check_feasible(const NumericalSemigroup& s, int q, int d) {
    if (s.conductor() > 8)
        throw Error(ErrorCode::TooLarge, "oracle enumeration is limited to v0 <= 8");
    if (q != 2 && q != 3)
        throw Error(ErrorCode::TooLarge, "oracle fields are limited to q in {2, 3}");
    if (d < 0 || d > s.conductor())
        throw Error(ErrorCode::OutOfRange, "codimension out of range");
}

}  // namespace

std::vector<InvariantSubspace> enumerate_invariant_subspaces_serial(
    const NumericalSemigroup& s, int q, int d) {
    check_feasible(s, q, d);
    const Fq f{q};
    std::vector<InvariantSubspace> out;
    for (const auto& pat : pivot_patterns(s, d)) scan_pattern(f, s, pat, out);
    return out;
}

std::vector<InvariantSubspace> enumerate_invariant_subspaces(const NumericalSemigroup& s,
                                                             int q, int d) {
    check_feasible(s, q, d);
#ifndef _OPENMP
    return enumerate_invariant_subspaces_serial(s, q, d);
#else
    const Fq f{q};
    const std::vector<PivotPattern> pats = pivot_patterns(s, d);
    std::vector<std::vector<InvariantSubspace>> blocks(pats.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)pats.size(); ++i)
        scan_pattern(f, s, pats[(size_t)i], blocks[(size_t)i]);
    std::vector<InvariantSubspace> out;
    for (auto& b : blocks)
        for (auto& x : b) out.push_back(std::move(x));
    return out;
#endif
}

OracleReport oracle_report(SemigroupPtr s, int q) {
    const int v0 = s->conductor();
    const int delta = s->delta();
    OracleReport rep;
    rep.q = q;
    rep.codim = delta;

    std::vector<InvariantSubspace> subs = enumerate_invariant_subspaces(*s, q, delta);
    rep.count = (long long)subs.size();

    const std::vector<int>& elems = s->elements_below();
    rep.orders_strictly_increasing = true;
    std::vector<std::vector<int>> monomial_pivots;
    for (const auto& sub : subs) {
        // pivot sets are strictly increasing by construction; the uniqueness
        // claim is that they have full length v0 - delta
        if ((int)sub.pivots.size() != v0 - delta) rep.orders_strictly_increasing = false;
        for (size_t i = 1; i < sub.pivots.size(); ++i)
            if (sub.pivots[i] <= sub.pivots[i - 1]) rep.orders_strictly_increasing = false;

        bool filt = true;
        for (size_t j = 0; j < sub.pivots.size(); ++j)
            if (sub.pivots[j] < elems[j]) filt = false;
        if (filt) ++rep.filt_count;

        const int ord = sub.pivots.empty() ? v0 : sub.pivots.front();
        const int r = (v0 - delta) + ord - 1;  // rk(F / FC) - 1
        ++rep.per_stratum[r];

        if (sub.monomial) {
            ++rep.monomial_count;
            if (filt) ++rep.monomial_filt_count;
            monomial_pivots.push_back(sub.pivots);
        }
    }

    EnumOptions opt;
    opt.codim = delta;
    std::vector<GammaSemimodule> mods = enumerate_semimodules(s, opt);
    std::vector<std::vector<int>> mod_orders;
    for (const auto& m : mods) mod_orders.push_back(m.orders_below());
    std::sort(monomial_pivots.begin(), monomial_pivots.end());
    std::sort(mod_orders.begin(), mod_orders.end());
    rep.monomial_matches_enumeration = monomial_pivots == mod_orders;

    rep.filt_flags_agree = true;
    for (const auto& m : mods) {
        const bool want = in_filt_locus(m);
        const std::vector<int> orders = m.orders_below();
        bool filt = true;
        for (size_t j = 0; j < orders.size(); ++j)
            if (orders[j] < elems[j]) filt = false;
        if (want != filt) rep.filt_flags_agree = false;
    }
    return rep;
}

}  // namespace jacstrata
