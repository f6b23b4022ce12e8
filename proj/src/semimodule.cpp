#include "jacstrata/semimodule.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jacstrata {

GammaSemimodule::GammaSemimodule(SemigroupPtr parent, std::vector<uint8_t> below, int shift)
    : parent_(std::move(parent)), below_(std::move(below)), shift_(shift) {
    if ((int)below_.size() != parent_->conductor())
        throw Error(ErrorCode::OutOfRange, "below-set size must equal the conductor");
}

std::vector<int> GammaSemimodule::orders_below() const {
    std::vector<int> o;
    for (int i = 0; i < (int)below_.size(); ++i)
        if (below_[(size_t)i]) o.push_back(i);
    return o;
}

int GammaSemimodule::min_order() const {
    for (int i = 0; i < (int)below_.size(); ++i)
        if (below_[(size_t)i]) return i;
    return parent_->conductor();
}

uint64_t GammaSemimodule::below_mask() const {
    if (below_.size() > 63)
        throw Error(ErrorCode::TooLarge, "below_mask requires conductor <= 63");
    uint64_t m = 0;
    for (size_t i = 0; i < below_.size(); ++i)
        if (below_[i]) m |= (uint64_t)1 << i;
    return m;
}

GammaSemimodule semimodule_create(SemigroupPtr s, const std::vector<int>& elements,
                                  CreateMode mode) {
    const int v0 = s->conductor();
    std::vector<uint8_t> below((size_t)v0, 0);
    for (int e : elements) {
        if (e < 0 || e >= v0)
            throw Error(ErrorCode::OutOfRange,
                        "element " + std::to_string(e) + " outside [0, v0)");
        below[(size_t)e] = 1;
    }

    if (mode == CreateMode::Generate) {
        for (int d = 0; d < v0; ++d) {
            if (!below[(size_t)d]) continue;
            for (int g : s->generators())
                if (d + g < v0) below[(size_t)(d + g)] = 1;
        }
    } else {
        for (int d = 0; d < v0; ++d) {
            if (!below[(size_t)d]) continue;
            for (int g : s->generators())
                if (d + g < v0 && !below[(size_t)(d + g)])
                    throw Error(ErrorCode::NotStable,
                                "set is not stable: " + std::to_string(d) + " + " +
                                    std::to_string(g) + " missing");
        }
    }
    return GammaSemimodule(std::move(s), std::move(below));
}

GammaSemimodule normalize(const GammaSemimodule& m) {
    const int v0 = m.parent().conductor();
    const int m0 = m.min_order();
    if (m0 == 0) return m;
    std::vector<uint8_t> below((size_t)v0, 0);
    for (int x = 0; x < v0; ++x) below[(size_t)x] = m.contains(x + m0) ? 1 : 0;
    return GammaSemimodule(m.parent_ptr(), std::move(below), m.shift() + m0);
}

Ranks ranks(const GammaSemimodule& m) {
    Ranks r;
    const int v0 = m.parent().conductor();
    for (int i = 0; i < v0; ++i)
        if (m.contains(i)) ++r.rk_mod_c;
    r.codim = v0 - r.rk_mod_c;
    r.rk_mod_fc = r.rk_mod_c + m.min_order();  // tail fills [v0, min + v0)
    r.r = r.rk_mod_fc - 1;
    return r;
}

EndSemigroup end_semigroup(const GammaSemimodule& m) {
    const int v0 = m.parent().conductor();
    const std::vector<int> orders = m.orders_below();
    std::vector<uint8_t> endset((size_t)std::max(v0, 1), 0);
    endset[0] = 1;
    for (int z = 0; z < v0; ++z) {
        bool ok = true;
        for (int d : orders)
            if (z + d < v0 && !m.contains(z + d)) { ok = false; break; }
        if (ok) endset[(size_t)z] = 1;
    }
    EndSemigroup e{NumericalSemigroup::from_elements(
                       std::vector<uint8_t>(endset.begin(), endset.begin() + v0), v0),
                   false};
    e.descends = v0 >= 1 && endset[(size_t)(v0 - 1)] != 0;
    return e;
}

GammaSemimodule dual(const GammaSemimodule& m) {
    const NumericalSemigroup& g = m.parent();
    const int v0 = g.conductor();
    const std::vector<int> orders = m.orders_below();
    const int m0 = m.min_order();

    auto ok = [&](int z) -> bool {
        for (int d : orders)
            if (!g.contains(z + d)) return false;
        if (z < 0)
            for (int x = v0 + z; x < v0; ++x)
                if (!g.contains(x)) return false;
        return true;
    };

    int mu = v0;  // dual always contains [v0, inf)
    for (int z = -m0; z < v0; ++z)
        if (ok(z)) { mu = z; break; }

    std::vector<uint8_t> below((size_t)v0, 0);
    for (int x = 0; x < v0; ++x) {
        const int z = x + mu;
        below[(size_t)x] = (z >= v0 || ok(z)) ? 1 : 0;
    }
    return GammaSemimodule(m.parent_ptr(), std::move(below), mu);
}

FiltrationData canonical_filtration(const GammaSemimodule& m) {
    const int v0 = m.parent().conductor();
    FiltrationData f;
    f.orders = m.orders_below();
    f.orders.push_back(v0);
    for (int o : f.orders) {
        std::vector<uint8_t> below((size_t)v0, 0);
        for (int x = o; x < v0; ++x) below[(size_t)x] = m.contains(x) ? 1 : 0;
        f.steps.emplace_back(m.parent_ptr(), std::move(below), m.shift());
    }
    return f;
}

bool in_filt_locus(const GammaSemimodule& m) {
    const NumericalSemigroup& g = m.parent();
    if (ranks(m).codim != g.delta())
        throw Error(ErrorCode::WrongCodim, "Filt membership is defined at codimension delta");
    const std::vector<int> orders = m.orders_below();
    const std::vector<int>& s = g.elements_below();
    for (size_t j = 0; j < orders.size(); ++j)
        if (orders[j] < s[j]) return false;
    return true;
}

GammaSemimodule dualizing_semimodule(SemigroupPtr s) {
    const int v0 = s->conductor();
    std::vector<uint8_t> below((size_t)v0, 0);
    for (int z = 0; z < v0; ++z)
        below[(size_t)z] = s->contains(v0 - 1 - z) ? 0 : 1;
    return GammaSemimodule(std::move(s), std::move(below));
}

// ---------------------------------------------------------------------------
// Enumeration.
//
// Positions v0-1 down to 0 are decided in order, absent before present, which
// emits below-masks in ascending integer order.  Deciding a position absent
// forbids every lower position that would force it back in (i + g = p), so
// every leaf reached is stable and no post-filter is needed.
// ---------------------------------------------------------------------------

namespace {

struct EnumContext {
    const NumericalSemigroup* s = nullptr;
    SemigroupPtr sp;
    int v0 = 0;
    std::optional<int> codim;
    bool normalized_only = false;
};

void enum_dfs(const EnumContext& ctx, int pos, uint64_t mask, int absent,
              std::vector<int>& forbidden, std::vector<GammaSemimodule>& out) {
    if (ctx.codim) {
        if (absent > *ctx.codim) return;
        if (absent + pos + 1 < *ctx.codim) return;  // cannot reach the target
    }
    if (pos < 0) {
        if (ctx.codim && absent != *ctx.codim) return;
        if (ctx.normalized_only && !(mask & 1)) return;
        std::vector<uint8_t> below((size_t)ctx.v0, 0);
        for (int i = 0; i < ctx.v0; ++i)
            if (mask & ((uint64_t)1 << i)) below[(size_t)i] = 1;
        out.emplace_back(ctx.sp, std::move(below));
        return;
    }

    // absent branch
    {
        std::vector<int> touched;
        for (int g : ctx.s->generators()) {
            const int p = pos - g;
            if (p >= 0) { ++forbidden[(size_t)p]; touched.push_back(p); }
        }
        enum_dfs(ctx, pos - 1, mask, absent + 1, forbidden, out);
        for (int p : touched) --forbidden[(size_t)p];
    }
    // present branch
    if (forbidden[(size_t)pos] == 0)
        enum_dfs(ctx, pos - 1, mask | ((uint64_t)1 << pos), absent, forbidden, out);
}

}  // namespace

std::vector<GammaSemimodule> enumerate_semimodules_serial(SemigroupPtr s,
                                                          const EnumOptions& opt) {
    const int v0 = s->conductor();
    if (v0 > 24)
        throw Error(ErrorCode::TooLarge, "enumeration is limited to conductor <= 24");
    EnumContext ctx{s.get(), s, v0, opt.codim, opt.normalized_only};
    std::vector<int> forbidden((size_t)std::max(v0, 1), 0);
    std::vector<GammaSemimodule> out;
    enum_dfs(ctx, v0 - 1, 0, 0, forbidden, out);
    return out;
}

std::vector<GammaSemimodule> enumerate_semimodules(SemigroupPtr s, const EnumOptions& opt) {
    const int v0 = s->conductor();
    if (v0 > 24)
        throw Error(ErrorCode::TooLarge, "enumeration is limited to conductor <= 24");
#ifndef _OPENMP
    return enumerate_semimodules_serial(s, opt);
#else
    if (v0 <= 6 || omp_get_max_threads() == 1) return enumerate_semimodules_serial(s, opt);

    const int k = std::min(v0 - 2, 10);  // split on the top k positions
    const int lo = v0 - k;
    const uint64_t nprefix = (uint64_t)1 << k;
    EnumContext ctx{s.get(), s, v0, opt.codim, opt.normalized_only};

    std::vector<std::vector<GammaSemimodule>> blocks((size_t)nprefix);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long pi = 0; pi < (long long)nprefix; ++pi) {
        std::vector<int> forbidden((size_t)v0, 0);
        uint64_t mask = 0;
        int absent = 0;
        bool feasible = true;
        for (int pos = v0 - 1; pos >= lo && feasible; --pos) {
            const int bit = (int)((pi >> (pos - lo)) & 1);
            if (bit) {
                if (forbidden[(size_t)pos]) { feasible = false; break; }
                mask |= (uint64_t)1 << pos;
            } else {
                ++absent;
                for (int g : ctx.s->generators()) {
                    const int p = pos - g;
                    if (p >= 0) ++forbidden[(size_t)p];
                }
            }
        }
        if (feasible)
            enum_dfs(ctx, lo - 1, mask, absent, forbidden, blocks[(size_t)pi]);
    }

    std::vector<GammaSemimodule> out;
    for (auto& b : blocks)
        for (auto& m : b) out.push_back(std::move(m));
    return out;
#endif
}

}  // namespace jacstrata
