#include "jacstrata/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace jacstrata {

namespace {

// Additive closure of {0} + gens over [0, bound).
std::vector<uint8_t> close_under_addition(const std::vector<int>& gens, int bound) {
    std::vector<uint8_t> m((size_t)bound, 0);
    m[0] = 1;
    for (int i = 0; i < bound; ++i) {
        if (!m[(size_t)i]) continue;
        for (int g : gens)
            if (i + g < bound) m[(size_t)(i + g)] = 1;
    }
    return m;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<int>& gens,
                                                       bool allow_smooth) {
    if (gens.empty())
        throw Error(ErrorCode::EmptyGenerators, "generator list is empty");
    for (int g : gens)
        if (g < 1) throw Error(ErrorCode::OutOfRange, "generators must be positive");

    std::vector<int> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    if (sorted.front() == 1 && !allow_smooth)
        throw Error(ErrorCode::OutOfRange,
                    "1 generates the smooth semigroup; pass allow_smooth to accept it");

    int g = 0;
    for (int x : sorted) g = std::gcd(g, x);
    if (g != 1)
        throw Error(ErrorCode::NonCoprime, "gcd of generators is " + std::to_string(g) +
                                               "; conductor would be infinite");

    const int mult = sorted.front();
    const int maxg = sorted.back();

    // A run of `mult` consecutive members proves the tail has started.  Start
    // from the classical (a-1)(b-1) bound and double if it ever falls short.
    int bound = (mult - 1) * (maxg - 1) + maxg + 2;
    for (;;) {
        std::vector<uint8_t> m = close_under_addition(sorted, bound);
        int run = 0;
        for (int i = 0; i < bound; ++i) {
            run = m[(size_t)i] ? run + 1 : 0;
            if (run >= mult) {
                NumericalSemigroup s;
                s.finalize(m, i + 1);
                return s;
            }
        }
        bound *= 2;
    }
}

NumericalSemigroup NumericalSemigroup::from_elements(const std::vector<uint8_t>& below, int c) {
    if (c < 0) throw Error(ErrorCode::OutOfRange, "negative conductor bound");
    std::vector<uint8_t> m = below;
    m.resize((size_t)c, 0);
    if (c > 0) m[0] = 1;
    // validate additive closure below c (sums reaching past c are members)
    for (int a = 1; a < c; ++a) {
        if (!m[(size_t)a]) continue;
        for (int b = a; a + b < c; ++b)
            if (m[(size_t)b] && !m[(size_t)(a + b)])
                throw Error(ErrorCode::NotStable, "element set is not additively closed");
    }
    NumericalSemigroup s;
    std::vector<uint8_t> ext = m;
    ext.resize((size_t)c + 1, 1);  // ensure the tail is visible to finalize
    s.finalize(ext, c + 1);
    return s;
}

void NumericalSemigroup::finalize(const std::vector<uint8_t>& member, int scan_bound) {
    // true conductor = last gap + 1
    int v0 = 0;
    for (int i = 0; i < scan_bound; ++i)
        if (!member[(size_t)i]) v0 = i + 1;
    v0_ = v0;

    gaps_.clear();
    below_.clear();
    for (int i = 0; i < v0_; ++i) {
        if (member[(size_t)i]) below_.push_back(i);
        else gaps_.push_back(i);
    }

    // Minimal generators live in [1, v0 + mult); recover mult first from the
    // smallest nonzero member.
    int mult = v0_ == 0 ? 1 : v0_;
    for (int x : below_)
        if (x > 0) { mult = std::min(mult, x); break; }

    const int gen_bound = v0_ + mult + 1;
    std::vector<uint8_t> m((size_t)gen_bound, 0);
    for (int i = 0; i < gen_bound; ++i)
        m[(size_t)i] = (i >= v0_) ? 1 : (i < (int)member.size() ? member[(size_t)i] : 1);

    generators_.clear();
    if (v0_ == 0) {
        generators_.push_back(1);
    } else {
        for (int x = 1; x < gen_bound; ++x) {
            if (!m[(size_t)x]) continue;
            bool decomposable = false;
            for (int a = 1; a <= x - a; ++a)
                if (m[(size_t)a] && m[(size_t)(x - a)] && x - a >= 1) { decomposable = true; break; }
            if (!decomposable) generators_.push_back(x);
        }
    }

    // Membership bitset with the documented bound v0 + max generator + 1.
    const int maxg = generators_.back();
    member_.assign((size_t)(v0_ + maxg + 1), 0);
    for (int i = 0; i < (int)member_.size(); ++i)
        member_[(size_t)i] = (i >= v0_) ? 1 : m[(size_t)i];
}

int NumericalSemigroup::nth_element(int i) const {
    if (i < 0) throw Error(ErrorCode::IndexOutOfRange, "negative element index");
    if (i < (int)below_.size()) return below_[(size_t)i];
    return v0_ + (i - (int)below_.size());  // tail elements are consecutive
}

IdentityReport check_identities(const NumericalSemigroup& s) {
    IdentityReport r;
    const int v0 = s.conductor();
    const int delta = s.delta();

    r.gap_count_is_delta = (int)s.gaps().size() == delta;
    r.below_count_is_gamma = (int)s.elements_below().size() == s.gamma();

    r.forward_symmetry = true;
    for (int j : s.elements_below())
        if (s.contains(v0 - 1 - j)) r.forward_symmetry = false;

    r.conductor_bounds = (delta - 1 <= v0) && (v0 <= 2 * delta);

    r.symmetric_gap_pairs = 0;
    for (int j = 0; j < v0; ++j)
        if (!s.contains(j) && !s.contains(v0 - 1 - j)) ++r.symmetric_gap_pairs;
    r.pair_count_matches = r.symmetric_gap_pairs == 2 * delta - v0;

    return r;
}

bool is_symmetric(const NumericalSemigroup& s) {
    const int v0 = s.conductor();
    for (int j = 0; j < v0; ++j)
        if (s.contains(j) == s.contains(v0 - 1 - j)) return false;
    return true;
}

std::array<bool, 3> arithmetic_progression_conditions(const NumericalSemigroup& s) {
    if (s.is_smooth()) return {false, false, false};  // conditions presume a singular point

    const int v0 = s.conductor();
    const int gamma = s.gamma();
    const int s1 = s.nth_element(1);

    bool cond_i = v0 == s.nth_element(gamma - 1) + s1;

    bool cond_ii = true;
    for (int i = 0; i <= gamma; ++i)
        if (s.nth_element(i) != i * s1) { cond_ii = false; break; }

    // rank of M / (M^2 + tC): members of M outside both M+M and [v0+1, inf)
    int rank = 0;
    for (int x : s.elements_below()) {
        if (x == 0) continue;
        bool in_m2 = false;
        for (int a = 1; a <= x - a && !in_m2; ++a)
            if (s.contains(a) && s.contains(x - a)) in_m2 = true;
        if (!in_m2) ++rank;
    }
    if (v0 >= 1 && s.contains(v0)) {
        // x = v0 is in M and below v0+1; check decomposability as well
        bool in_m2 = false;
        for (int a = 1; a <= v0 - a && !in_m2; ++a)
            if (s.contains(a) && s.contains(v0 - a)) in_m2 = true;
        if (!in_m2) ++rank;
    }
    bool cond_iii = rank == 1;

    return {cond_i, cond_ii, cond_iii};
}

NormalizationChain normalization_chain(const NumericalSemigroup& s) {
    NormalizationChain chain;
    chain.steps.push_back(s);
    chain.deltas.push_back(s.delta());
    while (!chain.steps.back().is_smooth()) {
        const NumericalSemigroup& cur = chain.steps.back();
        const int c = cur.conductor();
        std::vector<uint8_t> below((size_t)c, 0);
        for (int i = 0; i < c; ++i) below[(size_t)i] = cur.contains(i) ? 1 : 0;
        if (c >= 1) below[(size_t)(c - 1)] = 1;  // adjoin t^{-1} C
        NumericalSemigroup next = NumericalSemigroup::from_elements(below, c);
        chain.deltas.push_back(next.delta());
        chain.steps.push_back(std::move(next));
    }
    return chain;
}

TypeTags classify_type(const NumericalSemigroup& s) {
    TypeTags t;
    if (s.is_smooth()) {
        t.smooth = true;
        t.locally_planar = true;
        return t;
    }

    t.locally_planar = s.generators().size() <= 2;
    t.m_equals_c = s.gamma() == 1;  // S = {0} + [v0, inf)

    // M^1 = C^1 for the first partial normalization
    const int c = s.conductor();
    std::vector<uint8_t> below((size_t)c, 0);
    for (int i = 0; i < c; ++i) below[(size_t)i] = s.contains(i) ? 1 : 0;
    if (c >= 1) below[(size_t)(c - 1)] = 1;
    NumericalSemigroup s1 = NumericalSemigroup::from_elements(below, c);
    const bool m1_equals_c1 = !s1.is_smooth() && s1.gamma() == 1;

    if (!t.locally_planar && !t.m_equals_c) {
        if (is_symmetric(s) && m1_equals_c1) t.gorenstein_m1c1 = true;
        else if (s.gamma() == 2 && m1_equals_c1) t.rk_mc1_m1c1 = true;
    }
    t.general = !t.locally_planar && !t.m_equals_c && !t.gorenstein_m1c1 && !t.rk_mc1_m1c1;
    return t;
}

}  // namespace jacstrata
