#include <doctest.h>

#include <set>

#include "jacstrata/semimodule.hpp"
#include "support/family.hpp"

using namespace jacstrata;

namespace {

std::vector<int> below_of(const GammaSemimodule& m) { return m.orders_below(); }

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("semimodule_create generate and validate") {
    auto s = make_semigroup({4, 5, 6});
    auto m = semimodule_create(s, {2, 4}, CreateMode::Generate);
    CHECK(below_of(m) == std::vector<int>{2, 4, 6, 7});

    auto p = make_semigroup({3, 4, 5});
    CHECK_NOTHROW(semimodule_create(p, {0, 1}, CreateMode::Validate));

    CHECK_THROWS_AS(semimodule_create(s, {2}, CreateMode::Validate), Error);
    CHECK_THROWS_AS(semimodule_create(s, {9}, CreateMode::Generate), Error);
}

TEST_CASE("normalize") {
    auto s = make_semigroup({4, 5, 6});
    auto m = semimodule_create(s, {1, 5, 6, 7}, CreateMode::Validate);  // t O'
    auto n = normalize(m);
    CHECK(below_of(n) == std::vector<int>{0, 4, 5, 6, 7});
    CHECK(n.shift() == 1);

    auto already = semimodule_create(s, {0, 4, 5, 6}, CreateMode::Validate);
    CHECK(normalize(already) == already);

    auto k = normalize(semimodule_create(s, {2, 4, 6, 7}, CreateMode::Validate));
    CHECK(below_of(k) == std::vector<int>{0, 2, 4, 5, 6, 7});
    CHECK(k.shift() == 2);
}

TEST_CASE("ranks") {
    auto s = make_semigroup({4, 5, 6});
    auto gamma_mod = semimodule_create(s, {0, 4, 5, 6}, CreateMode::Validate);
    auto rk = ranks(gamma_mod);
    CHECK(rk.codim == 4);
    CHECK(rk.r == 3);  // gamma - 1

    auto lim = semimodule_create(s, {2, 4, 6, 7}, CreateMode::Validate);
    auto rk2 = ranks(lim);
    CHECK(rk2.codim == 4);
    CHECK(rk2.rk_mod_fc == 6);
    CHECK(rk2.r == 5);

    auto p = make_semigroup({3, 4, 5});
    auto full = semimodule_create(p, {0, 1, 2}, CreateMode::Validate);
    CHECK(ranks(full).rk_mod_fc == 3);
    CHECK(ranks(full).r == 2);
}

TEST_CASE("end_semigroup") {
    auto p = make_semigroup({3, 4, 5});
    auto gamma_mod = semimodule_create(p, {0}, CreateMode::Validate);
    auto e0 = end_semigroup(gamma_mod);
    CHECK(e0.end == *p);
    CHECK_FALSE(e0.descends);

    auto m1 = semimodule_create(p, {0, 2}, CreateMode::Validate);
    auto e1 = end_semigroup(m1);
    CHECK(e1.descends);
    CHECK(e1.end.contains(2));

    auto m2 = semimodule_create(p, {0, 1}, CreateMode::Validate);
    auto e2 = end_semigroup(m2);
    CHECK_FALSE(e2.descends);
    CHECK(e2.end == *p);
}

TEST_CASE("dual") {
    auto s = make_semigroup({4, 5, 6});
    auto gamma_mod = semimodule_create(s, {0, 4, 5, 6}, CreateMode::Validate);
    CHECK(dual(gamma_mod) == gamma_mod);
    CHECK(dual(gamma_mod).shift() == 0);

    auto tilde = semimodule_create(s, {0, 1, 2, 3, 4, 5, 6, 7}, CreateMode::Validate);
    auto dt = dual(tilde);
    CHECK(dt.shift() == 8);
    CHECK(below_of(dt) == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});

    auto o1 = semimodule_create(s, {0, 4, 5, 6, 7}, CreateMode::Validate);  // O'
    auto d1 = dual(o1);
    CHECK(d1.shift() == 4);
    // raw dual {4,5,6} + tail, normalized by 4
    CHECK(below_of(d1) == std::vector<int>{0, 1, 2, 4, 5, 6, 7});
}

TEST_CASE("canonical filtration") {
    auto s = make_semigroup({4, 5, 6});
    auto gamma_mod = semimodule_create(s, {0, 4, 5, 6}, CreateMode::Validate);
    auto f = canonical_filtration(gamma_mod);
    CHECK(f.orders == std::vector<int>{0, 4, 5, 6, 8});
    REQUIRE(f.steps.size() == 5);
    CHECK(below_of(f.steps[1]) == std::vector<int>{4, 5, 6});
    CHECK(below_of(f.steps[4]).empty());  // the conductor ideal

    for (size_t j = 0; j + 1 < f.steps.size(); ++j)
        CHECK(ranks(f.steps[j]).rk_mod_c == ranks(f.steps[j + 1]).rk_mod_c + 1);
}

TEST_CASE("in_filt_locus") {
    auto s = make_semigroup({4, 5, 6});
    CHECK(in_filt_locus(semimodule_create(s, {0, 4, 5, 6}, CreateMode::Validate)));
    CHECK(in_filt_locus(semimodule_create(s, {2, 4, 6, 7}, CreateMode::Validate)));
    CHECK_FALSE(in_filt_locus(semimodule_create(s, {2, 3, 6, 7}, CreateMode::Validate)));
    CHECK_THROWS_AS(in_filt_locus(semimodule_create(s, {0, 1, 2, 3, 4, 5, 6, 7},
                                                    CreateMode::Validate)),
                    Error);
}

TEST_CASE("dualizing semimodule") {
    auto s = make_semigroup({4, 5, 6});
    CHECK(below_of(dualizing_semimodule(s)) == std::vector<int>{0, 4, 5, 6});

    auto t = make_semigroup({4, 6, 7, 9});
    CHECK(below_of(dualizing_semimodule(t)) == std::vector<int>{0, 2, 3, 4});

    auto p = make_semigroup({3, 4, 5});
    CHECK(below_of(dualizing_semimodule(p)) == std::vector<int>{0, 1});
}

TEST_CASE("enumeration counts and canonical order") {
    auto p = make_semigroup({3, 4, 5});
    EnumOptions all;
    auto mods = enumerate_semimodules(p, all);
    REQUIRE(mods.size() == 8);
    for (size_t i = 1; i < mods.size(); ++i)
        CHECK(mods[i - 1].below_mask() < mods[i].below_mask());

    EnumOptions codim1;
    codim1.codim = 1;
    CHECK(enumerate_semimodules(p, codim1).size() == 3);

    auto s = make_semigroup({4, 5, 6});
    EnumOptions codim0;
    codim0.codim = 0;
    auto full = enumerate_semimodules(s, codim0);
    REQUIRE(full.size() == 1);
    CHECK(below_of(full[0]) == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});

    EnumOptions codim_delta;
    codim_delta.codim = 4;
    auto fixed = enumerate_semimodules(s, codim_delta);
    CHECK(fixed.size() == 9);
}

TEST_CASE("M = C counts are binomial") {
    for (int m = 3; m <= 6; ++m) {
        std::vector<int> gens;
        for (int g = m; g <= 2 * m - 1; ++g) gens.push_back(g);
        auto s = make_semigroup(gens);
        REQUIRE(s->conductor() == m);
        for (int d = 0; d <= m; ++d) {
            EnumOptions opt;
            opt.codim = d;
            CHECK((long long)enumerate_semimodules(s, opt).size() == binomial(m, d));
        }
    }
}

namespace {

// Raw-set dual oracle on explicit integer windows, independent of the
// library's shift bookkeeping.
std::set<int> raw_dual(const std::set<int>& delta, const NumericalSemigroup& g, int window) {
    const int v0 = g.conductor();
    auto in_delta = [&](int n) { return n >= v0 ? n < window : delta.count(n) > 0; };
    std::set<int> d;
    for (int z = -v0; z < window; ++z) {
        bool ok = true;
        for (int x = 0; x < window && ok; ++x)
            if (in_delta(x) && z + x < window && !g.contains(z + x)) ok = false;
        if (ok) d.insert(z);
    }
    return d;
}

std::set<int> raw_of(const GammaSemimodule& m, int window) {
    std::set<int> s;
    for (int x : m.orders_below()) s.insert(x + m.shift());
    for (int x = m.parent().conductor(); x < window; ++x) s.insert(x + m.shift());
    return s;
}

}  // namespace

TEST_CASE("dual against the raw-set oracle; reflexivity facts") {
    auto family = jacstrata::testsupport::semigroup_family(6, 12);
    for (const auto& sg : family) {
        auto s = std::make_shared<const NumericalSemigroup>(sg);
        const int v0 = sg.conductor();
        const int window = 3 * v0 + 3;
        const bool gorenstein = is_symmetric(sg);
        for (const auto& m : enumerate_semimodules(s)) {
            // stability under every generator
            for (int d : m.orders_below())
                for (int g : s->generators())
                    REQUIRE(m.contains(d + g));

            auto d1 = dual(m);
            std::set<int> expect = raw_dual(raw_of(m, window), sg, window);
            std::set<int> got = raw_of(d1, window);
            // compare inside a safe window
            for (int z = -v0; z < 2 * v0; ++z)
                REQUIRE(expect.count(z) == got.count(z));

            // double dual contains the module; equals it in the Gorenstein
            // case (reflexivity characterizes Gorenstein)
            auto nm = normalize(m);
            std::set<int> nm_raw = raw_of(nm, window);
            std::set<int> dvv = raw_dual(raw_dual(nm_raw, sg, window), sg, window);
            for (int x : nm_raw)
                if (x < 2 * v0) REQUIRE(dvv.count(x) == 1);
            if (gorenstein) {
                auto dd = dual(dual(nm));
                REQUIRE(dd.below() == nm.below());
            }

            // duals are always reflexive: triple dual == single dual
            auto d3 = dual(dual(dual(m)));
            REQUIRE(d3.below() == d1.below());
        }
    }
}

TEST_CASE("the {0,2} module over <3,4,5> is not reflexive") {
    auto p = make_semigroup({3, 4, 5});
    auto m = semimodule_create(p, {0, 2}, CreateMode::Validate);
    auto dd = dual(dual(m));
    CHECK(dd.below() == std::vector<uint8_t>{1, 1, 1});  // double dual is O~
    CHECK(dd.below() != m.below());
}

TEST_CASE("non-descending module rank bounds over the small family") {
    auto family = jacstrata::testsupport::semigroup_family(6, 14);
    for (const auto& sg : family) {
        auto s = std::make_shared<const NumericalSemigroup>(sg);
        EnumOptions opt;
        opt.normalized_only = true;
        std::set<int> attained;
        const GammaSemimodule w = dualizing_semimodule(s);
        for (const auto& m : enumerate_semimodules(s, opt)) {
            if (end_semigroup(m).descends) continue;
            const int rk = ranks(m).rk_mod_c;
            REQUIRE(rk >= sg.gamma());
            REQUIRE(rk <= sg.delta());
            if (rk == sg.delta()) REQUIRE(m == w);  // unique maximal case
            attained.insert(rk);
        }
        for (int j = sg.gamma(); j <= sg.delta(); ++j) REQUIRE(attained.count(j) == 1);
    }
}
