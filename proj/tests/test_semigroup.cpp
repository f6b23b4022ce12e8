#include <doctest.h>

#include "jacstrata/semigroup.hpp"
#include "support/family.hpp"

using namespace jacstrata;

namespace {

// Independent symmetry oracle: every gap pairs with a member under
// j <-> v0 - 1 - j.  Kept separate from is_symmetric on purpose.
bool gap_symmetry(const NumericalSemigroup& s) {
    for (int j : s.gaps())
        if (!s.contains(s.conductor() - 1 - j)) return false;
    return true;
}

}  // namespace

TEST_CASE("semigroup construction <4,5,6>") {
    auto s = NumericalSemigroup::from_generators({4, 5, 6});
    CHECK(s.conductor() == 8);
    CHECK(s.delta() == 4);
    CHECK(s.gamma() == 4);
    CHECK(s.gaps() == std::vector<int>{1, 2, 3, 7});
    CHECK(s.elements_below() == std::vector<int>{0, 4, 5, 6});
    CHECK(s.generators() == std::vector<int>{4, 5, 6});
    CHECK(s.multiplicity() == 4);
}

TEST_CASE("semigroup construction <2,3> and redundant generators") {
    auto s = NumericalSemigroup::from_generators({2, 3});
    CHECK(s.conductor() == 2);
    CHECK(s.delta() == 1);
    CHECK(s.gaps() == std::vector<int>{1});

    // minimal generating set is recomputed
    auto t = NumericalSemigroup::from_generators({4, 5, 6, 9, 10});
    CHECK(t.generators() == std::vector<int>{4, 5, 6});
}

TEST_CASE("semigroup construction errors") {
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({4, 6}), Error);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), Error);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({1, 5}), Error);
    CHECK_NOTHROW(NumericalSemigroup::from_generators({1}, true));
    try {
        NumericalSemigroup::from_generators({4, 6});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonCoprime);
    }
}

TEST_CASE("smooth semigroup") {
    auto n = NumericalSemigroup::from_generators({1}, true);
    CHECK(n.conductor() == 0);
    CHECK(n.delta() == 0);
    CHECK(n.generators() == std::vector<int>{1});
    CHECK(n.contains(0));
    CHECK(n.contains(12345));
}

TEST_CASE("check_identities on the named examples") {
    auto r1 = check_identities(NumericalSemigroup::from_generators({4, 5, 6}));
    CHECK(r1.all_hold());
    CHECK(r1.symmetric_gap_pairs == 0);  // 2*4 - 8

    auto r2 = check_identities(NumericalSemigroup::from_generators({4, 6, 7, 9}));
    CHECK(r2.all_hold());
    CHECK(r2.symmetric_gap_pairs == 2);  // gaps {1,2,3,5}, pairs at j = 2, 3

    auto r3 = check_identities(NumericalSemigroup::from_generators({2, 3}));
    CHECK(r3.all_hold());
}

TEST_CASE("is_symmetric") {
    CHECK(is_symmetric(NumericalSemigroup::from_generators({4, 5, 6})));
    CHECK_FALSE(is_symmetric(NumericalSemigroup::from_generators({4, 6, 7, 9})));
    CHECK(is_symmetric(NumericalSemigroup::from_generators({2, 3})));
    CHECK_FALSE(is_symmetric(NumericalSemigroup::from_generators({3, 4, 5})));
}

TEST_CASE("arithmetic_progression_conditions on the named examples") {
    auto a = arithmetic_progression_conditions(NumericalSemigroup::from_generators({3, 4, 5}));
    CHECK(a == std::array<bool, 3>{true, true, true});

    auto b = arithmetic_progression_conditions(NumericalSemigroup::from_generators({3, 7, 8}));
    CHECK(b == std::array<bool, 3>{true, true, true});

    auto c = arithmetic_progression_conditions(NumericalSemigroup::from_generators({4, 5, 6}));
    CHECK(c == std::array<bool, 3>{false, false, false});

    // <3,8,10> = {0,3,6} + [8,inf) separates the i <= gamma reading of (ii)
    // from the truncated one; all three conditions must agree on it.
    auto d = arithmetic_progression_conditions(NumericalSemigroup::from_generators({3, 8, 10}));
    CHECK(d == std::array<bool, 3>{false, false, false});
}

TEST_CASE("normalization chain") {
    auto s = NumericalSemigroup::from_generators({4, 5, 6});
    auto chain = normalization_chain(s);
    REQUIRE(chain.steps.size() == 5);  // delta + 1
    CHECK(chain.deltas == std::vector<int>{4, 3, 2, 1, 0});
    CHECK(chain.steps[1].gaps() == std::vector<int>{1, 2, 3});
    CHECK(chain.steps[1].conductor() == 4);
    CHECK(chain.steps.back().is_smooth());

    auto p = normalization_chain(NumericalSemigroup::from_generators({3, 4, 5}));
    CHECK(p.steps.size() == 3);
    CHECK(p.steps[1].gaps() == std::vector<int>{1});

    auto n = normalization_chain(NumericalSemigroup::from_generators({1}, true));
    CHECK(n.steps.size() == 1);
}

TEST_CASE("classify_type") {
    CHECK(classify_type(NumericalSemigroup::from_generators({3, 4, 5})).m_equals_c);
    CHECK(classify_type(NumericalSemigroup::from_generators({4, 5, 6})).gorenstein_m1c1);
    CHECK(classify_type(NumericalSemigroup::from_generators({4, 6, 7, 9})).rk_mc1_m1c1);

    auto planar_cusp = classify_type(NumericalSemigroup::from_generators({2, 3}));
    CHECK(planar_cusp.locally_planar);
    CHECK(planar_cusp.m_equals_c);

    auto planar = classify_type(NumericalSemigroup::from_generators({2, 5}));
    CHECK(planar.locally_planar);
    CHECK_FALSE(planar.gorenstein_m1c1);  // symmetric with M' = C', but planar
    CHECK_FALSE(planar.rk_mc1_m1c1);
    CHECK_FALSE(planar.general);

    CHECK(classify_type(NumericalSemigroup::from_generators({5, 7, 9, 11, 13})).general);
    CHECK(classify_type(NumericalSemigroup::from_generators({1}, true)).smooth);
}

TEST_CASE("family-wide invariants (identities, progression equivalence, symmetry, chains)") {
    auto family = jacstrata::testsupport::semigroup_family(8, 20);
    REQUIRE(family.size() > 100);

    for (const auto& s : family) {
        CAPTURE(s.conductor());
        REQUIRE(check_identities(s).all_hold());

        auto c = arithmetic_progression_conditions(s);
        REQUIRE(c[0] == c[1]);
        REQUIRE(c[1] == c[2]);

        REQUIRE(is_symmetric(s) == gap_symmetry(s));

        auto chain = normalization_chain(s);
        REQUIRE((int)chain.steps.size() == s.delta() + 1);
        for (size_t i = 0; i < chain.steps.size(); ++i)
            REQUIRE(chain.deltas[i] == s.delta() - (int)i);

        // class tags are mutually exclusive; locally_planar co-occurs only
        // with m_equals_c
        auto t = classify_type(s);
        int classes = (int)t.m_equals_c + t.gorenstein_m1c1 + t.rk_mc1_m1c1 + t.general;
        REQUIRE(classes <= 1);
        if (t.locally_planar) {
            REQUIRE_FALSE(t.gorenstein_m1c1);
            REQUIRE_FALSE(t.rk_mc1_m1c1);
            REQUIRE_FALSE(t.general);
        } else {
            REQUIRE(classes == 1);
        }
    }
}

TEST_CASE("gorenstein_m1c1 detects exactly <k1, ..., 2k1-2>") {
    // k1 = 3 gives <3,4>, which is locally planar and therefore tagged as
    // such rather than as the Gorenstein M' = C' class
    auto planar = classify_type(NumericalSemigroup::from_generators({3, 4}));
    CHECK(planar.locally_planar);
    CHECK_FALSE(planar.gorenstein_m1c1);

    for (int k1 = 4; k1 <= 8; ++k1) {
        std::vector<int> gens;
        for (int g = k1; g <= 2 * k1 - 2; ++g) gens.push_back(g);
        auto s = NumericalSemigroup::from_generators(gens);
        CHECK(classify_type(s).gorenstein_m1c1);
        CHECK(s.conductor() == 2 * k1);
        CHECK(s.delta() == k1);
    }
}

TEST_CASE("rk_mc1_m1c1 detects exactly {0, k1} + [k1+2, inf)") {
    for (int k1 = 3; k1 <= 8; ++k1) {
        std::vector<uint8_t> below((size_t)(k1 + 2), 0);
        below[0] = 1;
        below[(size_t)k1] = 1;
        auto s = NumericalSemigroup::from_elements(below, k1 + 2);
        CHECK(classify_type(s).rk_mc1_m1c1);
        CHECK(s.delta() == k1);
        CHECK(s.gamma() == 2);
    }
}
