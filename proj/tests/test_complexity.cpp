#include "treelab/complexity.hpp"
#include "treelab/generators.hpp"

#include <doctest.h>

using namespace treelab;

namespace {

PrefixMachine machine(std::initializer_list<std::pair<const char*, const char*>> rows) {
    std::map<BitString, BitString> t;
    for (const auto& [p, o] : rows) t.emplace(BitString::parse(p), BitString::parse(o));
    return PrefixMachine(std::move(t));
}

} // namespace

TEST_CASE("machine construction validates the domain") {
    CHECK_THROWS_AS(machine({{"0", "1"}, {"01", "1"}}), std::invalid_argument);
    CHECK_NOTHROW(machine({{"0", "1"}, {"10", "01"}}));
    CHECK(machine({{"0", "1"}, {"10", "01"}}).kraft_sum() ==
          Dyadic::cylinder(1) + Dyadic::cylinder(2));
}

TEST_CASE("kolmogorov lookup") {
    PrefixMachine m = machine({{"0", "1"}, {"10", "01"}});
    CHECK(m.kolmogorov(BitString("1")).v == 1);
    CHECK(m.kolmogorov(BitString("01")).v == 2);
    CHECK_FALSE(m.kolmogorov(BitString("11")).finite());
    CHECK(*m.deficiency(BitString("01")) == 0);
    CHECK_FALSE(m.deficiency(BitString("11")).has_value());
}

TEST_CASE("shortest program wins") {
    PrefixMachine m = machine({{"0", "11"}, {"10", "11"}});
    CHECK(m.kolmogorov(BitString("11")).v == 1);
    CHECK(*m.deficiency(BitString("11")) == 1);
}

TEST_CASE("deficiency classes") {
    // "11" is the only compressible string; its extensions leave the class
    PrefixMachine m = machine({{"0", "11"}});
    LevelSet p = deficiency_class(m, 0, 2);
    CHECK(p.members() ==
          std::set<BitString>{BitString("00"), BitString("01"), BitString("10")});

    PrefixMachine m2 = machine({{"0", "1"}, {"10", "01"}});
    CHECK(deficiency_class(m2, 0, 1) == LevelSet::full(1));

    CHECK(deficiency_class(m, 5, 3) == LevelSet::full(3)); // c >= n, bound vacuous
    // infinite K passes every bound, so even a harsh c only drops "11"
    CHECK(deficiency_class(m, -3, 2).members() ==
          std::set<BitString>{BitString("00"), BitString("01"), BitString("10")});
}

TEST_CASE("deficiency class is monotone in c") {
    Rng rng(3);
    for (int i = 0; i < 60; ++i) {
        PrefixMachine m = random_machine(rng, 16);
        for (long c = -1; c < 3; ++c) {
            auto lo = deficiency_class(m, c, 4).members();
            auto hi = deficiency_class(m, c + 1, 4).members();
            for (const auto& s : lo) CHECK(hi.count(s) == 1);
        }
    }
}

TEST_CASE("test bound of the deficiency test") {
    PrefixMachine m = machine({{"0", "11"}});
    CHECK(test_deficiency_bound(m, ClopenSet(std::vector<BitString>{BitString("11")}), 1, 3));
    CHECK_FALSE(
        test_deficiency_bound(m, ClopenSet(std::vector<BitString>{BitString("11")}), 2, 0));
    CHECK(test_deficiency_bound(m, ClopenSet(), 5, 0)); // vacuous
}

TEST_CASE("kraft and the compressibility measure bound") {
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        PrefixMachine m = random_machine(rng, 32);
        CHECK(m.kraft_sum() <= Dyadic(1));
        for (long c = 0; c <= 3; ++c) {
            Dyadic mu = compressible_set(m, c, 6).measure();
            CHECK(mu.to_rational() <= Rational::pow2(-c));
        }
    }
}

TEST_CASE("adding entries never increases K") {
    Rng rng(17);
    for (int i = 0; i < 60; ++i) {
        PrefixMachine m = random_machine(rng, 8);
        auto table = m.table();
        // extend with a fresh program incomparable to the old domain
        BitString fresh;
        for (std::size_t len = 1; len <= 8; ++len) {
            bool ok = false;
            for (const auto& cand : BitString::level(len)) {
                bool clash = false;
                for (const auto& [p, _] : table)
                    if (p.comparable(cand)) { clash = true; break; }
                if (!clash) { fresh = cand; ok = true; break; }
            }
            if (ok) break;
        }
        if (fresh.empty()) continue; // domain already saturates the space
        table.emplace(fresh, rng.string(rng.below(5)));
        PrefixMachine bigger(table);
        for (const auto& sigma : BitString::level(3))
            CHECK(bigger.kolmogorov(sigma) <= m.kolmogorov(sigma));
    }
}

TEST_CASE("deficiency profile covers all short strings") {
    PrefixMachine m = machine({{"0", "11"}});
    auto prof = deficiency_profile(m, 2);
    CHECK(prof.size() == 7); // lambda + 2 + 4
    for (const auto& entry : prof) {
        if (entry.sigma == BitString("11")) {
            CHECK(entry.k.v == 1);
            CHECK(*entry.deficiency == 1);
        } else {
            CHECK_FALSE(entry.k.finite());
        }
    }
}
