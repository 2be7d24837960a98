#include "treelab/generators.hpp"
#include "treelab/tree.hpp"

#include <doctest.h>

using namespace treelab;

namespace {

LevelSet ls(std::initializer_list<const char*> members) {
    std::vector<BitString> v;
    for (const char* m : members) v.push_back(BitString::parse(m));
    return LevelSet(v);
}

FinTree tree(std::initializer_list<const char*> leaves) {
    std::vector<BitString> v;
    for (const char* m : leaves) v.push_back(BitString::parse(m));
    return FinTree::closure(v);
}

// Reference even/odd split, written independently of the library version.
std::pair<std::string, std::string> split_ref(const std::string& x) {
    std::string ev, od;
    for (std::size_t i = 0; i < x.size(); ++i) (i % 2 == 0 ? ev : od) += x[i];
    return {ev, od};
}

} // namespace

TEST_CASE("level sets reject unequal lengths") {
    CHECK_THROWS_AS(LevelSet(std::vector<BitString>{BitString("0"), BitString("00")}),
                    std::invalid_argument);
    CHECK(LevelSet().empty());
    CHECK(LevelSet::full(3).size() == 8);
    CHECK(LevelSet::root().height() == 0);
}

TEST_CASE("fintree closure and levels") {
    FinTree t = tree({"00", "01"});
    CHECK(t.contains(lambda()));
    CHECK(t.contains(BitString("0")));
    CHECK_FALSE(t.contains(BitString("1")));
    CHECK(t.depth() == 2);
    CHECK(t.width(1) == 1);
    CHECK(t.is_pruned());

    FinTree full = FinTree::full(2);
    CHECK(full.width(2) == 4);
    CHECK(full.deepest_level() == LevelSet::full(2));
}

TEST_CASE("pruning drops dead branches") {
    std::vector<BitString> nodes{lambda(), BitString("0"), BitString("1"), BitString("00")};
    FinTree t = FinTree::closure({BitString("00")});
    CHECK(t.is_pruned());
    // restrict to a level member that kills the other branch
    FinTree full = FinTree::full(2);
    FinTree r = full.restrict(ls({"00", "01"}));
    CHECK(r.pruned().deepest_level() == ls({"00", "01"}));
}

TEST_CASE("level relation examples") {
    auto r1 = level_relation(ls({"0", "1"}), LevelSet::full(2));
    CHECK(r1.is_prefix);
    CHECK(r1.is_splitting);
    CHECK(*r1.min_density == Dyadic(1));

    auto r2 = level_relation(ls({"0", "1"}), ls({"00", "10", "11"}));
    CHECK(r2.is_prefix);
    CHECK_FALSE(r2.is_splitting);
    CHECK(*r2.min_density == Dyadic::cylinder(1));

    auto r3 = level_relation(ls({"00"}), ls({"000", "010"}));
    CHECK_FALSE(r3.is_prefix);
    CHECK_FALSE(r3.is_splitting);

    CHECK_THROWS_AS(level_relation(LevelSet::full(2), ls({"0"})), std::invalid_argument);
}

TEST_CASE("level relation is a partial order in its prefix part") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        FinTree t = random_dense_tree(rng, 4, rng.below(4));
        LevelSet a = t.level(1), b = t.level(2), c = t.level(4);
        CHECK(level_relation(a, a).is_prefix);
        if (level_relation(a, b).is_prefix && level_relation(b, c).is_prefix)
            CHECK(level_relation(a, c).is_prefix);
    }
}

TEST_CASE("tails") {
    FinTree t = tree({"00", "01"});
    CHECK(tail(t, BitString("0")) == tree({"0", "1"}));
    CHECK(tail(t, BitString("1")).empty());
    CHECK(tail(tree({"010"}), BitString("01")) == tree({"0"}));
    CHECK(tail(t, lambda()) == t);
}

TEST_CASE("tail composition") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        FinTree t = random_dense_tree(rng, 5, rng.below(6));
        BitString s = rng.string(rng.below(3)), r = rng.string(rng.below(3));
        CHECK(tail(tail(t, s), r) == tail(t, s * r));
    }
}

TEST_CASE("van lambalgen unfolding") {
    auto a = van_lambalgen(BitString("01101001"), 3);
    REQUIRE(a.size() == 3);
    CHECK(a[0] == BitString("0110"));
    CHECK(a[1] == BitString("10"));
    CHECK(a[2] == BitString("0"));

    auto b = van_lambalgen(BitString("00000000"), 2);
    CHECK(b[0] == BitString("0000"));
    CHECK(b[1] == BitString("00"));

    auto c = van_lambalgen(lambda(), 1);
    REQUIRE(c.size() == 1);
    CHECK(c[0].empty());
}

TEST_CASE("van lambalgen against the reference split") {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        BitString x = rng.string(rng.below(16));
        unsigned levels = 1 + static_cast<unsigned>(rng.below(4));
        auto arr = van_lambalgen(x, levels);
        std::string rest = x.bits();
        std::size_t used = 0;
        for (unsigned n = 0; n < levels; ++n) {
            auto [ev, od] = split_ref(rest);
            CHECK(arr[n] == BitString(ev));
            used += ev.size();
            rest = od;
        }
        CHECK(used + rest.size() == x.length());
    }
}

TEST_CASE("tail search") {
    CHECK(*tail_search(ls({"00", "01"}), FinTree::full(2)) == lambda());
    // W = all depth-1 strings starting with 0
    CHECK(*tail_search(ls({"01", "10"}), tree({"0"})) == BitString("1"));
    CHECK(*tail_search(ls({"11"}), tree({"0"})) == BitString("11")); // empty tail accepted
    CHECK_THROWS_AS(tail_search(LevelSet(), FinTree::full(1)), std::invalid_argument);
}

TEST_CASE("subtree width is dominated levelwise") {
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        FinTree t = random_dense_tree(rng, 5, rng.below(6));
        FinTree sub = t.restrict(t.level(1)).pruned();
        for (std::size_t n = 0; n <= sub.depth(); ++n) CHECK(sub.width(n) <= t.width(n));
    }
}
