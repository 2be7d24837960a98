#include "treelab/density.hpp"
#include "treelab/generators.hpp"

#include <doctest.h>

using namespace treelab;

namespace {

LevelSet ls(std::initializer_list<const char*> members) {
    std::vector<BitString> v;
    for (const char* m : members) v.push_back(BitString::parse(m));
    return LevelSet(v);
}

LDF ldf(std::initializer_list<std::pair<const char*, Rational>> vals) {
    LDF d;
    std::vector<BitString> dom;
    for (const auto& [s, v] : vals) {
        dom.push_back(BitString::parse(s));
        d.values.emplace(BitString::parse(s), v);
    }
    d.domain = LevelSet(dom);
    return d;
}

} // namespace

TEST_CASE("ldf validation") {
    CHECK_NOTHROW(ldf({{"e", Rational(1, 2)}}).validate());
    CHECK_THROWS_AS(ldf({{"e", Rational(1)}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(ldf({{"e", Rational(-1, 3)}}).validate(), std::invalid_argument);
    LDF missing;
    missing.domain = ls({"0", "1"});
    missing.values.emplace(BitString("0"), Rational(0));
    CHECK_THROWS_AS(missing.validate(), std::invalid_argument);
}

TEST_CASE("density status on the worked examples") {
    LDF d = ldf({{"e", Rational(1, 2)}});
    DenseStatus s1 = dense_status(ls({"00", "01", "10"}), d);
    CHECK(s1.weak);
    CHECK(s1.max_slack == Rational(1, 4));

    DenseStatus s2 = dense_status(ls({"00"}), d);
    CHECK_FALSE(s2.weak);
    CHECK(s2.max_slack == Rational(-1, 4));

    LDF zero = ldf({{"e", Rational(0)}});
    DenseStatus s3 = dense_status(ls({"00"}), zero);
    CHECK(s3.weak);
    CHECK(s3.max_slack == Rational(1, 4));
}

TEST_CASE("extension order basics") {
    LDF d = ldf({{"e", Rational(1, 2)}});
    CHECK(ldf_extends(d, d)); // reflexive
    CHECK(ldf_extends(d.plus(Rational(1, 4)), d));
    LDF e = ldf({{"0", Rational(3, 4)}, {"1", Rational(3, 4)}});
    CHECK(ldf_extends(e, d));
    LDF small = ldf({{"0", Rational(1, 8)}, {"1", Rational(1, 8)}});
    CHECK_FALSE(ldf_extends(small, d));
}

TEST_CASE("extension order is transitive and density is monotone") {
    Rng rng(61);
    for (int i = 0; i < 150; ++i) {
        DenseExtInput in = random_dense_ext_input(rng);
        LDF e = dense_ext(in.d, in.e, in.t);
        LDF f = dense_ext(e, in.t.deepest_level(), in.t);
        CHECK(ldf_extends(e, in.d));
        CHECK(ldf_extends(f, e));
        CHECK(ldf_extends(f, in.d)); // transitivity along the produced chain
        // monotonicity: anything e-dense is d-dense when e extends d
        DenseStatus se = dense_status(in.t, e), sd = dense_status(in.t, in.d);
        if (se.weak) CHECK(sd.weak);
    }
}

TEST_CASE("dense extension, worked examples") {
    // full depth-2 tree
    LDF d = ldf({{"e", Rational(1, 2)}});
    LDF e = dense_ext(d, ls({"0", "1"}), FinTree::full(2));
    CHECK(e.at(BitString("0")) == Rational(3, 4));
    CHECK(e.at(BitString("1")) == Rational(3, 4));

    // leaves {00, 10, 11}: eps = 3/4 - 1/4 = 1/2, mu_0 = 1/2, mu_1 = 1
    FinTree t = FinTree::closure({BitString("00"), BitString("10"), BitString("11")});
    LDF d2 = ldf({{"e", Rational(1, 4)}});
    LDF e2 = dense_ext(d2, ls({"0", "1"}), t);
    CHECK(e2.at(BitString("0")) == Rational(1, 4));
    CHECK(e2.at(BitString("1")) == Rational(3, 4));

    // not d-dense: slack 0
    LDF tight = ldf({{"e", Rational(3, 4)}});
    CHECK_THROWS_AS(dense_ext(tight, ls({"0", "1"}), t), std::invalid_argument);
}

TEST_CASE("dense extension postconditions, randomized") {
    Rng rng(67);
    for (int i = 0; i < 200; ++i) {
        DenseExtInput in = random_dense_ext_input(rng);
        LDF e = dense_ext(in.d, in.e, in.t);
        CHECK(ldf_extends(e, in.d));
        DenseStatus st = dense_status(in.t, e);
        CHECK(st.weak);
        CHECK(st.max_slack.sign() > 0);
    }
}

TEST_CASE("condition validation") {
    Condition p{LevelSet::root(), FinTree::full(3), ldf({{"e", Rational(1, 2)}})};
    CHECK_NOTHROW(p.validate());

    Condition bad = p;
    bad.d = ldf({{"e", Rational(0)}});
    bad.d.domain = ls({"0", "1"}); // domain is not F
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("condensation of the depth-3 example") {
    Condition p{LevelSet::root(), FinTree::full(3), ldf({{"e", Rational(1, 2)}})};
    auto res = condense(p, 3);
    REQUIRE(res.has_value());
    CHECK(res->delta == Rational(1, 4));
    CHECK(res->eps == Rational(1, 20));
    CHECK(res->lq == 1);
    CHECK(res->q.f == ls({"0", "1"}));
    CHECK(res->q.d.at(BitString("0")) == Rational(3, 4));
    CHECK(res->conclusion_lhs == Rational(0));
    CHECK(res->conclusion_rhs == Rational(1, 16));
    CHECK(condition_extends(res->q, p));
}

TEST_CASE("condensation with the zero ldf") {
    Condition p{LevelSet::root(), FinTree::full(2), ldf({{"e", Rational(0)}})};
    auto res = condense(p, 1);
    REQUIRE(res.has_value());
    CHECK(res->conclusion_lhs < res->conclusion_rhs);
}

TEST_CASE("condensation runs out of depth gracefully") {
    // depth-1 tree leaves no level l_q > l_p once F_p sits at the leaf level
    FinTree t = FinTree::full(1);
    Condition p{t.level(1), t, ldf({{"0", Rational(1, 2)}, {"1", Rational(1, 2)}})};
    CHECK_FALSE(condense(p, 1).has_value());
}

TEST_CASE("condensation conclusion, randomized") {
    Rng rng(71);
    for (int i = 0; i < 60; ++i) {
        Condition p = random_condition(rng);
        for (unsigned n = 1; n <= 3; ++n) {
            auto res = condense(p, n);
            REQUIRE(res.has_value());
            CHECK(res->conclusion_lhs < res->conclusion_rhs);
            CHECK(condition_extends(res->q, p));
            CHECK_NOTHROW(res->q.validate());
        }
    }
}

TEST_CASE("branching") {
    Condition p{LevelSet::root(), FinTree::full(2), ldf({{"e", Rational(1, 2)}})};
    Condition q = branch(p);
    CHECK(q.f == ls({"0", "1"}));
    CHECK(condition_extends(q, p));

    Condition deep{ls({"0", "1"}), FinTree::full(3),
                   ldf({{"0", Rational(1, 2)}, {"1", Rational(1, 2)}})};
    Condition q2 = branch(deep);
    CHECK(q2.f == LevelSet::full(2));

    // non-branching path tree
    FinTree path = FinTree::closure({BitString("000")});
    Condition pp{LevelSet::root(), path, ldf({{"e", Rational(1, 16)}})};
    CHECK_THROWS_AS(branch(pp), std::invalid_argument);
}

TEST_CASE("branching yields two incomparable extensions, randomized") {
    Rng rng(73);
    for (int i = 0; i < 80; ++i) {
        Condition p = random_condition(rng);
        Condition q = branch(p);
        CHECK(condition_extends(q, p));
        for (const auto& sigma : p.f.members()) {
            std::size_t ext = 0;
            for (const auto& tau : q.f.members())
                if (sigma.is_prefix_of(tau)) ++ext;
            CHECK(ext >= 2);
        }
    }
}
