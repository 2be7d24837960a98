#include "treelab/expander.hpp"
#include "treelab/generators.hpp"

#include <doctest.h>

using namespace treelab;

namespace {

LevelSet ls(std::initializer_list<const char*> members) {
    std::vector<BitString> v;
    for (const char* m : members) v.push_back(BitString::parse(m));
    return LevelSet(v);
}

// Both depth-1 oracles converge at stage 1 with the same 4-element output.
StagedExpander constant_phi() {
    LevelSet out = ls({"000", "001", "010", "011"});
    return StagedExpander({{1, 4, BitString("0"), out}, {1, 4, BitString("1"), out}});
}

} // namespace

TEST_CASE("expander construction validates entries") {
    CHECK_THROWS_AS(StagedExpander({{1, 4, BitString("0"), ls({"00", "01"})}}),
                    std::invalid_argument); // |output| < k
    // comparable oracle prefixes at one arity break mass additivity
    CHECK_THROWS_AS(StagedExpander({{1, 2, BitString("0"), ls({"00", "01"})},
                                    {2, 2, BitString("01"), ls({"10", "11"})}}),
                    std::invalid_argument);
    CHECK(constant_phi().max_stage() == 1);
    CHECK(constant_phi().active(4, 0).empty());
    CHECK(constant_phi().active(4, 1).size() == 2);
}

TEST_CASE("induced hypergraph of the constant expander") {
    StagedExpander phi = constant_phi();
    StringHypergraph h = expander_hypergraph(phi, 4, 1, ClopenSet());
    REQUIRE(h.edges().size() == 1);
    CHECK(h.edges()[0].weight == Rational(1)); // oracle mass 1/2 + 1/2
    CHECK(h.is_k_fat(4));

    // nothing is free of V = {0}: every output member extends 0
    StringHypergraph none =
        expander_hypergraph(phi, 4, 1, ClopenSet(std::vector<BitString>{BitString("0")}));
    CHECK(none.edges().empty());

    CHECK(expander_hypergraph(StagedExpander(), 4, 1, ClopenSet()).edges().empty());
}

TEST_CASE("covering loop on the constant expander, hand simulated") {
    // delta = 1/(4 * 1/2) = 1/2; p_1 = 1 > delta, one light-vertex step picks
    // tau = 0, after which no output is free and p drops to 0.
    CoveringRun run = covering_enumerate(constant_phi(), 4, Rational(1, 2));
    CHECK(run.delta == Rational(1, 2));
    CHECK(run.v == ClopenSet(std::vector<BitString>{BitString("0")}));
    CHECK(run.v.measure() == Dyadic::cylinder(1));
    CHECK(run.d_measure == Dyadic(0));
    REQUIRE(run.trace.size() == 1);
    CHECK(run.trace[0].tau == BitString("0"));
    CHECK(run.trace[0].p_before == Dyadic(1));
    CHECK(run.trace[0].p_after == Dyadic(0));
    CHECK(run.trace[0].delta_f == Dyadic(1));
}

TEST_CASE("covering loop degenerate inputs") {
    CoveringRun empty = covering_enumerate(StagedExpander(), 4, Rational(1, 2));
    CHECK(empty.v.empty());
    CHECK(empty.d_measure == Dyadic(0));

    // converged mass 1/2 never exceeds delta = 1/2: no step, D = that mass
    StagedExpander half({{1, 4, BitString("0"), ls({"000", "001", "010", "011"})}});
    CoveringRun run = covering_enumerate(half, 4, Rational(1, 2));
    CHECK(run.v.empty());
    CHECK(run.trace.empty());
    CHECK(run.d_measure == Dyadic::cylinder(1));
    CHECK(run.d_measure.to_rational() <= run.delta);
}

TEST_CASE("difference test schedule") {
    auto empty = difference_test(StagedExpander(), 2);
    REQUIRE(empty.size() == 3);
    for (const auto& comp : empty) {
        CHECK(comp.run.v.empty());
        CHECK(comp.run.d_measure == Dyadic(0));
        CHECK(comp.v_bound_ok);
        CHECK(comp.d_bound_ok);
    }

    // k=1: n_1 = 4, eps = 1/2, same loop as the constant example
    StagedExpander phi = constant_phi();
    auto comps = difference_test(phi, 1);
    REQUIRE(comps.size() == 2);
    CHECK(comps[1].arity == 4);
    CHECK(comps[1].run.v == ClopenSet(std::vector<BitString>{BitString("0")}));
    CHECK(comps[1].run.d_measure == Dyadic(0));
    CHECK(comps[1].v_bound_ok);
    CHECK(comps[1].d_bound_ok);

    // k=0: n_0 = 1, eps = 1, delta = 1; p never exceeds 1, so V stays empty
    StagedExpander unary({{1, 1, BitString("0"), ls({"0"})},
                          {1, 1, BitString("1"), ls({"0"})}});
    auto comp0 = difference_test(unary, 0);
    REQUIRE(comp0.size() == 1);
    CHECK(comp0[0].run.v.empty());
    CHECK(comp0[0].run.d_measure == Dyadic(1));
    CHECK(comp0[0].d_bound_ok);
}

TEST_CASE("covering bounds and per-step accounting, randomized") {
    Rng rng(41);
    const Rational epses[] = {Rational(1, 4), Rational(1, 2)};
    for (int i = 0; i < 150; ++i) {
        std::size_t k = std::size_t(1) << (1 + rng.below(3)); // 2, 4, 8
        StagedExpander phi = random_expander(rng, k, 4, 5);
        for (const auto& eps : epses) {
            CoveringRun run = covering_enumerate(phi, k, eps);
            CHECK(run.v.measure().to_rational() <= eps);
            CHECK(run.d_measure.to_rational() <= run.delta);
            for (const auto& st : run.trace) {
                Rational gained = (st.mu_v_after - st.mu_v_before).to_rational();
                CHECK(st.delta_f.to_rational() >=
                      run.delta * Rational(static_cast<long>(k)) * gained);
            }
        }
    }
}
