// Singular-vector solver, density builders, zero-product decomposition, and
// the diagonal-regularity analysis.

#include <string>

#include "doctest.h"
#include "gaudin/golden.hpp"
#include "gaudin/solvers.hpp"

namespace {

using namespace gaudin;

Gen Iz(int a, int p, int n) { return make_current(a, p, n, Point::Z); }
Gen Iw(int a, int p, int n) { return make_current(a, p, n, Point::W); }

}  // namespace

TEST_CASE("quadratic singular subspace") {
    SingularSubspace s = singular_subspace(2);
    CHECK(s.degree == 2);
    REQUIRE(s.basis.vectors.size() == 1);
    REQUIRE(s.witnesses.size() == 1);
    CHECK(s.mode2_consistent);
    const State& v = s.basis.vectors[0];
    for (int r = 1; r <= 3; ++r) {
        CHECK(diagonal_action(r, 0, v).is_zero());
        CHECK(diagonal_action(r, 1, v) ==
              twisted_derivative(1, Point::Z, s.witnesses[0].G[r - 1]));
    }
}

TEST_CASE("degree-3 singular problem is self-consistent") {
    SingularSubspace s = singular_subspace(3);
    CHECK(s.degree == 3);
    CHECK(s.mode2_consistent);
    REQUIRE(s.witnesses.size() == s.basis.vectors.size());
    for (size_t i = 0; i < s.basis.vectors.size(); ++i) {
        const State& v = s.basis.vectors[i];
        for (int r = 1; r <= 3; ++r) {
            CHECK(diagonal_action(r, 0, v).is_zero());
            CHECK(diagonal_action(r, 1, v) ==
                  twisted_derivative(2, Point::Z, s.witnesses[i].G[r - 1]));
        }
    }
}

TEST_CASE("density builders match the frozen states") {
    CHECK(build_sigma(1) == golden_state("sigma1"));
    CHECK(build_sigma(3) == golden_state("sigma3"));
    CHECK_THROWS_AS(build_sigma(2), argument_error);
    // the quadratic witness identity in explicit form
    State sigma1 = build_sigma(1);
    for (int r = 1; r <= 3; ++r) {
        State g = golden_state("witness_quadratic_r" + std::to_string(r));
        CHECK(diagonal_action(r, 1, sigma1) == twisted_derivative(1, Point::Z, g));
    }
}

TEST_CASE("zero product of two quadratic densities decomposes") {
    Decomposition d = decompose_zero_product(1, 1);
    REQUIRE(d.found);
    CHECK(d.m == 1);
    CHECK(d.n == 1);
    State product = mode_action(build_sigma(1), 0, swap_points(build_sigma(1)));
    CHECK(d.product == product);
    CHECK(verify_given_decomposition(1, 1, d.A, d.B).is_zero());
    // perturbing the pair breaks the identity
    CHECK_FALSE(verify_given_decomposition(1, 1, d.A.scaled(QExt(rat(101, 100))), d.B).is_zero());
}

TEST_CASE("stored pair states satisfy the decomposition identity") {
    CHECK(verify_given_decomposition(1, 1, golden_state("pair11_A"), golden_state("pair11_B"))
              .is_zero());
}

TEST_CASE("regularity modulo translates of the stored pair state") {
    RegularityReport rep = regular_modulo_translates(golden_state("pair11_A"));
    CHECK(rep.feasible);
    CHECK(rep.lowest_power >= 0);
}

TEST_CASE("a pole that no translate cancels is reported infeasible") {
    State bad;
    for (int a = 1; a <= 3; ++a)
        bad += normal_order({Iz(a, 0, -1), Iw(a, 0, -1)}, Scalar(QExt(1), -1, 0));
    RegularityReport rep = regular_modulo_translates(bad);
    CHECK_FALSE(rep.feasible);
}
