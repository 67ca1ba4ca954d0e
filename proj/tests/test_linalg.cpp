// Exact linear solver: known systems, nullspaces, inconsistency reporting,
// determinism, and the state-coordinate helpers.

#include "doctest.h"
#include "gaudin/linalg.hpp"

namespace {

using namespace gaudin;

Gen Iz(int a, int p, int n) { return make_current(a, p, n, Point::Z); }

State ws(const Word& w, const Scalar& c = Scalar(QExt(1))) {
    State v;
    v.add(w, c);
    return v;
}

}  // namespace

TEST_CASE("2x2 system with a unique solution") {
    LinearSystem sys(2);
    size_t r0 = sys.add_row("sum");
    sys.accumulate(r0, 0, QExt(1));
    sys.accumulate(r0, 1, QExt(1));
    sys.accumulate_rhs(r0, QExt(3));
    size_t r1 = sys.add_row("diff");
    sys.accumulate(r1, 0, QExt(1));
    sys.accumulate(r1, 1, QExt(-1));
    sys.accumulate_rhs(r1, QExt(1));
    LinearSolution sol = sys.solve();
    REQUIRE(sol.consistent);
    CHECK(sol.rank == 2);
    CHECK(sol.particular == std::vector<QExt>{QExt(2), QExt(1)});
    CHECK(sol.nullspace.empty());
}

TEST_CASE("underdetermined system exposes the nullspace") {
    LinearSystem sys(2);
    size_t r0 = sys.add_row();
    sys.accumulate(r0, 0, QExt(1));
    sys.accumulate(r0, 1, QExt(1));
    sys.accumulate_rhs(r0, QExt(1));
    LinearSolution sol = sys.solve();
    REQUIRE(sol.consistent);
    CHECK(sol.rank == 1);
    REQUIRE(sol.nullspace.size() == 1);
    // every nullspace vector annihilates the row
    QExt dot = sol.nullspace[0][0] + sol.nullspace[0][1];
    CHECK(dot.is_zero());
    // the particular solution satisfies the row
    CHECK(sol.particular[0] + sol.particular[1] == QExt(1));
    // skipping the nullspace still solves
    LinearSolution cheap = sys.solve(false);
    CHECK(cheap.consistent);
    CHECK(cheap.nullspace.empty());
}

TEST_CASE("inconsistent system reports the failing row") {
    LinearSystem sys(1);
    size_t r0 = sys.add_row("first");
    sys.accumulate(r0, 0, QExt(1));
    sys.accumulate_rhs(r0, QExt(1));
    size_t r1 = sys.add_row("second");
    sys.accumulate(r1, 0, QExt(1));
    sys.accumulate_rhs(r1, QExt(2));
    LinearSolution sol = sys.solve();
    CHECK_FALSE(sol.consistent);
    CHECK(sol.inconsistency == "second");
    CHECK_FALSE(sol.residual_sample.is_zero());
}

TEST_CASE("pivoting works over the quadratic extension") {
    LinearSystem sys(1);
    size_t r0 = sys.add_row();
    sys.accumulate(r0, 0, QExt::s());
    sys.accumulate_rhs(r0, QExt(-2));
    LinearSolution sol = sys.solve();
    REQUIRE(sol.consistent);
    CHECK(sol.particular[0] == QExt::s());
}

TEST_CASE("solver output is deterministic") {
    auto build = [] {
        LinearSystem sys(3);
        size_t r0 = sys.add_row();
        sys.accumulate(r0, 0, QExt(1));
        sys.accumulate(r0, 2, QExt(2));
        size_t r1 = sys.add_row();
        sys.accumulate(r1, 1, QExt(1));
        sys.accumulate(r1, 2, QExt(-1));
        return sys.solve();
    };
    LinearSolution a = build();
    LinearSolution b = build();
    CHECK(a.rank == b.rank);
    CHECK(a.particular == b.particular);
    CHECK(a.nullspace == b.nullspace);
}

TEST_CASE("state rank and combination") {
    State v = ws({Iz(1, 0, -1)});
    State w = ws({Iz(2, 0, -1)}, Scalar(QExt(1), -1, 0));
    CHECK(state_rank({v, v.scaled(QExt(2)), w}) == 2);
    CHECK(state_rank({v - v}) == 0);
    CHECK(state_rank({v, w, v + w}) == 2);

    State c = combine({v, w}, {QExt(3), QExt(-1)});
    CHECK(c == v.scaled(QExt(3)) - w);
}

TEST_CASE("solve_linear_combination") {
    State v = ws({Iz(1, 0, -1)});
    State w = ws({Iz(2, 0, -1)});
    State target = v.scaled(QExt(3)) - w;
    LinearSolution sol = solve_linear_combination({v, w}, target);
    REQUIRE(sol.consistent);
    CHECK(sol.particular == std::vector<QExt>{QExt(3), QExt(-1)});

    // u- and h-powers are separate coordinates
    LinearSolution miss = solve_linear_combination({v}, v.shifted(-1, 0));
    CHECK_FALSE(miss.consistent);
}

TEST_CASE("state columns against a state right-hand side") {
    State v = ws({Iz(1, 0, -1)}) + ws({Iz(3, 1, -2)}, Scalar(QExt(2), 0, 1));
    LinearSystem sys(1);
    StateRowIndex index;
    add_state_column(sys, index, 0, 0, v);
    add_state_rhs(sys, index, 0, v.scaled(QExt(rat(5, 2))));
    LinearSolution sol = sys.solve();
    REQUIRE(sol.consistent);
    CHECK(sol.particular[0] == QExt(rat(5, 2)));

    // a fresh block separates equations: the same words in block 1 with an
    // incompatible right side must make the joint system inconsistent
    add_state_column(sys, index, 1, 0, v);
    add_state_rhs(sys, index, 1, v.scaled(QExt(3)));
    CHECK_FALSE(sys.solve().consistent);
}

TEST_CASE("binomial_int") {
    CHECK(binomial_int(5, 2) == 10);
    CHECK(binomial_int(0, 0) == 1);
    CHECK(binomial_int(1, 3) == 0);
    CHECK(binomial_int(-1, 2) == 1);   // (-1)(-2)/2
    CHECK(binomial_int(-2, 3) == -4);  // (-2)(-3)(-4)/6
}
