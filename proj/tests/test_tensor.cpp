// Index bookkeeping: epsilon and structure constants, symmetric delta tensors
// against the brute-force permutation average, slot symmetrization, and the
// exhaustive identity checks.

#include <vector>

#include "doctest.h"
#include "gaudin/tensor.hpp"

using namespace gaudin;

TEST_CASE("epsilon values and color range") {
    CHECK(eps(1, 2, 3) == 1);
    CHECK(eps(2, 3, 1) == 1);
    CHECK(eps(2, 1, 3) == -1);
    CHECK(eps(3, 2, 1) == -1);
    CHECK(eps(1, 1, 2) == 0);
    CHECK_THROWS_AS(eps(0, 1, 2), argument_error);
    CHECK_THROWS_AS(check_color(4), argument_error);
}

TEST_CASE("structure constants f = s * eps") {
    CHECK(f_const(1, 2, 3) == QExt::s());
    CHECK(f_const(2, 1, 3) == -QExt::s());
    CHECK(f_const(1, 1, 3).is_zero());
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) CHECK(f_const(a, b, c) == -f_const(b, a, c));
}

TEST_CASE("delta") {
    CHECK(delta(1, 1) == 1);
    CHECK(delta(1, 2) == 0);
}

TEST_CASE("symmetric delta tensor closed form matches brute force") {
    CHECK(sym_tensor_value({}) == 1);  // rank 0
    // rank 2: plain delta
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) CHECK(sym_tensor_value({a, b}) == rat(delta(a, b)));
    // all tuples of ranks 4 and 6
    for (int rank : {4, 6}) {
        std::vector<int> idx(rank, 1);
        bool done = false;
        while (!done) {
            CHECK(sym_tensor_value(idx) == sym_tensor_value_bruteforce(idx));
            int j = 0;
            while (j < rank && idx[j] == 3) idx[j++] = 1;
            if (j == rank) done = true;
            else ++idx[j];
        }
    }
    // odd color counts vanish
    CHECK(sym_tensor_value({1, 1, 1, 2}) == 0);
    CHECK(sym_tensor_value({1, 2, 3, 3}) == 0);
    // a known value: delta_((11)(22)) symmetrized
    CHECK(sym_tensor_value({1, 1, 2, 2}) == rat(1, 3));
    CHECK(sym_tensor_value({1, 1, 1, 1}) == rat(1));
}

TEST_CASE("symmetrize_indices is idempotent and averages") {
    std::vector<IndexedTerm> t = {{QExt(1), {1, 2}}};
    auto once = symmetrize_indices(t, {0, 1});
    auto twice = symmetrize_indices(once, {0, 1});
    REQUIRE(once.size() == 2);
    CHECK(once[0].coeff == QExt(rat(1, 2)));
    CHECK(once[1].coeff == QExt(rat(1, 2)));
    REQUIRE(twice.size() == once.size());
    for (size_t i = 0; i < once.size(); ++i) {
        CHECK(twice[i].coeff == once[i].coeff);
        CHECK(twice[i].indices == once[i].indices);
    }
    // marked subset only: third slot untouched
    std::vector<IndexedTerm> u = {{QExt(2), {3, 1, 2}}};
    auto part = symmetrize_indices(u, {0, 1});
    for (const auto& term : part) CHECK(term.indices[2] == 2);
}

TEST_CASE("structure constant identities hold exhaustively") {
    CHECK(verify_syzygies().pass);
    CHECK(verify_jacobi().pass);
    CHECK(verify_invariance().pass);
}
