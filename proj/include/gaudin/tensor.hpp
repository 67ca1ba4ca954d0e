// tensor.hpp
//
// sl2 index bookkeeping with concrete indices in {1,2,3}: structure
// constants f^{abc} = s*eps_{abc}, Kronecker delta, symmetric invariant
// tensors (symmetrized delta products), slot symmetrization, and the
// syzygy / Jacobi / invariance checks.

#pragma once

#include <string>
#include <vector>

#include "gaudin/scalar.hpp"

namespace gaudin {

inline void check_color(int a) {
    if (a < 1 || a > 3) throw argument_error("color index out of range: " + std::to_string(a));
}

inline int eps(int a, int b, int c) {
    check_color(a);
    check_color(b);
    check_color(c);
    if (a == b || b == c || a == c) return 0;
    // parity of the permutation (a,b,c) of (1,2,3)
    return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

inline QExt f_const(int a, int b, int c) { return QExt(Rat(eps(a, b, c)), Rat(0)) * QExt::s(); }

inline int delta(int a, int b) {
    check_color(a);
    check_color(b);
    return a == b ? 1 : 0;
}

// Value of the fully symmetrized delta product delta_{(i1 i2}...delta_{i2n-1 i2n)}
// normalized as the average over all (2n)! slot permutations.
// Closed form: zero unless every color count is even; otherwise
// (2^n n!/(2n)!) * prod_j (c_j - 1)!!.
Rat sym_tensor_value(const std::vector<int>& indices);

// Brute-force companion: the literal permutation average. Exponential in the
// rank; used as the independent oracle in tests.
Rat sym_tensor_value_bruteforce(const std::vector<int>& indices);

// A term c * t[i1,...,ik] with concrete indices, for symmetrization.
struct IndexedTerm {
    QExt coeff;
    std::vector<int> indices;
};

// Average over all permutations of the marked slots; other slots fixed.
// Idempotent; returns a combined, duplicate-free list.
std::vector<IndexedTerm> symmetrize_indices(const std::vector<IndexedTerm>& terms,
                                            const std::vector<int>& marked_slots);

struct TensorReport {
    bool pass = true;
    std::vector<std::string> failures;  // first counterexample per identity
    void fail(const std::string& what) {
        pass = false;
        failures.push_back(what);
    }
};

// Exhaustive index checks of the three syzygies:
//   f^{abc} f^{cde} = 2(d^{ae} d^{bd} - d^{ad} d^{be})
//   f^{abc} f^{abd} = -4 d^{cd}
//   f^{abc} d^{de} - f^{bcd} d^{ae} + f^{cda} d^{be} - f^{dab} d^{ce} = 0
TensorReport verify_syzygies();

// Jacobi identity for f over all index tuples.
TensorReport verify_jacobi();

// Invariance of delta, f, and the rank-2/rank-4 symmetric tensors:
// sum over slots of f-rotation applied to one index vanishes.
TensorReport verify_invariance();

}  // namespace gaudin
