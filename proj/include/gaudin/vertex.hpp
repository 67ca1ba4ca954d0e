// vertex.hpp
//
// Vertex-algebra structure on meromorphic states: translation operator T,
// the mode action A_(n)B, twisted derivatives D^(j), the diagonal expansion
// map into Laurent series in (w-z), and skew-symmetry utilities.

#pragma once

#include <map>

#include "gaudin/algebra.hpp"

namespace gaudin {

// Translation operator: derivation with [T, I^{a[p]}_n(X)] = -n I^{a[p]}_{n-1}(X),
// [T, k^{[p]}(X)] = 0, T|0> = 0. Commutes with u-scalars.
State translate(const State& v);

// T applied j times with the 1/j! of an exponential expansion left to callers.
State translate_pow(const State& v, int j);

// Twisted derivative D^(j)_X = d/dX - (j/2) k^{[0]}(X):
// Leibniz raise of the derivative order on X-generators, u-power derivative
// on scalars (d/dz u^e = e u^{e-1}, d/dw flips the sign), then the k-term.
State twisted_derivative(int j, Point pt, const State& v);

// n-th product A_(n)B. A and B canonical; cross-point mixtures allowed.
State mode_action(const State& A, int n, const State& B);

// Laurent series in eps = (w-z) with State coefficients over the z point.
struct LaurentStateSeries {
    std::map<int, State> coeffs;  // power -> coefficient (zero states absent)
    int truncation_order = 0;     // powers above this are not represented

    int lowest_power() const {
        for (const auto& [p, s] : coeffs)
            if (!s.is_zero()) return p;
        return truncation_order + 1;
    }
    bool regular() const { return lowest_power() >= 0; }
};

// Taylor-expands every w-generator around z: gen^{[p]}(w) = sum_r (1/r!)
// gen^{[p+r]}(z) eps^r, and converts u-powers via u = -eps. Requires
// order >= the maximal u-pole of v.
LaurentStateSeries expand_at_diagonal(const State& v, int order);

// Right side of the skew-symmetry identity for the n-th product:
//   -sum_{k>=0} (1/k!) (-1)^{n+k} T^k (B_(n+k) A),
// finite by the depth grading.
State skew_rhs(const State& B, const State& A, int n);

struct SkewReport {
    bool pass = false;
    State residual;
};

// Verifies A_(0)B = skew_rhs(B, A, 0) exactly; depth caps the T-sum as a
// safety net (the grading already bounds it).
SkewReport skew_symmetry_check(const State& A, const State& B, int depth);

}  // namespace gaudin
