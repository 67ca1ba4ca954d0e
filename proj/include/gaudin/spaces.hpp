// spaces.hpp
//
// Graded subspace assembly: bases of bigraded pieces, the sl2-invariant
// subspace as a joint kernel of the three zero modes, top-filtration symbol
// extraction, and a generic exactly-solved linear problem.

#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "gaudin/linalg.hpp"

namespace gaudin {

struct SubspaceBasis {
    int depth = 0;
    int weight = 0;
    std::vector<State> vectors;       // linearly independent
    std::vector<std::string> labels;  // optional, parallel to vectors
};

struct LinearProblem {
    std::vector<State> unknown_basis;
    std::function<State(const State&)> constraint_map;  // must be linear
    State target;
};

// Joint kernel of diagonal_action(r, 0, .) for r = 1..3 on the single-point
// bigrade (n, n). Supported for n <= 6.
SubspaceBasis invariant_subspace(int n);

// Coefficients x with constraint_map(sum x_j basis_j) = target; the map is
// applied per basis vector (in parallel) and the system solved exactly.
LinearSolution solve(const LinearProblem& p);

// Symmetric tensor with entries keyed by ascending index tuples.
struct SymTensor {
    int rank = 0;
    std::map<std::vector<int>, QExt> entries;  // zero entries absent

    bool is_zero() const { return entries.empty(); }
    bool operator==(const SymTensor& o) const { return rank == o.rank && entries == o.entries; }
    bool operator!=(const SymTensor& o) const { return !(*this == o); }
};

// Fully symmetrized product of delta pairings, entry = average over all index
// permutations; the closed form lives in tensor.hpp.
SymTensor sym_delta_tensor(int rank);

// Spanning family of the sl2-invariant states of bigrade (depth, weight) over
// the given points: every colorless monomial shape is contracted with all
// groupings of its color slots into delta pairs and epsilon triples. The
// family spans the invariant subspace but may be linearly dependent; `keep`
// optionally filters shapes by their (color-1) word.
std::vector<State> invariant_spanning_set(int depth, int weight, const std::vector<Point>& points,
                                          const std::function<bool(const Word&)>& keep = {});

// Spanning family of adjoint-equivariant triples (G^1, G^2, G^3): one free
// adjoint slot joins the contraction alongside the word's color slots.
std::vector<std::array<State, 3>> equivariant_spanning_set(
    int depth, int weight, const std::vector<Point>& points,
    const std::function<bool(const Word&)>& keep = {});

// Symbol of a degree-N state: the coefficient tensor of its N-current part
// (necessarily a product of mode -1, derivative 0 currents), divided by the
// orbit size so the result is the symmetrized tensor. Zero when the state
// sits below the top filtration layer.
SymTensor top_term(const State& v);

}  // namespace gaudin
