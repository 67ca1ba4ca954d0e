// Singular-vector solver, invariant density builders, and the zero-product
// decomposition machinery (weighted twisted derivatives plus a translation
// term) with its diagonal-regularity analysis.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "gaudin/spaces.hpp"
#include "gaudin/vertex.hpp"

namespace gaudin {

struct SingularWitness {
    State vector;            // the singular state
    std::array<State, 3> G;  // mode-1 witness states, one per adjoint color
};

struct SingularSubspace {
    int degree = 0;
    SubspaceBasis basis;                     // of the singular subspace
    std::vector<SingularWitness> witnesses;  // parallel to basis.vectors
    bool mode2_consistent = false;           // every basis vector passed the
                                             // mode-2 membership check
};

// Joint solve of the mode-0 and mode-1 singularity conditions at degree n
// (n = 2, 3, 4): the unknown state runs over the invariant subspace, the
// witness over adjoint-equivariant families, and the identity reads
//   diagonal_action(r, 1, v) = twisted_derivative(n-1, Z, G^r).
// Afterwards every basis vector is checked for mode-2 membership:
//   diagonal_action(r, 2, v) in D^{(n-1)} applied to an equivariant family.
SingularSubspace singular_subspace(int n);

// The invariant densities: build_sigma(1) is the quadratic density,
// build_sigma(3) the quartic one, assembled from the frozen coefficient
// tables; both are revalidated against the mode-0/mode-1 singularity
// identities on every call (config_error on violation).
State build_sigma(int n);

struct Decomposition {
    int m = 0, n = 0;  // density exponents of the z- and w-factors
    State product;     // sigma_m(z) (0)-product sigma_n(w)
    State A, B;        // product = (n D^{(m)}_z - m D^{(n)}_w) A + T B
    bool found = false;
    int pole_cap = 0;      // u-pole bound of the ansatz that solved
    int escalations = 0;   // pole-cap enlargements used (at most 2)
    std::string note;
};

// Solves the decomposition for m, n in {1, 3}. The (1,1) case uses the full
// monomial ansatz; the others restrict to sl2-invariant combinations. The
// ansatz pole bound starts at the product's maximal pole plus one and is
// enlarged at most twice.
Decomposition decompose_zero_product(int m, int n);

// Residual  product - (n D^{(m)}_z - m D^{(n)}_w) A - T B  with the product
// recomputed from the densities; the zero state certifies the identity.
State verify_given_decomposition(int m, int n, const State& A, const State& B);

struct RegularityReport {
    bool feasible = false;  // some translate image cancels all diagonal poles
    State Z;                // A - translate(Z) is regular (when feasible)
    int lowest_power = 0;   // lowest diagonal power of A - translate(Z)
    std::string note;
};

// Decides whether A = translate(Z) + (regular at the diagonal) for an
// sl2-invariant Z of the translation-compatible bigrade with poles no deeper
// than A's.
RegularityReport regular_modulo_translates(const State& A);

}  // namespace gaudin
