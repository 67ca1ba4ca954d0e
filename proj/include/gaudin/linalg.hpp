// linalg.hpp
//
// Exact sparse linear algebra over Q(s): deterministic Gauss-Jordan with
// particular solution and nullspace basis, plus helpers for writing state
// equations (coordinates keyed by (word, u-power, h-power)).

#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "gaudin/algebra.hpp"

namespace gaudin {

struct LinearSolution {
    bool consistent = false;
    size_t rank = 0;
    std::vector<QExt> particular;             // free unknowns set to zero
    std::vector<std::vector<QExt>> nullspace; // dense basis vectors
    std::string inconsistency;                // tag of the first failing row
    QExt residual_sample;                     // its nonzero right side
};

// Rows accumulate sparse coefficients; solve() runs reduced row-echelon
// elimination with first-nonzero-column pivoting in row insertion order, so
// identical input order gives identical output.
class LinearSystem {
  public:
    explicit LinearSystem(size_t unknowns = 0) : unknowns_(unknowns) {}

    size_t unknowns() const { return unknowns_; }
    size_t rows() const { return rows_.size(); }
    size_t add_unknown() { return unknowns_++; }

    size_t add_row(std::string tag = std::string()) {
        rows_.push_back(Row{{}, QExt(), std::move(tag)});
        return rows_.size() - 1;
    }
    void accumulate(size_t row, size_t col, const QExt& val);
    void accumulate_rhs(size_t row, const QExt& val);

    // want_nullspace=false skips the nullspace basis (cheaper when only rank
    // and one representative are needed).
    LinearSolution solve(bool want_nullspace = true) const;

  private:
    struct Row {
        std::map<size_t, QExt> lhs;
        QExt rhs;
        std::string tag;
    };
    std::vector<Row> rows_;
    size_t unknowns_;
};

// Coordinates for states: every (word, u-power, h-power) monomial of every
// enrolled state gets a stable row id in enrollment order.
class StateRowIndex {
  public:
    // Rows may additionally be split into independent blocks (e.g. one block
    // per color of an equation family).
    size_t row_of(int block, const Word& w, int u, int h, LinearSystem& sys);

  private:
    std::map<std::tuple<int, Word, int, int>, size_t> rows_;
};

// Adds coefficient-column contributions of `v` (times unknown `col`) to the
// block's rows.
void add_state_column(LinearSystem& sys, StateRowIndex& index, int block, size_t col,
                      const State& v);
// Adds `v` to the block's right-hand side.
void add_state_rhs(LinearSystem& sys, StateRowIndex& index, int block, const State& v);

// Solves sum_j x_j vectors[j] = target exactly.
LinearSolution solve_linear_combination(const std::vector<State>& vectors, const State& target);

// Rank of the span (assembled with the same deterministic coordinates).
size_t state_rank(const std::vector<State>& vectors);

// Reconstructs sum_j coeffs[j] vectors[j].
State combine(const std::vector<State>& vectors, const std::vector<QExt>& coeffs);

}  // namespace gaudin
