// linalg.cpp
//
// Deterministic sparse Gauss-Jordan over Q(s) and the state-coordinate
// plumbing shared by every verifier.

#include "gaudin/linalg.hpp"

namespace gaudin {

void LinearSystem::accumulate(size_t row, size_t col, const QExt& val) {
    if (val.is_zero()) return;
    if (col >= unknowns_) throw argument_error("column index out of range");
    auto& m = rows_.at(row).lhs;
    auto it = m.find(col);
    if (it == m.end()) {
        m.emplace(col, val);
    } else {
        it->second += val;
        if (it->second.is_zero()) m.erase(it);
    }
}

void LinearSystem::accumulate_rhs(size_t row, const QExt& val) {
    rows_.at(row).rhs += val;
}

LinearSolution LinearSystem::solve(bool want_nullspace) const {
    // Invariant kept throughout: each pivot row has coefficient 1 at its pivot
    // column and 0 at every other pivot column.
    std::map<size_t, Row> pivots;
    LinearSolution sol;
    sol.consistent = true;

    size_t row_no = 0;
    for (const Row& r0 : rows_) {
        ++row_no;
        Row r = r0;
        auto it = r.lhs.begin();
        while (it != r.lhs.end()) {
            auto pv = pivots.find(it->first);
            if (pv == pivots.end()) {
                ++it;
                continue;
            }
            QExt f = it->second;
            size_t c = it->first;
            r.lhs.erase(it);
            for (const auto& [c2, v2] : pv->second.lhs) {
                if (c2 == c) continue;
                QExt delta = f * v2;
                auto jt = r.lhs.find(c2);
                if (jt == r.lhs.end()) {
                    if (!delta.is_zero()) r.lhs.emplace(c2, -delta);
                } else {
                    jt->second = jt->second - delta;
                    if (jt->second.is_zero()) r.lhs.erase(jt);
                }
            }
            r.rhs = r.rhs - f * pv->second.rhs;
            it = r.lhs.upper_bound(c);
        }
        if (r.lhs.empty()) {
            if (!r.rhs.is_zero() && sol.consistent) {
                sol.consistent = false;
                sol.inconsistency = r.tag.empty() ? ("row " + std::to_string(row_no - 1)) : r.tag;
                sol.residual_sample = r.rhs;
            }
            continue;
        }
        size_t c = r.lhs.begin()->first;
        QExt inv = r.lhs.begin()->second.inverse();
        for (auto& [cc, vv] : r.lhs) vv = vv * inv;
        r.rhs = r.rhs * inv;
        for (auto& [cp, P] : pivots) {
            auto jt = P.lhs.find(c);
            if (jt == P.lhs.end()) continue;
            QExt f = jt->second;
            P.lhs.erase(jt);
            for (const auto& [c2, v2] : r.lhs) {
                if (c2 == c) continue;
                QExt delta = f * v2;
                auto kt = P.lhs.find(c2);
                if (kt == P.lhs.end()) {
                    if (!delta.is_zero()) P.lhs.emplace(c2, -delta);
                } else {
                    kt->second = kt->second - delta;
                    if (kt->second.is_zero()) P.lhs.erase(kt);
                }
            }
            P.rhs = P.rhs - f * r.rhs;
        }
        pivots.emplace(c, std::move(r));
    }

    sol.rank = pivots.size();
    sol.particular.assign(unknowns_, QExt());
    if (sol.consistent)
        for (const auto& [c, P] : pivots) sol.particular[c] = P.rhs;

    if (want_nullspace) {
        for (size_t f = 0; f < unknowns_; ++f) {
            if (pivots.count(f)) continue;
            std::vector<QExt> v(unknowns_, QExt());
            v[f] = QExt(1);
            for (const auto& [c, P] : pivots) {
                auto jt = P.lhs.find(f);
                if (jt != P.lhs.end()) v[c] = -jt->second;
            }
            sol.nullspace.push_back(std::move(v));
        }
    }
    return sol;
}

size_t StateRowIndex::row_of(int block, const Word& w, int u, int h, LinearSystem& sys) {
    auto key = std::make_tuple(block, w, u, h);
    auto it = rows_.find(key);
    if (it != rows_.end()) return it->second;
    size_t r = sys.add_row();
    rows_.emplace(std::move(key), r);
    return r;
}

void add_state_column(LinearSystem& sys, StateRowIndex& index, int block, size_t col,
                      const State& v) {
    for (const auto& [w, c] : v.sorted_terms())
        for (const auto& [uh, q] : c.terms())
            sys.accumulate(index.row_of(block, w, uh.u, uh.h, sys), col, q);
}

void add_state_rhs(LinearSystem& sys, StateRowIndex& index, int block, const State& v) {
    for (const auto& [w, c] : v.sorted_terms())
        for (const auto& [uh, q] : c.terms())
            sys.accumulate_rhs(index.row_of(block, w, uh.u, uh.h, sys), q);
}

LinearSolution solve_linear_combination(const std::vector<State>& vectors, const State& target) {
    LinearSystem sys(vectors.size());
    StateRowIndex index;
    for (size_t j = 0; j < vectors.size(); ++j) add_state_column(sys, index, 0, j, vectors[j]);
    add_state_rhs(sys, index, 0, target);
    return sys.solve();
}

size_t state_rank(const std::vector<State>& vectors) {
    LinearSystem sys(vectors.size());
    StateRowIndex index;
    for (size_t j = 0; j < vectors.size(); ++j) add_state_column(sys, index, 0, j, vectors[j]);
    return sys.solve(false).rank;
}

State combine(const std::vector<State>& vectors, const std::vector<QExt>& coeffs) {
    if (vectors.size() != coeffs.size()) throw argument_error("combine size mismatch");
    State out;
    for (size_t j = 0; j < vectors.size(); ++j) out += vectors[j].scaled(coeffs[j]);
    return out;
}

}  // namespace gaudin
