// Singular-family solver, density builders, zero-product decompositions, and
// the diagonal-regularity analysis.

#include "gaudin/solvers.hpp"

#include <utility>

#include "gaudin/golden.hpp"
#include "gaudin/util.hpp"

namespace gaudin {

namespace {

// Incremental dense span over Q(s). Rows are kept sorted by leading column
// and each row's entries before its lead are zero, so a single reduction pass
// in lead order decides membership.
class DenseSpan {
  public:
    // Returns true (and absorbs) when v enlarges the span.
    bool absorb(std::vector<QExt> v) {
        for (const auto& [lead, row] : rows_) {
            if (v[lead].is_zero()) continue;
            QExt f = v[lead];
            for (size_t i = lead; i < v.size(); ++i) v[i] = v[i] - f * row[i];
        }
        size_t lead = v.size();
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                lead = i;
                break;
            }
        if (lead == v.size()) return false;
        QExt inv = v[lead].inverse();
        for (size_t i = lead; i < v.size(); ++i) v[i] = v[i] * inv;
        auto it = rows_.begin();
        while (it != rows_.end() && it->first < lead) ++it;
        rows_.emplace(it, lead, std::move(v));
        return true;
    }

    size_t rank() const { return rows_.size(); }

  private:
    std::vector<std::pair<size_t, std::vector<QExt>>> rows_;
};

std::pair<int, int> state_bigrade(const State& v) {
    bool first = true;
    int d = 0, wt = 0;
    for (const auto& [w, c] : v.terms())
        for (const auto& [uh, q] : c.terms()) {
            int td = word_depth(w), tw = word_weight(w) - uh.u;
            if (first) {
                d = td;
                wt = tw;
                first = false;
            } else if (td != d || tw != wt) {
                throw argument_error("state is not bigrade-homogeneous");
            }
        }
    return {d, wt};
}

State weighted_derivative_pair(int m, int n, const State& v) {
    return twisted_derivative(m, Point::Z, v).scaled(QExt(n)) -
           twisted_derivative(n, Point::W, v).scaled(QExt(m));
}

// Ansatz columns u^{-d} * (monomial of bigrade (depth, weight - d)) for
// d = 0..pole_cap over both points.
std::vector<State> monomial_columns(int depth, int weight, int pole_cap) {
    std::vector<State> cols;
    for (int d = 0; d <= pole_cap; ++d) {
        if (weight - d < 1) continue;
        for (const Word& w : enumerate_monomials(depth, weight - d, {Point::Z, Point::W})) {
            State v;
            v.add(w, Scalar(QExt(1), -d, 0));
            cols.push_back(std::move(v));
        }
    }
    return cols;
}

std::vector<State> invariant_columns(int depth, int weight, int pole_cap) {
    std::vector<State> cols;
    for (int d = 0; d <= pole_cap; ++d) {
        if (weight - d < 1) continue;
        std::vector<State> layer =
            invariant_spanning_set(depth, weight - d, {Point::Z, Point::W});
        for (State& v : layer) cols.push_back(v.shifted(-d, 0));
    }
    return cols;
}

}  // namespace

SingularSubspace singular_subspace(int n) {
    if (n < 2 || n > 4) throw argument_error("singular subspace supported for n = 2, 3, 4");
    SingularSubspace out;
    out.degree = n;
    SubspaceBasis inv = invariant_subspace(n);
    std::vector<std::array<State, 3>> fams =
        equivariant_spanning_set(n - 1, n - 1, {Point::Z});
    const size_t NI = inv.vectors.size(), NG = fams.size();

    auto inv_img = parallel_map<std::array<State, 3>>(NI, [&](size_t j) {
        std::array<State, 3> a;
        for (int r = 1; r <= 3; ++r) a[r - 1] = diagonal_action(r, 1, inv.vectors[j]);
        return a;
    });
    auto fam_img = parallel_map<std::array<State, 3>>(NG, [&](size_t j) {
        std::array<State, 3> a;
        for (int r = 1; r <= 3; ++r)
            a[r - 1] = twisted_derivative(n - 1, Point::Z, fams[j][r - 1]);
        return a;
    });

    LinearSystem sys(NI + NG);
    StateRowIndex idx;
    for (size_t j = 0; j < NI; ++j)
        for (int r = 0; r < 3; ++r) add_state_column(sys, idx, r, j, inv_img[j][r]);
    for (size_t j = 0; j < NG; ++j)
        for (int r = 0; r < 3; ++r) add_state_column(sys, idx, r, NI + j, -fam_img[j][r]);
    LinearSolution sol = sys.solve();

    out.basis.depth = n;
    out.basis.weight = n;
    // The witness part of a null vector is determined by its state part, so
    // projecting the nullspace onto the state coordinates loses nothing; the
    // span filter drops null vectors that only relate redundant witness
    // columns to each other.
    DenseSpan span;
    for (const auto& nv : sol.nullspace) {
        std::vector<QExt> xi(nv.begin(), nv.begin() + static_cast<long>(NI));
        if (!span.absorb(xi)) continue;
        SingularWitness wit;
        wit.vector = combine(inv.vectors, xi);
        for (int r = 0; r < 3; ++r) {
            State g;
            for (size_t j = 0; j < NG; ++j)
                if (!nv[NI + j].is_zero()) g += fams[j][r].scaled(nv[NI + j]);
            wit.G[r] = std::move(g);
        }
        out.basis.vectors.push_back(wit.vector);
        out.basis.labels.push_back("singular_" + std::to_string(out.basis.vectors.size()));
        out.witnesses.push_back(std::move(wit));
    }

    std::vector<std::array<State, 3>> hfams =
        equivariant_spanning_set(n - 2, n - 1, {Point::Z});
    auto h_img = parallel_map<std::array<State, 3>>(hfams.size(), [&](size_t j) {
        std::array<State, 3> a;
        for (int r = 1; r <= 3; ++r)
            a[r - 1] = twisted_derivative(n - 1, Point::Z, hfams[j][r - 1]);
        return a;
    });
    out.mode2_consistent = true;
    for (const auto& wit : out.witnesses) {
        LinearSystem m2(hfams.size());
        StateRowIndex ix2;
        for (size_t j = 0; j < hfams.size(); ++j)
            for (int r = 0; r < 3; ++r) add_state_column(m2, ix2, r, j, h_img[j][r]);
        for (int r = 0; r < 3; ++r)
            add_state_rhs(m2, ix2, r, diagonal_action(r + 1, 2, wit.vector));
        if (!m2.solve(false).consistent) out.mode2_consistent = false;
    }
    return out;
}

State build_sigma(int n) {
    if (n != 1 && n != 3) throw argument_error("density exponent must be 1 or 3");
    const std::string tag = n == 1 ? "sigma1" : "sigma3";
    const std::string wit = n == 1 ? "witness_quadratic_r" : "witness_quartic_r";
    State s = golden_state(tag);
    for (int r = 1; r <= 3; ++r) {
        if (!diagonal_action(r, 0, s).is_zero())
            throw config_error(tag + " is not invariant under zero modes");
        State res = diagonal_action(r, 1, s) -
                    twisted_derivative(n == 1 ? 1 : 3, Point::Z,
                                       golden_state(wit + std::to_string(r)));
        if (!res.is_zero())
            throw config_error(tag + " fails the mode-1 singularity identity");
    }
    return s;
}

Decomposition decompose_zero_product(int m, int n) {
    if ((m != 1 && m != 3) || (n != 1 && n != 3))
        throw argument_error("decomposition exponents must be in {1, 3}");
    Decomposition dec;
    dec.m = m;
    dec.n = n;
    State sz = build_sigma(m);
    State sw = swap_points(build_sigma(n));
    dec.product = mode_action(sz, 0, sw);
    const int dP = (m + 1) + (n + 1) - 1;
    const int WP = (m + 1) + (n + 1);
    const bool full_ansatz = (m == 1 && n == 1);
    const int base_cap = dec.product.max_u_pole() + 1;
    for (int esc = 0; esc <= 2; ++esc) {
        const int cap = base_cap + esc;
        std::vector<State> acols = full_ansatz ? monomial_columns(dP, WP - 1, cap)
                                               : invariant_columns(dP, WP - 1, cap);
        std::vector<State> bcols = full_ansatz ? monomial_columns(dP - 1, WP, cap)
                                               : invariant_columns(dP - 1, WP, cap);
        auto a_img = parallel_map<State>(
            acols.size(), [&](size_t j) { return weighted_derivative_pair(m, n, acols[j]); });
        auto b_img =
            parallel_map<State>(bcols.size(), [&](size_t j) { return translate(bcols[j]); });
        LinearSystem sys(acols.size() + bcols.size());
        StateRowIndex idx;
        for (size_t j = 0; j < acols.size(); ++j) add_state_column(sys, idx, 0, j, a_img[j]);
        for (size_t j = 0; j < bcols.size(); ++j)
            add_state_column(sys, idx, 0, acols.size() + j, b_img[j]);
        add_state_rhs(sys, idx, 0, dec.product);
        LinearSolution sol = sys.solve(false);
        if (sol.consistent) {
            std::vector<QExt> ca(sol.particular.begin(),
                                 sol.particular.begin() + static_cast<long>(acols.size()));
            std::vector<QExt> cb(sol.particular.begin() + static_cast<long>(acols.size()),
                                 sol.particular.end());
            dec.A = combine(acols, ca);
            dec.B = combine(bcols, cb);
            dec.found = true;
            dec.pole_cap = cap;
            dec.escalations = esc;
            if (esc > 0) dec.note = "pole cap enlarged " + std::to_string(esc) + " time(s)";
            return dec;
        }
    }
    dec.note = "no solution within the pole bounds";
    return dec;
}

State verify_given_decomposition(int m, int n, const State& A, const State& B) {
    State product = mode_action(build_sigma(m), 0, swap_points(build_sigma(n)));
    return product - weighted_derivative_pair(m, n, A) - translate(B);
}

RegularityReport regular_modulo_translates(const State& A) {
    RegularityReport rep;
    auto [dA, wA] = state_bigrade(A);
    const int P = A.max_u_pole();
    std::vector<State> zcols = invariant_columns(dA - 1, wA, P);
    // Adopt A's truncation order so ansatz and target scalars stay compatible.
    int K = Scalar::kNoCutoff;
    for (const auto& [w, c] : A.terms()) {
        K = c.cutoff();
        break;
    }
    if (K != Scalar::kNoCutoff)
        for (State& zc : zcols) zc = zc.with_cutoff(K);
    auto z_img = parallel_map<State>(zcols.size(), [&](size_t j) { return translate(zcols[j]); });

    LinearSystem sys(zcols.size());
    StateRowIndex idx;
    // Equations: the pole part of the diagonal expansion of A - translate(Z)
    // vanishes. Blocks are the negative expansion powers.
    auto add_negative = [&](const State& v, bool rhs, size_t col) {
        LaurentStateSeries ser = expand_at_diagonal(v, P);
        for (const auto& [p, coeff] : ser.coeffs) {
            if (p >= 0 || coeff.is_zero()) continue;
            if (rhs)
                add_state_rhs(sys, idx, p, coeff);
            else
                add_state_column(sys, idx, p, col, coeff);
        }
    };
    for (size_t j = 0; j < zcols.size(); ++j) add_negative(z_img[j], false, j);
    add_negative(A, true, 0);
    LinearSolution sol = sys.solve(false);
    if (!sol.consistent) {
        rep.feasible = false;
        rep.lowest_power = expand_at_diagonal(A, P).lowest_power();
        rep.note = "diagonal poles cannot be absorbed by a translate";
        return rep;
    }
    rep.feasible = true;
    rep.Z = combine(zcols, sol.particular);
    rep.lowest_power = expand_at_diagonal(A - translate(rep.Z), P).lowest_power();
    if (rep.lowest_power < 0) throw config_error("regularity solve left a diagonal pole");
    return rep;
}

}  // namespace gaudin
