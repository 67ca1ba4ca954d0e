// Rescaled-basis computations: truncated densities, next-to-leading-order
// singularity and pairwise checks, the combinatorial expansion replay, and
// the uniqueness solve.

#include "gaudin/hbar.hpp"

#include <algorithm>
#include <chrono>

#include "gaudin/golden.hpp"
#include "gaudin/textio.hpp"
#include "gaudin/util.hpp"

namespace gaudin {

namespace {

constexpr int kCut = 3;

Gen Iz(int a, int p, int n) { return make_current(a, p, n, Point::Z); }

// All color tuples of rank k whose symmetric-tensor value is nonzero.
void for_sym_tuples(int k, const std::function<void(const std::vector<int>&, const Rat&)>& fn) {
    std::vector<int> idx(static_cast<size_t>(k), 1);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            Rat v = sym_tensor_value(idx);
            if (v != 0) fn(idx, v);
            return;
        }
        for (int c = 1; c <= 3; ++c) {
            idx[static_cast<size_t>(pos)] = c;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
}

// Symmetrized block of k depth-one currents at `pt`: tail colors contracted
// with the symmetric tensor, distinguished color `a` averaged over its slot.
// The colored tail sum is invariant under tail reorderings, so averaging the
// distinguished position alone realizes the full symmetrization.
State sym_block(int a, int k, Point pt) {
    State out;
    QExt avg(rat(1, k));
    for_sym_tuples(k - 1, [&](const std::vector<int>& tail, const Rat& t) {
        for (int j = 0; j < k; ++j) {
            Word w;
            w.reserve(static_cast<size_t>(k));
            size_t ti = 0;
            for (int i = 0; i < k; ++i) {
                int color = (i == j) ? a : tail[ti++];
                w.push_back(make_current(color, 0, -1, pt));
            }
            out += normal_order(w, Scalar(QExt(t) * avg, 0, 0, kCut));
        }
    });
    return out;
}

// Applies the canonical words of `zfac` as operator words on top of the state
// `wfac` (term-by-term concatenation, then normal ordering).
State attach_blocks(const State& zfac, const State& wfac) {
    State out;
    for (const auto& [zw, zc] : zfac.sorted_terms())
        for (const auto& [ww, wc] : wfac.sorted_terms()) {
            Word cat = zw;
            cat.insert(cat.end(), ww.begin(), ww.end());
            out += normal_order(cat, zc * wc);
        }
    return out;
}

// Top term of the degree-2n density: symmetric contraction of 2n depth-one
// currents.
State top_state(int n) {
    State out;
    for_sym_tuples(2 * n, [&](const std::vector<int>& idx, const Rat& t) {
        Word w;
        w.reserve(idx.size());
        for (int c : idx) w.push_back(Iz(c, 0, -1));
        out += normal_order(w, Scalar(QExt(t), 0, 0, kCut));
    });
    return out;
}

// The h-order correction with coefficient n(2n+1)(2n-2)/(2n-1): f-contracted
// head currents with the remaining slot colors symmetrized.
State correction_state(int n) {
    State out;
    if (n < 2) return out;
    Rat coeff = rat(n) * rat(2 * n + 1) * rat(2 * n - 2) / rat(2 * n - 1);
    const int k = 2 * n - 3;  // symmetrized slots: c plus the 2n-4 tails
    QExt avg(rat(1, k));
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                QExt fc = f_const(a, b, c);
                if (fc.is_zero()) continue;
                for_sym_tuples(2 * n - 4, [&](const std::vector<int>& tail, const Rat& t) {
                    for (int j = 0; j < k; ++j) {
                        Word w{Iz(a, 0, -2), Iz(b, 1, -1)};
                        w.reserve(static_cast<size_t>(k) + 2);
                        size_t ti = 0;
                        for (int i = 0; i < k; ++i) {
                            int color = (i == j) ? c : tail[ti++];
                            w.push_back(Iz(color, 0, -1));
                        }
                        out += normal_order(w, Scalar(QExt(t) * avg * fc * QExt(coeff), 0, 1, kCut));
                    }
                });
            }
    return out;
}

std::string grade_summary(const State& res) {
    std::string s;
    for (int h = 0; h < kCut; ++h) {
        size_t cnt = res.h_part(h).size();
        if (cnt) s += " h^" + std::to_string(h) + ": " + std::to_string(cnt) + " terms;";
    }
    return s.empty() ? " (empty)" : s;
}

// Applies the generator word right-to-left to x and scales by coeff * h^hpow.
State apply_word(const Word& w, const State& x, const QExt& coeff, int hpow) {
    State cur = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply_generator(*it, cur);
    return cur.scaled(Scalar(coeff, 0, hpow, kCut));
}

Rat factorial(int k) {
    Rat f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// The three-prefactor expansion of the top term's zero-mode action, applied
// to x: contraction over all rank-(m+1) color tuples.
State apply_top_patterns(int m, const State& x, const Rat& p1, const Rat& p2, const Rat& p3) {
    State out;
    for_sym_tuples(m + 1, [&](const std::vector<int>& t, const Rat& tv) {
        {
            Word w;
            w.push_back(Iz(t[0], 0, -2));
            for (int i = 1; i < m; ++i) w.push_back(Iz(t[static_cast<size_t>(i)], 0, -1));
            w.push_back(Iz(t[static_cast<size_t>(m)], 0, 1));
            out += apply_word(w, x, QExt(p1 * tv), 0);
        }
        {
            Word w;
            for (int i = 0; i < m; ++i) w.push_back(Iz(t[static_cast<size_t>(i)], 0, -1));
            w.push_back(Iz(t[static_cast<size_t>(m)], 0, 0));
            out += apply_word(w, x, QExt(p2 * tv), 0);
        }
        {
            Word w;
            w.push_back(Iz(t[0], 0, -2));
            for (int i = 1; i < m - 1; ++i) w.push_back(Iz(t[static_cast<size_t>(i)], 0, -1));
            w.push_back(Iz(t[static_cast<size_t>(m - 1)], 0, 0));
            w.push_back(Iz(t[static_cast<size_t>(m)], 0, 0));
            out += apply_word(w, x, QExt(p3 * tv), 0);
        }
    });
    return out;
}

// The four-pattern expansion of the correction term's zero-mode action,
// applied to x; every pattern carries one explicit h and the overall xi.
State apply_correction_patterns(int m, const State& x, const Rat& xi) {
    State out;
    if (m < 3) return out;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                QExt fc = f_const(a, b, c);
                if (fc.is_zero()) continue;
                // Pattern 1: head I^a_{-2}, slots (b, tails), trailing I^c_0.
                {
                    const int k = m - 2;
                    QExt pc = fc * QExt(-xi * factorial(m - 2) * rat(1, k));
                    for_sym_tuples(m - 3, [&](const std::vector<int>& tail, const Rat& tv) {
                        for (int j = 0; j < k; ++j) {
                            Word w{Iz(a, 0, -2)};
                            size_t ti = 0;
                            for (int i = 0; i < k; ++i)
                                w.push_back(Iz(i == j ? b : tail[ti++], 0, -1));
                            w.push_back(Iz(c, 0, 0));
                            out += apply_word(w, x, pc * QExt(tv), 1);
                        }
                    });
                }
                // Pattern 2: head I^a_{-2} I^{b[1]}_{-1}, tails, trailing I^c_0.
                {
                    QExt pc = fc * QExt(xi * rat(2) * rat(m - 2) * factorial(m - 3));
                    for_sym_tuples(m - 3, [&](const std::vector<int>& tail, const Rat& tv) {
                        Word w{Iz(a, 0, -2), Iz(b, 1, -1)};
                        for (int i : tail) w.push_back(Iz(i, 0, -1));
                        w.push_back(Iz(c, 0, 0));
                        out += apply_word(w, x, pc * QExt(tv), 1);
                    });
                }
                if (m < 5) continue;
                // Patterns 3 and 4: two distinguished colors inside the
                // symmetrized slots, averaged over ordered position pairs.
                const int k = m - 3;
                QExt pair_avg(rat(1, static_cast<long long>(k) * (k - 1)));
                QExt base = QExt(xi * rat(m - 2) * rat(m - 3) * factorial(m - 3)) * pair_avg;
                for (int d = 1; d <= 3; ++d) {
                    for_sym_tuples(m - 5, [&](const std::vector<int>& tail, const Rat& tv) {
                        for (int jc = 0; jc < k; ++jc)
                            for (int jd = 0; jd < k; ++jd) {
                                if (jc == jd) continue;
                                // Pattern 3: slots (c, d, tails), trailing I^d_0.
                                {
                                    Word w{Iz(a, 0, -2), Iz(b, 1, -1)};
                                    size_t ti = 0;
                                    for (int i = 0; i < k; ++i) {
                                        int color = i == jc ? c : (i == jd ? d : tail[ti++]);
                                        w.push_back(Iz(color, 0, -1));
                                    }
                                    w.push_back(Iz(d, 0, 0));
                                    out += apply_word(w, x, fc * base * QExt(tv), 1);
                                }
                                // Pattern 4: head I^d_{-2} I^{a[1]}_{-1}, slots
                                // (b, d, tails), trailing I^c_0.
                                {
                                    Word w{Iz(d, 0, -2), Iz(a, 1, -1)};
                                    size_t ti = 0;
                                    for (int i = 0; i < k; ++i) {
                                        int color = i == jc ? b : (i == jd ? d : tail[ti++]);
                                        w.push_back(Iz(color, 0, -1));
                                    }
                                    w.push_back(Iz(c, 0, 0));
                                    out += apply_word(w, x, -fc * base * QExt(tv), 1);
                                }
                            }
                    });
                }
            }
    return out;
}

}  // namespace

State rescale(const State& v) {
    State out;
    for (const auto& [w, c] : v.terms()) out.add(w, c.shifted(0, word_currents(w)));
    return out;
}

State build_sigma_tilde(int n) {
    if (n < 1) throw argument_error("density parameter must be positive");
    HbarAlgebraGuard guard(true);
    return top_state(n) + correction_state(n);
}

std::array<State, 3> check_singular_mod_hbar3(int n) {
    if (n < 1) throw argument_error("density parameter must be positive");
    HbarAlgebraGuard guard(true);
    State st = build_sigma_tilde(n);
    QExt gcoef(rat(-4 * n, 2 * n - 1));
    std::array<State, 3> G;
    for (int r = 1; r <= 3; ++r)
        G[r - 1] = sym_block(r, 2 * n - 1, Point::Z).scaled(gcoef).shifted(0, 2);
    for (int r = 1; r <= 3; ++r) {
        State zm = diagonal_action(r, 0, st);
        if (!zm.is_zero())
            throw config_error("zero-mode action nonzero at color " + std::to_string(r) + ":" +
                               grade_summary(zm));
        State res = diagonal_action(r, 1, st) -
                    twisted_derivative(2 * n - 1, Point::Z, G[r - 1]);
        if (!res.is_zero())
            throw config_error("mode-1 singularity residual nonzero at color " +
                               std::to_string(r) + ":" + grade_summary(res));
    }
    return G;
}

PairwiseReport check_pairwise(int m_exp, int n_exp) {
    HbarConfig cfg;
    cfg.m = m_exp;
    cfg.n = n_exp;
    cfg.validate();
    PairwiseReport rep;
    rep.m = m_exp;
    rep.n = n_exp;
    rep.hbar_cutoff = kCut;
    auto t0 = std::chrono::steady_clock::now();
    HbarAlgebraGuard guard(true);

    State sz = build_sigma_tilde((m_exp + 1) / 2);
    State sw = swap_points(build_sigma_tilde((n_exp + 1) / 2));
    rep.product = mode_action(sz, 0, sw);

    Rat zeta = rat(2LL * (m_exp + 1) * (n_exp + 1), static_cast<long long>(m_exp) * n_exp);
    State a_core, b_core;
    for (int a = 1; a <= 3; ++a) {
        State zb = sym_block(a, m_exp, Point::Z);
        State wb = sym_block(a, n_exp, Point::W);
        a_core += attach_blocks(translate(zb), wb);
        b_core += attach_blocks(zb, wb);
    }
    rep.A = a_core.scaled(Scalar(QExt(zeta), -1, 2, kCut));
    rep.B = b_core.scaled(Scalar(QExt(zeta), -2, 2, kCut));

    State rhs = twisted_derivative(m_exp, Point::Z, rep.A).scaled(QExt(n_exp)) -
                twisted_derivative(n_exp, Point::W, rep.A).scaled(QExt(m_exp)) +
                translate(rep.B);
    State residual = rep.product - rhs;
    rep.residual_zero = residual.is_zero();
    // The regularity ansatz grows combinatorially with the exponents; attempt
    // it only where the invariant spanning family stays small.
    if (m_exp + n_exp <= 6) {
        rep.regularity_checked = true;
        // The pair state is a global h^2 multiple of an h-free core, while the
        // translate ansatz solves over plain coefficients; strip the factor
        // and run the solve in the plain algebra. A plain-witness solution
        // times h^2 is a witness for the truncated statement.
        State core = rep.A.h_part(2).shifted(0, -2).with_cutoff(Scalar::kNoCutoff);
        HbarAlgebraGuard plain(false);
        rep.a_regular_mod_translates = regular_modulo_translates(core).feasible;
    }

    // Swapped-order product against the skew-symmetry series.
    State sz2 = build_sigma_tilde((n_exp + 1) / 2);
    State sw2 = swap_points(build_sigma_tilde((m_exp + 1) / 2));
    State p2 = mode_action(sz2, 0, sw2);
    rep.skew_consistent = (p2 == skew_rhs(sw2, sz2, 0));

    rep.term_count_peak = std::max({rep.product.size(), rep.A.size(), rep.B.size(),
                                    residual.size(), p2.size(), sz.size(), sw.size()});
    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

Rat xi_proof_coefficient(int m) {
    if (m < 1) throw argument_error("exponent must be positive");
    return rat(static_cast<long long>(m + 2) * (m + 1) * (m - 1), 2LL * m);
}

bool xi_identity_holds(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        Rat lhs = xi_proof_coefficient(2 * n - 1);
        Rat rhs = rat(static_cast<long long>(n) * (2 * n + 1) * (2 * n - 2), 2LL * n - 1);
        if (lhs != rhs) return false;
    }
    return true;
}

ProofCombinatoricsReport check_proof_combinatorics(int m_exp) {
    if (m_exp < 1 || m_exp % 2 == 0) throw argument_error("exponent must be odd and positive");
    ProofCombinatoricsReport rep;
    rep.m = m_exp;
    rep.pref1 = factorial(m_exp + 1) / factorial(m_exp - 1);
    rep.pref2 = factorial(m_exp + 1) / factorial(m_exp);
    rep.pref3 = factorial(m_exp + 1) * rat(m_exp - 1) / (rat(2) * factorial(m_exp - 1));
    rep.xi = xi_proof_coefficient(m_exp);

    HbarAlgebraGuard guard(true);
    const int n = (m_exp + 1) / 2;
    State x = normal_order(Word{make_current(1, 0, -1, Point::W), make_current(2, 0, -1, Point::W)},
                           Scalar(QExt(1), 0, 0, kCut));

    State lhs_top = mode_action(top_state(n), 0, x);
    State rhs_top = apply_top_patterns(m_exp, x, rep.pref1, rep.pref2, rep.pref3);
    rep.top_match = (lhs_top - rhs_top).is_zero();

    State lhs_corr = mode_action(correction_state(n), 0, x);
    State rhs_corr = apply_correction_patterns(m_exp, x, rep.xi);
    rep.correction_match = (lhs_corr - rhs_corr).is_zero();

    if (!rep.top_match)
        rep.diff += "top-term expansion residual:" + grade_summary(lhs_top - rhs_top);
    if (!rep.correction_match)
        rep.diff += " correction expansion residual:" + grade_summary(lhs_corr - rhs_corr);
    return rep;
}

size_t singular_mod_hbar3_solution_dim(int n) {
    if (n < 1 || n > 3) throw argument_error("uniqueness solve supported for n = 1, 2, 3");
    HbarAlgebraGuard guard(true);
    const int deg = 2 * n;

    auto keep_currents = [](int target) {
        return std::function<bool(const Word&)>(
            [target](const Word& w) { return word_currents(w) == target; });
    };
    std::vector<State> xcols;
    for (State& v : invariant_spanning_set(deg, deg, {Point::Z}, keep_currents(deg)))
        xcols.push_back(v.with_cutoff(kCut));
    for (State& v : invariant_spanning_set(deg, deg, {Point::Z}, keep_currents(deg - 1)))
        xcols.push_back(v.shifted(0, 1).with_cutoff(kCut));

    std::vector<std::array<State, 3>> fams =
        equivariant_spanning_set(deg - 1, deg - 1, {Point::Z});
    const size_t NX = xcols.size(), NG = fams.size();

    auto x_img = parallel_map<std::array<State, 3>>(NX, [&](size_t j) {
        std::array<State, 3> a;
        for (int r = 1; r <= 3; ++r) a[r - 1] = diagonal_action(r, 1, xcols[j]);
        return a;
    });
    auto g_img = parallel_map<std::array<State, 3>>(NG, [&](size_t j) {
        std::array<State, 3> a;
        for (int r = 1; r <= 3; ++r)
            a[r - 1] = twisted_derivative(deg - 1, Point::Z,
                                          fams[j][r - 1].shifted(0, 2).with_cutoff(kCut));
        return a;
    });

    LinearSystem sys(NX + NG);
    StateRowIndex idx;
    for (size_t j = 0; j < NX; ++j)
        for (int r = 0; r < 3; ++r) add_state_column(sys, idx, r, j, x_img[j][r]);
    for (size_t j = 0; j < NG; ++j)
        for (int r = 0; r < 3; ++r) add_state_column(sys, idx, r, NX + j, -g_img[j][r]);
    LinearSolution sol = sys.solve();

    // Combine each null vector's state part and count classes modulo h^2
    // terms: contracted spanning states can collapse to pure h^2 states
    // (bracket-reduced contractions), and those satisfy every truncated
    // condition trivially. The uniqueness statement is about the classes
    // below h^2, so rank the h^0 + h^1 parts of the solutions.
    std::vector<State> solutions;
    for (const auto& nv : sol.nullspace) {
        State s;
        for (size_t j = 0; j < NX; ++j)
            if (!nv[j].is_zero()) s += xcols[j].scaled(nv[j]);
        State cls = s.with_cutoff(2);
        if (!cls.is_zero()) solutions.push_back(std::move(cls));
    }
    return state_rank(solutions);
}

ProportionalityReport compare_closed_form_a13() {
    ProportionalityReport rep;
    State exact_top = golden_state("pair13_A").filtration_part(4);
    HbarAlgebraGuard guard(true);
    State a_core;
    for (int a = 1; a <= 3; ++a)
        a_core += attach_blocks(translate(sym_block(a, 1, Point::Z)), sym_block(a, 3, Point::W));
    State closed = a_core.scaled(Scalar(QExt(rat(16, 3)), -1, 2, kCut));
    State stripped = closed.h_part(2).shifted(0, -2);
    LinearSolution sol = solve_linear_combination({exact_top}, stripped);
    if (sol.consistent && sol.particular.size() == 1) {
        rep.proportional = true;
        rep.ratio = sol.particular[0];
        rep.note = "closed form = ratio * top layer of the exact pair state";
    } else {
        rep.note = "closed form is not proportional to the exact top layer";
    }
    return rep;
}

}  // namespace gaudin
