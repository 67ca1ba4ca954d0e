// vertex.cpp
//
// Translation, twisted derivatives, the n-th product recursion, diagonal
// expansion into (w-z) series, and skew-symmetry checks.

#include "gaudin/vertex.hpp"

#include <deque>
#include <tuple>

#include "gaudin/util.hpp"

namespace gaudin {

namespace {

int state_max_depth(const State& v) {
    int d = 0;
    for (const auto& [w, c] : v.terms())
        if (word_depth(w) > d) d = word_depth(w);
    return d;
}

// Shared context for one A-word: memoizes suffix products against each right
// state (addresses in `pool` are stable, so pointers are valid keys).
struct MAContext {
    const Word& w;
    std::vector<int> sufdepth;  // sufdepth[i] = depth of w[i..]
    std::deque<State> pool;
    std::map<std::tuple<size_t, int, const State*>, State> memo;
};

// (g_{-h} U)_(n) B expanded through the normally ordered product of the
// field of g_{-h} (an (h-1)-fold derivative of the current field, modes
// (-1)^{h-1} binom(m, h-1) g_{m-h+1}) with the field of U. Creation parts
// multiply from the left, annihilation parts act on B first. The m-ranges
// are exact cutoffs from the depth grading.
const State& ma(MAContext& ctx, size_t i, int n, const State& B) {
    auto key = std::make_tuple(i, n, &B);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;
    State out;
    if (i == ctx.w.size()) {
        if (n == -1) out = B;  // vacuum field is the identity
    } else {
        Gen g = ctx.w[i];
        if (is_central(g)) {
            // Central fields are constant: multiplication by the generator.
            out = apply_generator(g, ma(ctx, i + 1, n, B));
        } else {
            int h = -g_mode(g);
            int dU = ctx.sufdepth[i + 1];
            int dB = state_max_depth(B);
            int sgn = (h % 2 == 1) ? 1 : -1;
            for (int m = -1; m >= n - dU - dB; --m) {
                long long bc = binomial_int(m, static_cast<unsigned>(h - 1));
                if (bc == 0) continue;
                const State& inner = ma(ctx, i + 1, n - m - 1, B);
                if (inner.is_zero()) continue;
                State t = apply_generator(
                    make_current(g_color(g), g_deriv(g), m - h + 1, g_point(g)), inner);
                out += t.scaled(QExt(rat(sgn * bc)));
            }
            for (int m = 0; m <= dB + h - 1; ++m) {
                long long bc = binomial_int(m, static_cast<unsigned>(h - 1));
                if (bc == 0) continue;
                State gB = apply_generator(
                    make_current(g_color(g), g_deriv(g), m - h + 1, g_point(g)), B);
                if (gB.is_zero()) continue;
                ctx.pool.push_back(std::move(gB));
                const State& inner = ma(ctx, i + 1, n - m - 1, ctx.pool.back());
                out += inner.scaled(QExt(rat(sgn * bc)));
            }
        }
    }
    auto [pos, inserted] = ctx.memo.emplace(std::move(key), std::move(out));
    return pos->second;
}

State skew_rhs_capped(const State& B, const State& A, int n, int cap) {
    int bound = state_max_depth(A) + state_max_depth(B) - n - 1;
    if (cap < bound) bound = cap;
    State acc;
    Rat invfact(1);
    for (int k = 0; k <= bound; ++k) {
        if (k > 0) invfact /= k;
        State p = mode_action(B, n + k, A);
        if (p.is_zero()) continue;
        State t = translate_pow(p, k);
        int sgn = ((n + k) % 2 == 0) ? 1 : -1;
        acc += t.scaled(QExt(Rat(sgn) * invfact));
    }
    return -acc;
}

}  // namespace

State translate(const State& v) {
    State out;
    for (const auto& [w, c] : v.terms()) {
        for (size_t j = 0; j < w.size(); ++j) {
            Gen g = w[j];
            if (is_central(g)) continue;
            int n = g_mode(g);
            Word nw = w;
            nw[j] = make_current(g_color(g), g_deriv(g), n - 1, g_point(g));
            out += normal_order(nw, c.scaled(QExt(rat(-n))));
        }
    }
    return out;
}

State translate_pow(const State& v, int j) {
    State r = v;
    for (int i = 0; i < j; ++i) r = translate(r);
    return r;
}

State twisted_derivative(int j, Point pt, const State& v) {
    State out;
    for (const auto& [w, c] : v.terms()) {
        Scalar du = (pt == Point::Z) ? c.d_du_z() : c.d_du_w();
        if (!du.is_zero()) out.add(w, du);
        for (size_t i = 0; i < w.size(); ++i) {
            Gen g = w[i];
            if (g_point(g) != pt) continue;
            Word nw = w;
            nw[i] = is_central(g)
                        ? make_central(g_deriv(g) + 1, pt)
                        : make_current(g_color(g), g_deriv(g) + 1, g_mode(g), pt);
            out += normal_order(nw, c);
        }
        Word nw = w;
        nw.push_back(make_central(0, pt));
        out += normal_order(nw, c.scaled(QExt(rat(-j, 2))));
    }
    return out;
}

State mode_action(const State& A, int n, const State& B) {
    auto terms = A.sorted_terms();
    auto parts = parallel_map<State>(terms.size(), [&](size_t idx) {
        const auto& [w, c] = terms[idx];
        MAContext ctx{w, {}, {}, {}};
        ctx.sufdepth.assign(w.size() + 1, 0);
        for (size_t i = w.size(); i-- > 0;) ctx.sufdepth[i] = ctx.sufdepth[i + 1] + g_depth(w[i]);
        return ma(ctx, 0, n, B).scaled(c);
    });
    State out;
    for (auto& p : parts) out += p;
    return out;
}

LaurentStateSeries expand_at_diagonal(const State& v, int order) {
    if (v.max_u_pole() > order)
        throw argument_error("diagonal expansion to order " + std::to_string(order) +
                             " cannot resolve pole order " + std::to_string(v.max_u_pole()));
    LaurentStateSeries series;
    series.truncation_order = order;
    for (const auto& [w, c] : v.terms()) {
        std::vector<size_t> wpos;
        for (size_t i = 0; i < w.size(); ++i)
            if (g_point(w[i]) == Point::W) wpos.push_back(i);
        for (const auto& [uh, val] : c.terms()) {
            int base = uh.u;  // u^e = (-eps)^e
            if (base > order) continue;
            Word cur = w;
            auto rec = [&](auto&& self, size_t bi, int used, const Rat& fac) -> void {
                if (bi == wpos.size()) {
                    QExt coeff = val * QExt(fac);
                    if (base % 2 != 0) coeff = -coeff;
                    Scalar sc(coeff, 0, uh.h, c.cutoff());
                    series.coeffs[base + used] += normal_order(cur, sc);
                    return;
                }
                size_t i = wpos[bi];
                Gen g = w[i];
                Rat rfact(1);
                for (int r = 0; used + r <= order - base; ++r) {
                    if (r > 0) rfact /= r;
                    cur[i] = is_central(g)
                                 ? make_central(g_deriv(g) + r, Point::Z)
                                 : make_current(g_color(g), g_deriv(g) + r, g_mode(g), Point::Z);
                    self(self, bi + 1, used + r, fac * rfact);
                }
                cur[i] = g;
            };
            rec(rec, 0, 0, Rat(1));
        }
    }
    for (auto it = series.coeffs.begin(); it != series.coeffs.end();)
        it = it->second.is_zero() ? series.coeffs.erase(it) : std::next(it);
    return series;
}

State skew_rhs(const State& B, const State& A, int n) {
    return skew_rhs_capped(B, A, n, 1 << 20);
}

SkewReport skew_symmetry_check(const State& A, const State& B, int depth) {
    SkewReport rep;
    State lhs = mode_action(A, 0, B);
    State rhs = skew_rhs_capped(B, A, 0, depth);
    rep.residual = lhs - rhs;
    rep.pass = rep.residual.is_zero();
    return rep;
}

}  // namespace gaudin
