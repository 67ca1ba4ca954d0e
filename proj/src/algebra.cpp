// algebra.cpp
//
// Bracket tables, the normal-ordering worklist, bigraded enumeration, and
// the diagonal action.

#include "gaudin/algebra.hpp"

#include <algorithm>

namespace gaudin {

namespace {
bool g_hbar_mode = false;

Rat factorial(int n) {
    Rat r(1);
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}
}  // namespace

bool hbar_algebra_enabled() { return g_hbar_mode; }
HbarAlgebraGuard::HbarAlgebraGuard(bool on) : prev(g_hbar_mode) { g_hbar_mode = on; }
HbarAlgebraGuard::~HbarAlgebraGuard() { g_hbar_mode = prev; }

std::vector<std::pair<Word, Scalar>> State::sorted_terms() const {
    std::vector<std::pair<Word, Scalar>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return v;
}

std::vector<std::pair<Gen, Scalar>> bracket_terms(Gen g1, Gen g2, const Scalar& carry) {
    std::vector<std::pair<Gen, Scalar>> out;
    if (is_central(g1) || is_central(g2)) return out;
    const int h_struct = g_hbar_mode ? 1 : 0;
    const int h_central = g_hbar_mode ? 2 : 0;

    int a = g_color(g1), p = g_deriv(g1), m = g_mode(g1);
    int b = g_color(g2), q = g_deriv(g2), n = g_mode(g2);
    Point X = g_point(g1), Y = g_point(g2);

    if (X == Y) {
        // [I^{a[p]}_m, I^{b[q]}_n] =
        //   -(p!q!/(p+q+1)!)(f^{ab}_c I^{c[p+q+1]}_{m+n} - n d^{ab} d_{m+n,0} k^{[p+q+1]})
        Rat c0 = factorial(p) * factorial(q) / factorial(p + q + 1);
        for (int e = 1; e <= 3; ++e) {
            QExt fe = f_const(a, b, e);
            if (fe.is_zero()) continue;
            out.emplace_back(make_current(e, p + q + 1, m + n, X),
                             carry.scaled(fe * QExt(-c0)).shifted(0, h_struct));
        }
        if (a == b && m + n == 0) {
            out.emplace_back(make_central(p + q + 1, X),
                             carry.scaled(QExt(c0 * n)).shifted(0, h_central));
        }
        return out;
    }

    // Cross-point bracket, oriented z-first; w-first is minus the swap.
    int sign = 1;
    if (X == Point::W) {
        std::swap(a, b);
        std::swap(p, q);
        std::swap(m, n);
        sign = -1;
    }
    auto emit = [&](Point pt, int j, const Rat& base) {
        int upow = -(p + q + 1 - j);
        for (int e = 1; e <= 3; ++e) {
            QExt fe = f_const(a, b, e);
            if (fe.is_zero()) continue;
            out.emplace_back(make_current(e, j, m + n, pt),
                             carry.scaled(fe * QExt(base)).shifted(upow, h_struct));
        }
        if (a == b && m + n == 0 && n != 0) {
            out.emplace_back(make_central(j, pt),
                             carry.scaled(QExt(base * Rat(-n))).shifted(upow, h_central));
        }
    };
    for (int j = 0; j <= p; ++j) {
        Rat base = Rat(sign * (((p + 1 - j) % 2 == 0) ? 1 : -1)) *
                   rat(binomial_int(p, static_cast<unsigned>(j))) * factorial(p + q - j);
        emit(Point::Z, j, base);
    }
    for (int j = 0; j <= q; ++j) {
        Rat base = Rat(sign * ((p % 2 == 0) ? 1 : -1)) *
                   rat(binomial_int(q, static_cast<unsigned>(j))) * factorial(p + q - j);
        emit(Point::W, j, base);
    }
    return out;
}

State normal_order(const Word& word, const Scalar& coeff) {
    State out;
    std::vector<std::pair<Word, Scalar>> work;
    work.emplace_back(word, coeff);
    while (!work.empty()) {
        Word w = std::move(work.back().first);
        Scalar c = std::move(work.back().second);
        work.pop_back();
        if (c.is_zero()) continue;
        size_t i = 0;
        bool unsorted = false;
        for (; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                unsorted = true;
                break;
            }
        if (!unsorted) {
            // Sorted word: currents form the prefix; the rightmost current has
            // the maximal mode, and a nonnegative mode annihilates the vacuum.
            size_t ncur = 0;
            while (ncur < w.size() && !is_central(w[ncur])) ++ncur;
            if (ncur > 0 && g_mode(w[ncur - 1]) >= 0) continue;
            out.add(w, c);
            continue;
        }
        Gen g1 = w[i], g2 = w[i + 1];
        for (auto& [g, s] : bracket_terms(g1, g2, c)) {
            Word bw;
            bw.reserve(w.size() - 1);
            bw.insert(bw.end(), w.begin(), w.begin() + i);
            bw.push_back(g);
            bw.insert(bw.end(), w.begin() + i + 2, w.end());
            work.emplace_back(std::move(bw), std::move(s));
        }
        std::swap(w[i], w[i + 1]);
        work.emplace_back(std::move(w), std::move(c));
    }
    return out;
}

State normal_order(const State& raw) {
    State out;
    for (const auto& [w, c] : raw.terms()) out += normal_order(w, c);
    return out;
}

State apply_generator(Gen g, const State& v) {
    State out;
    for (const auto& [w, c] : v.terms()) {
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(g);
        nw.insert(nw.end(), w.begin(), w.end());
        out += normal_order(nw, c);
    }
    return out;
}

std::vector<Word> enumerate_monomials(int n, int p, const std::vector<Point>& points) {
    if (n < 0 || p < 0) throw argument_error("bigrade must be nonnegative");
    std::vector<Gen> pool;
    for (Point pt : points) {
        for (int h = 1; h <= n; ++h)
            for (int q = 0; q + 1 <= p; ++q)
                for (int color = 1; color <= 3; ++color)
                    pool.push_back(make_current(color, q, -h, pt));
        for (int q = 0; q + 1 <= p; ++q) pool.push_back(make_central(q, pt));
    }
    std::sort(pool.begin(), pool.end());
    std::vector<Word> out;
    Word cur;
    // Non-decreasing sequences over the pool; each generator adds its bigrade.
    auto dfs = [&](auto&& self, size_t start, int depth_left, int weight_left) -> void {
        if (depth_left == 0 && weight_left == 0) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i < pool.size(); ++i) {
            Gen g = pool[i];
            int d = g_depth(g), wgt = g_weight(g);
            if (d > depth_left || wgt > weight_left) continue;
            cur.push_back(g);
            self(self, i, depth_left - d, weight_left - wgt);
            cur.pop_back();
        }
    };
    dfs(dfs, 0, n, p);
    return out;
}

State swap_points(const State& v) {
    State out;
    for (const auto& [w, c] : v.terms()) {
        Word nw;
        nw.reserve(w.size());
        for (Gen g : w) {
            Point other = g_point(g) == Point::Z ? Point::W : Point::Z;
            if (is_central(g)) nw.push_back(make_central(g_deriv(g), other));
            else nw.push_back(make_current(g_color(g), g_deriv(g), g_mode(g), other));
        }
        Scalar nc = Scalar::zero(c.cutoff());
        for (const auto& [uh, val] : c.terms()) {
            QExt sv = (uh.u % 2 == 0) ? val : -val;
            nc += Scalar(sv, uh.u, uh.h, c.cutoff());
        }
        out += normal_order(nw, nc);
    }
    return out;
}

State diagonal_action(int r, int m, const State& v) {
    check_color(r);
    if (m < 0) throw argument_error("diagonal action defined for modes m >= 0");
    const int h_struct = g_hbar_mode ? 1 : 0;
    const int h_central = g_hbar_mode ? 2 : 0;
    State out;
    for (const auto& [w, c] : v.terms()) {
        for (size_t j = 0; j < w.size(); ++j) {
            Gen g = w[j];
            if (is_central(g)) continue;
            int a = g_color(g), q = g_deriv(g), nn = g_mode(g);
            Point X = g_point(g);
            for (int e = 1; e <= 3; ++e) {
                QExt fe = f_const(r, a, e);
                if (fe.is_zero()) continue;
                Word nw = w;
                nw[j] = make_current(e, q, m + nn, X);
                out += normal_order(nw, c.scaled(fe).shifted(0, h_struct));
            }
            if (r == a && m + nn == 0 && nn != 0) {
                Word nw = w;
                nw[j] = make_central(q, X);
                out += normal_order(nw, c.scaled(QExt(rat(-nn))).shifted(0, h_central));
            }
        }
    }
    return out;
}

std::string gen_to_string(Gen g) {
    std::string pt = g_point(g) == Point::Z ? "z" : "w";
    if (is_central(g)) return "k[p=" + std::to_string(g_deriv(g)) + ",pt=" + pt + "]";
    return "I[a=" + std::to_string(g_color(g)) + ",p=" + std::to_string(g_deriv(g)) +
           ",n=" + std::to_string(g_mode(g)) + ",pt=" + pt + "]";
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (Gen g : w) s += gen_to_string(g) + " * ";
    s += "vac";
    return s;
}

}  // namespace gaudin
