// Independent cross-check of the current algebra against its defining
// realization: a current of derivative order p at spectral parameter x is the
// sum over marked points z_i of (-1)^p p! / (x - z_i)^{p+1} times the mode
// generator attached to site i, and a central generator becomes the same sum
// with the site level kappa_i in place of the mode generator. States then
// live in a two-site vacuum module with its own, much simpler normal orderer
// (per-site affine brackets only). Agreement of both routes at many rational
// sample points validates the engine's same-point bracket, the cross-point
// bracket with its (z-w) Laurent coefficients, normal ordering, and the
// diagonal action.

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "doctest.h"
#include "gaudin/algebra.hpp"

namespace {

using namespace gaudin;

// ---- oracle scalar: polynomials in the site levels kappa_1, kappa_2 ----

using KKey = std::pair<int, int>;  // exponents of kappa_1, kappa_2

struct KPoly {
    std::map<KKey, QExt> terms;

    static KPoly constant(const QExt& q) {
        KPoly p;
        if (!q.is_zero()) p.terms.emplace(KKey{0, 0}, q);
        return p;
    }
    static KPoly level(int site) {
        KPoly p;
        p.terms.emplace(site == 1 ? KKey{1, 0} : KKey{0, 1}, QExt(1));
        return p;
    }
    bool is_zero() const { return terms.empty(); }
    bool operator==(const KPoly& o) const { return terms == o.terms; }

    void add(const KKey& k, const QExt& v) {
        if (v.is_zero()) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    KPoly operator+(const KPoly& o) const {
        KPoly r = *this;
        for (const auto& [k, v] : o.terms) r.add(k, v);
        return r;
    }
    KPoly operator*(const QExt& q) const {
        KPoly r;
        for (const auto& [k, v] : terms) r.add(k, v * q);
        return r;
    }
    KPoly operator*(const KPoly& o) const {
        KPoly r;
        for (const auto& [ka, va] : terms)
            for (const auto& [kb, vb] : o.terms)
                r.add(KKey{ka.first + kb.first, ka.second + kb.second}, va * vb);
        return r;
    }
};

// ---- oracle module: words of per-site mode generators on the vacuum ----

// Letter {site, mode, color}; std::array comparison gives the canonical
// order (site, then mode, then color).
using SGen = std::array<int, 3>;
using OWord = std::vector<SGen>;
using OState = std::map<OWord, KPoly>;

void oadd(OState& v, const OWord& w, const KPoly& c) {
    if (c.is_zero()) return;
    auto it = v.find(w);
    if (it == v.end()) {
        v.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) v.erase(it);
    }
}

OState oscale(const OState& v, const KPoly& c) {
    OState r;
    for (const auto& [w, t] : v) oadd(r, w, t * c);
    return r;
}

bool ostate_eq(const OState& a, const OState& b) { return a == b; }

// Applies one site letter to a canonical oracle state. Per-site bracket:
//   [a_m^(i), b_n^(j)] = delta_ij (f^{ab}_c c_{m+n}^(i) + m delta^{ab}
//                                  delta_{m+n,0} kappa_i),
// nonnegative modes annihilate the vacuum.
OState oapply(const SGen& L, const OState& v) {
    OState out;
    for (const auto& [w, c] : v) {
        const int mode = L[1];
        if (w.empty()) {
            if (mode < 0) oadd(out, OWord{L}, c);
            continue;
        }
        const SGen H = w.front();
        if (mode < 0 && !(H < L)) {  // already in canonical position
            OWord nw;
            nw.reserve(w.size() + 1);
            nw.push_back(L);
            nw.insert(nw.end(), w.begin(), w.end());
            oadd(out, nw, c);
            continue;
        }
        OWord rest(w.begin() + 1, w.end());
        OState tail;
        tail.emplace(rest, c);
        // H * (L applied deeper), re-prepending H canonically
        OState res = oapply(H, oapply(L, tail));
        if (L[0] == H[0]) {  // bracket term [L, H] applied to the tail
            const int site = L[0];
            for (int cc = 1; cc <= 3; ++cc) {
                QExt fc = f_const(L[2], H[2], cc);
                if (fc.is_zero()) continue;
                OState br = oapply(SGen{site, L[1] + H[1], cc}, tail);
                for (const auto& [bw, bc] : br) oadd(res, bw, bc * fc);
            }
            if (L[2] == H[2] && L[1] + H[1] == 0) {
                KPoly central = KPoly::level(site) * QExt(rat(L[1]));
                for (const auto& [tw, tc] : tail) oadd(res, tw, tc * central);
            }
        }
        for (const auto& [rw, rc] : res) oadd(out, rw, rc);
    }
    return out;
}

// ---- realization of engine generators at rational sample points ----

const std::array<Rat, 2> kSitePos = {rat(2), rat(5)};

Rat rat_pow(const Rat& b, int e) {
    Rat r = 1;
    for (int j = 0; j < (e >= 0 ? e : -e); ++j) r *= b;
    if (e < 0) r = Rat(1) / r;
    return r;
}

// (-1)^p p! / (x - z_site)^{p+1}
Rat pole_coeff(int p, int site, const Rat& x) {
    Rat num = rat(p % 2 == 0 ? 1 : -1);
    for (int j = 2; j <= p; ++j) num *= j;
    return num / rat_pow(x - kSitePos[site - 1], p + 1);
}

KPoly realize_central(Gen g, const Rat& x) {
    KPoly out;
    for (int site = 1; site <= 2; ++site)
        out = out + KPoly::level(site) * QExt(pole_coeff(g_deriv(g), site, x));
    return out;
}

OState apply_engine_letter(Gen g, const OState& acc, const Rat& zx, const Rat& wx) {
    const Rat x = g_point(g) == Point::Z ? zx : wx;
    if (is_central(g)) return oscale(acc, realize_central(g, x));
    OState next;
    for (int site = 1; site <= 2; ++site) {
        QExt c(pole_coeff(g_deriv(g), site, x));
        OState part = oapply(SGen{site, g_mode(g), g_color(g)}, acc);
        for (const auto& [pw, pc] : part) oadd(next, pw, pc * c);
    }
    return next;
}

OState realize_word(const Word& w, const QExt& coeff, const Rat& zx, const Rat& wx) {
    OState acc;
    acc.emplace(OWord{}, KPoly::constant(coeff));
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        acc = apply_engine_letter(*it, acc, zx, wx);
    return acc;
}

OState realize_state(const State& v, const Rat& zx, const Rat& wx) {
    OState out;
    for (const auto& [w, sc] : v.terms()) {
        QExt val;
        for (const auto& [uh, q] : sc.terms()) {
            REQUIRE(uh.h == 0);  // realization is defined for plain-mode states
            val += q * QExt(rat_pow(zx - wx, uh.u));
        }
        OState part = realize_word(w, val, zx, wx);
        for (const auto& [pw, pc] : part) oadd(out, pw, pc);
    }
    return out;
}

Gen Iz(int a, int p, int n) { return make_current(a, p, n, Point::Z); }
Gen Iw(int a, int p, int n) { return make_current(a, p, n, Point::W); }

const std::vector<std::pair<Rat, Rat>>& samples() {
    static const std::vector<std::pair<Rat, Rat>> s = {
        {rat(0), rat(4)},      {rat(1), rat(9)},  {rat(3), rat(-3)},
        {rat(7), rat(1, 3)},   {rat(1, 2), rat(6)}, {rat(-1), rat(8)},
    };
    return s;
}

}  // namespace

TEST_CASE("realization: same-point products match the site oracle") {
    std::vector<Word> words = {
        {Iz(1, 0, 1), Iz(2, 0, -1)},
        {Iz(1, 0, 1), Iz(1, 0, -1)},  // produces a central term
        {Iz(1, 1, 2), Iz(2, 0, -3)},
        {Iz(2, 0, 0), Iz(3, 0, -2)},
        {Iz(3, 0, 1), Iz(1, 0, -1), Iz(2, 0, -1)},
        {Iz(2, 0, 0), Iz(1, 2, -2), Iz(3, 0, -1)},
        {Iz(1, 0, -1), Iz(2, 0, -2)},  // needs reordering only
        {make_central(1, Point::Z), Iz(1, 0, -1)},
        {Iz(1, 0, 2)},  // annihilates the vacuum
        {Iz(2, 1, 0)},
        {Iz(1, 0, 1), Iz(2, 1, -1), Iz(3, 0, -2)},
    };
    for (const auto& [zx, wx] : samples()) {
        for (const Word& w : words) {
            State eng = normal_order(w, Scalar(QExt(1)));
            CHECK(ostate_eq(realize_state(eng, zx, wx), realize_word(w, QExt(1), zx, wx)));
        }
    }
}

TEST_CASE("realization: cross-point products match the site oracle") {
    std::vector<Word> words = {
        {Iz(1, 0, 1), Iw(2, 0, -2)},  // f-term survives on the vacuum
        {Iz(1, 1, 1), Iw(2, 0, -2)},  // derivative on the z factor
        {Iz(2, 0, 1), Iw(3, 1, -3)},
        {Iz(1, 0, 1), Iw(1, 0, -1)},  // central term across points
        {Iz(1, 0, 0), Iw(2, 0, -1)},
        {Iw(2, 0, -1), Iz(1, 0, -1)},  // pure cross-point reorder
        {Iz(3, 0, 2), Iw(1, 1, -1), Iw(2, 0, -1)},
        {Iz(1, 0, 1), Iw(2, 0, -1), Iw(3, 0, -1)},
        {make_central(0, Point::W), Iz(1, 0, -1)},
        {Iw(3, 2, 0), Iz(3, 0, -1)},
    };
    for (const auto& [zx, wx] : samples()) {
        for (const Word& w : words) {
            State eng = normal_order(w, Scalar(QExt(1)));
            CHECK(ostate_eq(realize_state(eng, zx, wx), realize_word(w, QExt(1), zx, wx)));
        }
    }
}

TEST_CASE("realization: diagonal action is the per-site sum") {
    std::vector<State> states = {
        normal_order({Iz(1, 0, -1), Iw(2, 0, -1)}, Scalar(QExt(1))),
        normal_order({Iz(1, 1, -2)}, Scalar(QExt(1))),
        normal_order({Iz(3, 0, -2), make_central(1, Point::Z)}, Scalar(QExt(1))),
        normal_order({Iz(1, 0, -1), Iz(1, 0, -1)}, Scalar(QExt(1))),
    };
    std::vector<std::pair<Rat, Rat>> pts = {samples()[0], samples()[3]};
    for (const auto& [zx, wx] : pts) {
        for (const State& v : states) {
            OState rv = realize_state(v, zx, wx);
            for (int r = 1; r <= 3; ++r) {
                for (int m = 0; m <= 2; ++m) {
                    OState lhs = realize_state(diagonal_action(r, m, v), zx, wx);
                    OState rhs;
                    for (int site = 1; site <= 2; ++site) {
                        OState part = oapply(SGen{site, m, r}, rv);
                        for (const auto& [pw, pc] : part) oadd(rhs, pw, pc);
                    }
                    CHECK(ostate_eq(lhs, rhs));
                }
            }
        }
    }
}

TEST_CASE("realization: apply_generator agrees with letterwise application") {
    State v = normal_order({Iz(1, 0, -1), Iw(2, 0, -1)}, Scalar(QExt(1)));
    std::vector<Gen> gens = {Iz(2, 0, 1), Iz(1, 0, -2), Iw(3, 1, 0), make_central(0, Point::Z)};
    for (const auto& [zx, wx] : samples()) {
        OState rv = realize_state(v, zx, wx);
        for (Gen g : gens) {
            OState lhs = realize_state(apply_generator(g, v), zx, wx);
            CHECK(ostate_eq(lhs, apply_engine_letter(g, rv, zx, wx)));
        }
    }
}
