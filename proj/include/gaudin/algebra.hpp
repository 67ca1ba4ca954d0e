// algebra.hpp
//
// The Lie algebra of meromorphic currents at one or two spectral points,
// its vacuum module, and the rewriting engine: packed generators, canonical
// monomials, Lie brackets (same-point and cross-point with u = z-w powers),
// normal ordering, bigraded enumeration, and the diagonal sl2-hat action.
//
// Canonical monomial order: currents sorted by mode ascending, then
// derivative order descending, then point (z before w), then color
// ascending; central generators rightmost, sorted by point then derivative
// order. The packed 32-bit encoding makes numeric comparison equal to this
// order.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "gaudin/scalar.hpp"
#include "gaudin/tensor.hpp"

namespace gaudin {

enum class Point : int { Z = 0, W = 1 };

using Gen = uint32_t;

inline constexpr int kModeBias = 2048;
inline constexpr int kMaxCurrentDeriv = 31;

inline Gen make_current(int color, int deriv, int mode, Point pt) {
    check_color(color);
    if (deriv < 0 || deriv > kMaxCurrentDeriv) throw argument_error("current deriv out of range");
    if (mode < -kModeBias || mode >= kModeBias) throw argument_error("mode out of range");
    return (static_cast<Gen>(mode + kModeBias) << 19) |
           (static_cast<Gen>(kMaxCurrentDeriv - deriv) << 14) |
           (static_cast<Gen>(pt) << 13) | (static_cast<Gen>(color) << 11);
}

inline Gen make_central(int deriv, Point pt) {
    if (deriv < 0 || deriv > 4095) throw argument_error("central deriv out of range");
    return (1u << 31) | (static_cast<Gen>(pt) << 30) | (static_cast<Gen>(deriv) << 18);
}

inline bool is_central(Gen g) { return (g >> 31) != 0; }
inline int g_color(Gen g) { return static_cast<int>((g >> 11) & 0x3); }
inline int g_deriv(Gen g) {
    return is_central(g) ? static_cast<int>((g >> 18) & 0xfff)
                         : kMaxCurrentDeriv - static_cast<int>((g >> 14) & 0x1f);
}
inline int g_mode(Gen g) { return static_cast<int>((g >> 19) & 0xfff) - kModeBias; }
inline Point g_point(Gen g) {
    return static_cast<Point>(is_central(g) ? ((g >> 30) & 1) : ((g >> 13) & 1));
}

// Bigrade contributions: a current of mode -n and deriv p weighs (n, p+1);
// a central of deriv p weighs (0, p+1).
inline int g_depth(Gen g) { return is_central(g) ? 0 : -g_mode(g); }
inline int g_weight(Gen g) { return g_deriv(g) + 1; }

using Word = std::vector<Gen>;

inline int word_depth(const Word& w) {
    int d = 0;
    for (Gen g : w) d += g_depth(g);
    return d;
}
inline int word_weight(const Word& w) {
    int p = 0;
    for (Gen g : w) p += g_weight(g);
    return p;
}
inline int word_currents(const Word& w) {
    int c = 0;
    for (Gen g : w) c += is_central(g) ? 0 : 1;
    return c;
}

struct WordHash {
    size_t operator()(const Word& w) const {
        return static_cast<size_t>(fnv1a(w.data(), w.size() * sizeof(Gen)));
    }
};

// Finite linear combination of canonical monomials (words ending in the
// implicit vacuum). The empty word is the vacuum itself.
class State {
  public:
    State() = default;

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::unordered_map<Word, Scalar, WordHash>& terms() const { return terms_; }

    void add(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    State operator+(const State& o) const {
        State r = *this;
        for (const auto& [w, c] : o.terms_) r.add(w, c);
        return r;
    }
    State operator-(const State& o) const {
        State r = *this;
        for (const auto& [w, c] : o.terms_) r.add(w, -c);
        return r;
    }
    State& operator+=(const State& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    State operator-() const {
        State r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    State scaled(const QExt& q) const {
        if (q.is_zero()) return State();
        State r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, c.scaled(q));
        return r;
    }
    State scaled(const Scalar& s) const {
        State r;
        for (const auto& [w, c] : terms_) r.add(w, c * s);
        return r;
    }
    State shifted(int du, int dh) const {  // multiply every term by u^du h^dh
        State r;
        for (const auto& [w, c] : terms_) r.add(w, c.shifted(du, dh));
        return r;
    }
    State with_cutoff(int K) const {
        State r;
        for (const auto& [w, c] : terms_) r.add(w, c.with_cutoff(K));
        return r;
    }
    State h_part(int h) const {
        State r;
        for (const auto& [w, c] : terms_) r.add(w, c.h_part(h));
        return r;
    }
    // Restriction to terms with a given current count (filtration layer).
    State filtration_part(int currents) const {
        State r;
        for (const auto& [w, c] : terms_)
            if (word_currents(w) == currents) r.add(w, c);
        return r;
    }

    bool operator==(const State& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (const auto& [w, c] : terms_) {
            auto it = o.terms_.find(w);
            if (it == o.terms_.end() || !(it->second == c)) return false;
        }
        return true;
    }
    bool operator!=(const State& o) const { return !(*this == o); }

    // Deterministic term order: by word length, then lexicographic packed
    // comparison. Used by printers, serializers, and the linear solver.
    std::vector<std::pair<Word, Scalar>> sorted_terms() const;

    int max_u_pole() const {
        int pole = 0;
        for (const auto& [w, c] : terms_) {
            int p = c.max_u_pole();
            if (p > pole) pole = p;
        }
        return pole;
    }

  private:
    std::unordered_map<Word, Scalar, WordHash> terms_;
};

// When enabled, every Lie bracket insertion carries one power of h on the
// structure term and two on the central term (the rescaled-generator
// bookkeeping). Plain mode leaves coefficients untouched.
bool hbar_algebra_enabled();
struct HbarAlgebraGuard {
    explicit HbarAlgebraGuard(bool on);
    ~HbarAlgebraGuard();
    bool prev;
};

// Lie bracket of two current generators as a list of (generator, scalar)
// terms. The scalar of every term is derived from `carry` (so the ambient
// cutoff propagates). Central x anything is zero (empty list).
std::vector<std::pair<Gen, Scalar>> bracket_terms(Gen g1, Gen g2, const Scalar& carry);

// Rewrites the word (a product of generators applied to the vacuum) into the
// canonical basis. Annihilation applies only once a nonnegative-mode current
// reaches the vacuum after all commutations.
State normal_order(const Word& word, const Scalar& coeff);
State normal_order(const State& raw);  // each term's word may be non-canonical

// Prepends a single generator to a canonical state and re-canonicalizes.
State apply_generator(Gen g, const State& v);

// All canonical monomials of bigrade (depth n, weight p) built from the given
// spectral points, in deterministic (lexicographic) order.
std::vector<Word> enumerate_monomials(int n, int p, const std::vector<Point>& points);

// Exchanges the two spectral points in every generator and maps u -> -u.
State swap_points(const State& v);

// Diagonal action of the sl2-hat generator with color r and mode m >= 0:
// derivation over the word with
//   [Delta_m^r, I^{a[p]}_n(X)] = f^{ra}_c I^{c[p]}_{m+n}(X) - n d^{ra} d_{m+n,0} k^{[p]}(X),
// zero on centrals and on the vacuum; output normal-ordered.
State diagonal_action(int r, int m, const State& v);

std::string gen_to_string(Gen g);    // debug form, e.g. I[a=1,p=0,n=-1,pt=z]
std::string word_to_string(const Word& w);

}  // namespace gaudin
