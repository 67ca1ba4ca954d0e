// scalar.hpp
//
// Exact coefficient arithmetic for the whole engine: the field Q(s) with
// s^2 = -2, times Laurent monomials in u = (z-w), times polynomials in h
// with an optional truncation order ("no term of h-power >= cutoff").
//
// All arithmetic is exact (GMP rationals). Operations that combine two
// Scalars require compatible cutoffs: both unset, or equal.

#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "gaudin/util.hpp"

namespace gaudin {

using Rat = mpq_class;

inline Rat rat(long long num, long long den = 1) {
    if (den == 0) throw argument_error("rational with zero denominator");
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

// Element a + b*s of Q(s), s^2 = -2 (s plays the role of i*sqrt(2)).
struct QExt {
    Rat rat;   // a
    Rat srat;  // b

    QExt() : rat(0), srat(0) {}
    QExt(const Rat& a) : rat(a), srat(0) {}
    QExt(const Rat& a, const Rat& b) : rat(a), srat(b) {}
    QExt(long long a) : rat(gaudin::rat(a)), srat(0) {}

    static QExt s() { return QExt(Rat(0), Rat(1)); }

    bool is_zero() const { return rat == 0 && srat == 0; }
    bool operator==(const QExt& o) const { return rat == o.rat && srat == o.srat; }
    bool operator!=(const QExt& o) const { return !(*this == o); }

    QExt operator+(const QExt& o) const { return QExt(rat + o.rat, srat + o.srat); }
    QExt operator-(const QExt& o) const { return QExt(rat - o.rat, srat - o.srat); }
    QExt operator-() const { return QExt(-rat, -srat); }
    QExt operator*(const QExt& o) const {
        // (a+bs)(c+ds) = (ac - 2bd) + (ad + bc)s
        return QExt(rat * o.rat - 2 * srat * o.srat, rat * o.srat + srat * o.rat);
    }
    QExt& operator+=(const QExt& o) {
        rat += o.rat;
        srat += o.srat;
        return *this;
    }
    QExt& operator*=(const QExt& o) {
        *this = *this * o;
        return *this;
    }

    // Inverse via the norm a^2 + 2 b^2 (positive definite, so nonzero input
    // always has an inverse).
    QExt inverse() const {
        if (is_zero()) throw argument_error("inverse of zero");
        Rat norm = rat * rat + 2 * srat * srat;
        return QExt(rat / norm, -srat / norm);
    }
};

// Monomial key: power of u and power of h.
struct UH {
    int u = 0;
    int h = 0;
    bool operator<(const UH& o) const { return u != o.u ? u < o.u : h < o.h; }
    bool operator==(const UH& o) const { return u == o.u && h == o.h; }
};

// Finite sum  sum_{(u,h)} c_{u,h} * u^{u-power} * h^{h-power},  c in Q(s).
class Scalar {
  public:
    static constexpr int kNoCutoff = -1;

    Scalar() = default;
    explicit Scalar(const QExt& c, int u_pow = 0, int h_pow = 0, int cutoff = kNoCutoff)
        : cutoff_(cutoff) {
        insert(UH{u_pow, h_pow}, c);
    }
    explicit Scalar(long long n) : Scalar(QExt(n)) {}

    static Scalar zero(int cutoff = kNoCutoff) {
        Scalar z;
        z.cutoff_ = cutoff;
        return z;
    }
    static Scalar one(int cutoff = kNoCutoff) { return Scalar(QExt(1), 0, 0, cutoff); }

    bool is_zero() const { return terms_.empty(); }
    int cutoff() const { return cutoff_; }
    const std::map<UH, QExt>& terms() const { return terms_; }

    // True when the scalar is a single (u,h)-monomial; used by proportionality
    // checks and the pretty printers.
    bool is_monomial() const { return terms_.size() == 1; }

    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator+(const Scalar& o) const {
        Scalar r = *this;
        r.cutoff_ = merged_cutoff(*this, o);
        for (const auto& [k, v] : o.terms_) r.insert(k, v);
        return r;
    }
    Scalar operator-(const Scalar& o) const {
        Scalar r = *this;
        r.cutoff_ = merged_cutoff(*this, o);
        for (const auto& [k, v] : o.terms_) r.insert(k, -v);
        return r;
    }
    Scalar operator-() const {
        Scalar r = *this;
        for (auto& [k, v] : r.terms_) v = -v;
        return r;
    }
    Scalar& operator+=(const Scalar& o) {
        cutoff_ = merged_cutoff(*this, o);
        for (const auto& [k, v] : o.terms_) insert(k, v);
        return *this;
    }
    Scalar operator*(const Scalar& o) const {
        Scalar r;
        r.cutoff_ = merged_cutoff(*this, o);
        for (const auto& [ka, va] : terms_)
            for (const auto& [kb, vb] : o.terms_) r.insert(UH{ka.u + kb.u, ka.h + kb.h}, va * vb);
        return r;
    }

    // Cutoff-preserving derived forms; these are the only constructors the
    // rewriting engine uses, so the ambient truncation propagates untouched.
    Scalar scaled(const QExt& c) const {
        Scalar r;
        r.cutoff_ = cutoff_;
        for (const auto& [k, v] : terms_) r.insert(k, v * c);
        return r;
    }
    Scalar shifted(int du, int dh) const {
        Scalar r;
        r.cutoff_ = cutoff_;
        for (const auto& [k, v] : terms_) r.insert(UH{k.u + du, k.h + dh}, v);
        return r;
    }
    Scalar with_cutoff(int K) const {
        Scalar r;
        r.cutoff_ = K;
        for (const auto& [k, v] : terms_) r.insert(k, v);
        return r;
    }

    // Multiplies the derivative rule d/dX u^e: for X = z each u^e picks up
    // factor e and drops one power; for X = w the factor flips sign.
    Scalar d_du_z() const {
        Scalar r;
        r.cutoff_ = cutoff_;
        for (const auto& [k, v] : terms_)
            if (k.u != 0) r.insert(UH{k.u - 1, k.h}, v * QExt(k.u));
        return r;
    }
    Scalar d_du_w() const { return -d_du_z(); }

    // Restriction to a single h-power (no cutoff change).
    Scalar h_part(int h) const {
        Scalar r;
        r.cutoff_ = cutoff_;
        for (const auto& [k, v] : terms_)
            if (k.h == h) r.insert(k, v);
        return r;
    }

    int max_u_pole() const {  // largest n with a u^{-n} term, 0 if none
        int pole = 0;
        for (const auto& [k, v] : terms_)
            if (-k.u > pole) pole = -k.u;
        return pole;
    }

  private:
    static int merged_cutoff(const Scalar& a, const Scalar& b) {
        if (a.cutoff_ == b.cutoff_) return a.cutoff_;
        if (a.terms_.empty()) return b.cutoff_;
        if (b.terms_.empty()) return a.cutoff_;
        throw config_error("scalar cutoff mismatch: " + std::to_string(a.cutoff_) + " vs " +
                           std::to_string(b.cutoff_));
    }

    void insert(const UH& key, const QExt& val) {
        if (val.is_zero()) return;
        if (cutoff_ != kNoCutoff && key.h >= cutoff_) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, val);
        } else {
            it->second += val;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<UH, QExt> terms_;
    int cutoff_ = kNoCutoff;
};

}  // namespace gaudin
