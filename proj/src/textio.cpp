// Canonical text printer/parser for states, a conventional-notation display
// form, and JSON record output.

#include "gaudin/textio.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace gaudin {

namespace {

std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Emits the product factors shared by both components of a coefficient.
void emit_tail(std::ostringstream& os, const UH& uh, const Word& w) {
    if (uh.u != 0) os << " * u^" << uh.u;
    if (uh.h != 0) os << " * h^" << uh.h;
    for (Gen g : w) os << " * " << gen_to_string(g);
    os << " * vac";
}

}  // namespace

std::string print_state(const State& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : v.sorted_terms()) {
        for (const auto& [uh, q] : c.terms()) {
            if (q.rat != 0) {
                if (!first) os << " + ";
                first = false;
                os << rat_to_string(q.rat);
                emit_tail(os, uh, w);
            }
            if (q.srat != 0) {
                if (!first) os << " + ";
                first = false;
                os << rat_to_string(q.srat) << " * s";
                emit_tail(os, uh, w);
            }
        }
    }
    return os.str();
}

namespace {

// Recursive-descent parser over a flat character buffer.
class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    State run() {
        skip_ws();
        if (peek() == '0') {
            // A lone zero denotes the empty state.
            size_t save = pos_;
            ++pos_;
            skip_ws();
            if (pos_ == text_.size()) return State();
            pos_ = save;
        }
        State out;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == text_.size()) {
                if (first) fail("empty input");
                break;
            }
            int sign = 1;
            if (!first) {
                char c = next("expected '+' or '-' between terms");
                if (c == '+') {
                    sign = 1;
                } else if (c == '-') {
                    sign = -1;
                } else {
                    fail("expected '+' or '-' between terms", pos_ - 1);
                }
            } else if (peek() == '+') {
                ++pos_;
            } else if (peek() == '-') {
                sign = -1;
                ++pos_;
            }
            out += term(sign);
            first = false;
        }
        return out;
    }

  private:
    State term(int sign) {
        QExt q(rat(sign));
        int upow = 0, hpow = 0;
        Word gens;
        while (true) {
            skip_ws();
            size_t fpos = pos_;
            if (starts_with("vac")) {
                pos_ += 3;
                return normal_order(gens, Scalar(q, upow, hpow));
            }
            if (starts_with("u^")) {
                pos_ += 2;
                upow += parse_int();
            } else if (starts_with("h^")) {
                pos_ += 2;
                hpow += parse_int();
            } else if (starts_with("s") && !starts_with("s^")) {
                pos_ += 1;
                q *= QExt::s();
            } else if (starts_with("I[")) {
                gens.push_back(parse_current());
            } else if (starts_with("k[")) {
                gens.push_back(parse_central());
            } else if (pos_ < text_.size() &&
                       (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-')) {
                q *= QExt(parse_rational());
            } else {
                fail("expected a factor (rational, s, u^e, h^e, I[..], k[..], or vac)", fpos);
            }
            skip_ws();
            if (pos_ < text_.size() && peek() == '*') {
                ++pos_;
                continue;
            }
            fail("term must end in vac", pos_);
        }
    }

    Gen parse_current() {
        expect("I[");
        expect("a=");
        int a = parse_int();
        expect(",p=");
        int p = parse_int();
        expect(",n=");
        int n = parse_int();
        expect(",pt=");
        Point pt = parse_point();
        expect("]");
        if (a < 1 || a > 3) fail("current color must be 1..3", pos_);
        return make_current(a, p, n, pt);
    }

    Gen parse_central() {
        expect("k[");
        expect("p=");
        int p = parse_int();
        expect(",pt=");
        Point pt = parse_point();
        expect("]");
        return make_central(p, pt);
    }

    Point parse_point() {
        char c = next("expected point z or w");
        if (c == 'z') return Point::Z;
        if (c == 'w') return Point::W;
        fail("expected point z or w", pos_ - 1);
        return Point::Z;
    }

    Rat parse_rational() {
        std::string num = parse_digits(true);
        if (pos_ < text_.size() && peek() == '/') {
            ++pos_;
            std::string den = parse_digits(false);
            if (den == "0") fail("zero denominator", pos_ - den.size());
            Rat r(num + "/" + den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }

    int parse_int() {
        std::string d = parse_digits(true);
        try {
            return std::stoi(d);
        } catch (const std::exception&) {
            fail("integer out of range", pos_ - d.size());
        }
        return 0;
    }

    std::string parse_digits(bool allow_sign) {
        size_t start = pos_;
        std::string out;
        if (allow_sign && pos_ < text_.size() && peek() == '-') {
            out.push_back('-');
            ++pos_;
        }
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            out.push_back(peek());
            ++pos_;
        }
        if (out.empty() || out == "-") fail("expected digits", start);
        return out;
    }

    bool starts_with(const std::string& k) const { return text_.compare(pos_, k.size(), k) == 0; }
    void expect(const std::string& k) {
        if (!starts_with(k)) fail("expected '" + k + "'", pos_);
        pos_ += k.size();
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char next(const std::string& msg) {
        if (pos_ >= text_.size()) fail(msg, pos_);
        return text_[pos_++];
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, size_t at) const { throw parse_error(msg, at); }

    const std::string& text_;
    size_t pos_ = 0;
};

std::string primes_or_bracket(int p) {
    if (p == 0) return "";
    if (p <= 3) return std::string(static_cast<size_t>(p), '\'');
    return "[" + std::to_string(p) + "]";
}

std::string gen_display(Gen g) {
    std::string pt = g_point(g) == Point::Z ? "(z)" : "(w)";
    if (is_central(g)) return "k" + primes_or_bracket(g_deriv(g)) + pt;
    return "I" + std::to_string(g_color(g)) + primes_or_bracket(g_deriv(g)) + "_{" +
           std::to_string(g_mode(g)) + "}" + pt;
}

std::string qext_display(const QExt& q) {
    if (q.srat == 0) return q.rat.get_str();
    if (q.rat == 0) return "(" + q.srat.get_str() + " s)";
    return "(" + q.rat.get_str() + " + " + q.srat.get_str() + " s)";
}

}  // namespace

State parse_state(const std::string& text) { return Parser(text).run(); }

std::string display_state(const State& v) {
    if (v.is_zero()) return "  0\n";
    std::ostringstream os;
    for (const auto& [w, c] : v.sorted_terms()) {
        for (const auto& [uh, q] : c.terms()) {
            os << "  + " << qext_display(q);
            if (uh.u != 0) os << " (z-w)^" << uh.u;
            if (uh.h != 0) os << " hbar^" << uh.h;
            for (Gen g : w) os << " " << gen_display(g);
            os << " |0>\n";
        }
    }
    return os.str();
}

std::string state_record(const std::string& tag, const State& v) {
    nlohmann::json j;
    j["tag"] = tag;
    j["expr"] = print_state(v);
    return j.dump();
}

bool roundtrip_ok(const State& v) {
    const int K = [&] {
        for (const auto& [w, c] : v.terms()) return c.cutoff();
        return Scalar::kNoCutoff;
    }();
    State back = parse_state(print_state(v));
    if (K != Scalar::kNoCutoff) back = back.with_cutoff(K);
    return back == v;
}

}  // namespace gaudin
