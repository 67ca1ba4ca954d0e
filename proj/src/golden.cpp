// Reference-state builders and coefficient tables. The states here are fixed
// inputs and expected outputs used across the test suite; they are assembled
// from explicit generator words so every term is visible in source form.

#include "gaudin/golden.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

#include "gaudin/textio.hpp"
#include "gaudin/vertex.hpp"

namespace gaudin {

namespace {

Gen Iz(int a, int p, int n) { return make_current(a, p, n, Point::Z); }
Gen Iw(int a, int p, int n) { return make_current(a, p, n, Point::W); }
Gen Kz(int p) { return make_central(p, Point::Z); }
Gen Kw(int p) { return make_central(p, Point::W); }

State word_state(const Word& w, const QExt& c = QExt(1)) {
    return normal_order(w, Scalar(c));
}

// sum_a I^a I^a at one point, the quadratic density.
State quadratic_density() {
    State out;
    for (int a = 1; a <= 3; ++a) out += word_state({Iz(a, 0, -1), Iz(a, 0, -1)});
    return out;
}

// Symmetrized triple of depth-one currents at W with index tuple (a, b, b),
// prefixed by one z-current of color a; summed over a, b.
State paired_triple(int z_mode, int z_deriv) {
    State out;
    QExt third(rat(1, 3));
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            Gen zg = Iz(a, z_deriv, z_mode);
            int arr[3][3] = {{a, b, b}, {b, a, b}, {b, b, a}};
            for (auto& t : arr)
                out += word_state({zg, Iw(t[0], 0, -1), Iw(t[1], 0, -1), Iw(t[2], 0, -1)}, third);
        }
    }
    return out;
}

// One f-contracted two-current term sum_{abc} f^{abc} g1(a) g2(b) g3(c).
State f_triple(const std::function<Word(int, int, int)>& words) {
    State out;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                QExt fc = f_const(a, b, c);
                if (fc.is_zero()) continue;
                out += word_state(words(a, b, c), fc);
            }
    return out;
}

// sum_a of a fixed color-diagonal word.
State diag_pair(const std::function<Word(int)>& words) {
    State out;
    for (int a = 1; a <= 3; ++a) out += word_state(words(a));
    return out;
}

State pair11_A() {
    return diag_pair([](int a) { return Word{Iz(a, 0, -2), Iw(a, 0, -1)}; }).shifted(-1, 0).scaled(QExt(8));
}

State pair11_B() {
    return diag_pair([](int a) { return Word{Iz(a, 0, -1), Iw(a, 0, -1)}; }).shifted(-2, 0).scaled(QExt(8));
}

State pair13_A() {
    State out;
    out += paired_triple(-2, 0).shifted(-1, 0).scaled(QExt(rat(8, 3)));
    out += f_triple([](int a, int b, int c) { return Word{Iz(a, 0, -2), Iw(b, 0, -2), Iw(c, 1, -1)}; })
               .shifted(-1, 0).scaled(QExt(rat(80, 9)));
    out += f_triple([](int a, int b, int c) { return Word{Iz(a, 0, -2), Iw(b, 0, -2), Iw(c, 0, -1)}; })
               .shifted(-2, 0).scaled(QExt(rat(-80, 9)));
    out += f_triple([](int a, int b, int c) { return Word{Iz(a, 0, -3), Iw(b, 1, -1), Iw(c, 0, -1)}; })
               .shifted(-1, 0).scaled(QExt(rat(160, 9)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -2), Iw(a, 0, -3), Kw(1)}; })
               .shifted(-1, 0).scaled(QExt(rat(-80, 9)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -4), Iw(a, 0, -1), Kw(1)}; })
               .shifted(-1, 0).scaled(QExt(rat(-80, 3)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -2), Iw(a, 0, -3)}; })
               .shifted(-3, 0).scaled(QExt(rat(320, 27)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -4), Iw(a, 2, -1)}; })
               .shifted(-1, 0).scaled(QExt(rat(160, 9)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -4), Iw(a, 0, -1)}; })
               .shifted(-3, 0).scaled(QExt(rat(320, 9)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -2), Iw(a, 1, -3)}; })
               .shifted(-2, 0).scaled(QExt(rat(160, 27)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -3), Iw(a, 2, -2)}; })
               .shifted(-1, 0).scaled(QExt(rat(-160, 9)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -3), Iw(a, 1, -2)}; })
               .shifted(-2, 0).scaled(QExt(rat(-160, 9)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -4), Iw(a, 1, -1)}; })
               .shifted(-2, 0).scaled(QExt(rat(-160, 9)));
    return out;
}

State pair13_B() {
    State out;
    out += paired_triple(-1, 0).shifted(-2, 0).scaled(QExt(rat(8, 3)));
    out += f_triple([](int a, int b, int c) { return Word{Iz(a, 0, -1), Iw(b, 0, -2), Iw(c, 0, -1)}; })
               .shifted(-3, 0).scaled(QExt(rat(-160, 9)));
    out += f_triple([](int a, int b, int c) { return Word{Iz(a, 0, -1), Iw(b, 1, -1), Iw(c, 0, -2)}; })
               .shifted(-2, 0).scaled(QExt(rat(-80, 9)));
    out += f_triple([](int a, int b, int c) { return Word{Iz(a, 0, -2), Iw(b, 1, -1), Iw(c, 0, -1)}; })
               .shifted(-2, 0).scaled(QExt(rat(-160, 9)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -1), Iw(a, 0, -3), Kw(1)}; })
               .shifted(-2, 0).scaled(QExt(rat(-160, 9)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -1), Iw(a, 2, -3)}; })
               .shifted(-2, 0).scaled(QExt(rat(1120, 27)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -1), Iw(a, 1, -3)}; })
               .shifted(-3, 0).scaled(QExt(rat(640, 27)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -2), Iw(a, 1, -2)}; })
               .shifted(-2, 0).scaled(QExt(rat(-320, 9)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -1), Iw(a, 0, -3)}; })
               .shifted(-4, 0).scaled(QExt(rat(320, 9)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -3), Iw(a, 1, -1)}; })
               .shifted(-3, 0).scaled(QExt(rat(-640, 9)));
    out += diag_pair([](int a) { return Word{Iz(a, 0, -3), Iw(a, 0, -1)}; })
               .shifted(-4, 0).scaled(QExt(rat(320, 3)));
    return out;
}

// Inner state of the double-translation image:
// (I^a''I^a - I^a'I^a' - 3/4 I^aI^a k')|0>, summed over a.
State double_translate_core() {
    State out;
    for (int a = 1; a <= 3; ++a) {
        out += word_state({Iz(a, 2, -1), Iz(a, 0, -1)});
        out += word_state({Iz(a, 1, -1), Iz(a, 1, -1)}, QExt(-1));
        out += word_state({Iz(a, 0, -1), Iz(a, 0, -1), Kz(1)}, QExt(rat(-3, 4)));
    }
    return out;
}

State derivative_image(int i) {
    State core;
    switch (i) {
        case 1: core = diag_pair([](int a) { return Word{Iz(a, 0, -3), Iz(a, 1, -1)}; }); break;
        case 2: core = diag_pair([](int a) { return Word{Iz(a, 1, -3), Iz(a, 0, -1)}; }); break;
        case 3: core = diag_pair([](int a) { return Word{Iz(a, 1, -2), Iz(a, 0, -2)}; }); break;
        case 4: core = diag_pair([](int a) { return Word{Iz(a, 0, -3), Iz(a, 0, -1), Kz(0)}; }); break;
        case 5: core = diag_pair([](int a) { return Word{Iz(a, 0, -2), Iz(a, 0, -2), Kz(0)}; }); break;
        default: throw argument_error("derivative image index must be 1..5");
    }
    return twisted_derivative(3, Point::Z, core);
}

}  // namespace

State quartic_basis_state(int i) {
    switch (i) {
        case 1: {
            State out;
            for (int a = 1; a <= 3; ++a)
                for (int b = 1; b <= 3; ++b)
                    for (int c = 1; c <= 3; ++c)
                        for (int d = 1; d <= 3; ++d) {
                            Rat t = sym_tensor_value({a, b, c, d});
                            if (t == 0) continue;
                            out += word_state(
                                {Iz(a, 0, -1), Iz(b, 0, -1), Iz(c, 0, -1), Iz(d, 0, -1)}, QExt(t));
                        }
            return out;
        }
        case 2:
            return f_triple([](int a, int b, int c) {
                return Word{Iz(a, 0, -2), Iz(b, 1, -1), Iz(c, 0, -1)};
            });
        case 3: return diag_pair([](int a) { return Word{Iz(a, 2, -3), Iz(a, 0, -1)}; });
        case 4: return diag_pair([](int a) { return Word{Iz(a, 0, -3), Iz(a, 2, -1)}; });
        case 5: return diag_pair([](int a) { return Word{Iz(a, 2, -2), Iz(a, 0, -2)}; });
        case 6: return diag_pair([](int a) { return Word{Iz(a, 1, -3), Iz(a, 1, -1)}; });
        case 7: return diag_pair([](int a) { return Word{Iz(a, 1, -2), Iz(a, 1, -2)}; });
        case 8: return diag_pair([](int a) { return Word{Iz(a, 0, -3), Iz(a, 0, -1), Kz(1)}; });
        case 9: return diag_pair([](int a) { return Word{Iz(a, 0, -2), Iz(a, 0, -2), Kz(1)}; });
        case 10: return diag_pair([](int a) { return Word{Iz(a, 1, -3), Iz(a, 0, -1), Kz(0)}; });
        case 11: return diag_pair([](int a) { return Word{Iz(a, 0, -3), Iz(a, 1, -1), Kz(0)}; });
        case 12: return diag_pair([](int a) { return Word{Iz(a, 1, -2), Iz(a, 0, -2), Kz(0)}; });
        case 13:
            return diag_pair([](int a) { return Word{Iz(a, 0, -3), Iz(a, 0, -1), Kz(0), Kz(0)}; });
        case 14:
            return diag_pair([](int a) { return Word{Iz(a, 0, -2), Iz(a, 0, -2), Kz(0), Kz(0)}; });
        default: throw argument_error("quartic basis index must be 1..14");
    }
}

State from_quartic_coordinates(const std::array<QExt, 14>& xi) {
    State out;
    for (int i = 1; i <= 14; ++i) {
        if (xi[i - 1].is_zero()) continue;
        out += quartic_basis_state(i).scaled(xi[i - 1]);
    }
    return out;
}

std::array<QExt, 14> sigma3_coordinates() {
    std::array<QExt, 14> xi;
    xi.fill(QExt(0));
    xi[0] = QExt(1);
    xi[1] = QExt(rat(20, 3));
    xi[3] = QExt(rat(40, 9));
    xi[4] = QExt(rat(-20, 3));
    xi[5] = QExt(rat(40, 9));
    xi[6] = QExt(rat(-10, 3));
    xi[7] = QExt(rat(-20, 3));
    return xi;
}

std::array<QExt, 14> quartic_alt_coordinates() {
    std::array<QExt, 14> xi;
    xi.fill(QExt(0));
    xi[0] = QExt(1);
    xi[1] = QExt(rat(20, 3));
    xi[2] = QExt(rat(-40, 9));
    xi[4] = QExt(rat(-140, 9));
    xi[5] = QExt(rat(40, 3));
    xi[6] = QExt(rat(-10, 3));
    xi[13] = QExt(5);
    return xi;
}

const std::vector<int>& quartic_free_indices() {
    static const std::vector<int> free_idx = {1, 4, 5, 6, 7, 8, 14};
    return free_idx;
}

const std::vector<std::pair<int, std::vector<std::pair<int, Rat>>>>&
quartic_coordinate_relations() {
    static const std::vector<std::pair<int, std::vector<std::pair<int, Rat>>>> rels = {
        {2, {{1, rat(20, 3)}}},
        {3, {{1, rat(20, 3)}, {4, rat(-1)}, {5, rat(2)}, {6, rat(1)}, {7, rat(-2)}}},
        {9, {{1, rat(-5, 4)}, {5, rat(-3, 8)}, {7, rat(3, 8)}, {14, rat(-2, 3)}}},
        {10,
         {{1, rat(5, 3)}, {4, rat(3, 2)}, {5, rat(-3, 2)}, {6, rat(-3, 2)}, {7, rat(3, 2)},
          {8, rat(1)}}},
        {11, {{1, rat(55, 3)}, {4, rat(-3, 2)}, {5, rat(3, 2)}, {7, rat(-3, 2)}, {8, rat(1)}}},
        {12, {{1, rat(-15, 2)}, {5, rat(-3, 4)}, {7, rat(-3, 4)}, {14, rat(-4, 3)}}},
        {13, {{1, rat(-55, 4)}, {5, rat(-9, 8)}, {7, rat(9, 8)}, {8, rat(-3, 2)}}},
    };
    return rels;
}

std::array<QExt, 14> quartic_coordinates_from_free(const std::map<int, QExt>& free_values) {
    const auto& free_idx = quartic_free_indices();
    for (const auto& [i, v] : free_values)
        if (std::find(free_idx.begin(), free_idx.end(), i) == free_idx.end())
            throw argument_error("coordinate " + std::to_string(i) + " is not free");
    std::array<QExt, 14> xi;
    xi.fill(QExt(0));
    for (int i : free_idx) {
        auto it = free_values.find(i);
        if (it != free_values.end()) xi[i - 1] = it->second;
    }
    for (const auto& [dep, form] : quartic_coordinate_relations()) {
        QExt v(0);
        for (const auto& [i, c] : form) v += xi[i - 1] * QExt(c);
        xi[dep - 1] = v;
    }
    return xi;
}

std::array<QExt, 8> quartic_witness_rhos(const std::array<QExt, 14>& xi) {
    auto x = [&](int i) { return xi[i - 1]; };
    std::array<QExt, 8> rho;
    rho[0] = x(1) * QExt(rat(-8, 3));
    rho[1] = x(1) * QExt(rat(20, 3)) - x(4) + x(5);
    rho[2] = x(4) - x(5) - x(6) + x(7) * QExt(2);
    rho[3] = x(1) * QExt(rat(-55, 6)) - x(5) * QExt(rat(3, 4)) + x(7) * QExt(rat(3, 4)) - x(8) -
             x(14) * QExt(rat(4, 3));
    rho[4] = x(1) * QExt(rat(55, 6)) + x(5) * QExt(rat(3, 4)) - x(7) * QExt(rat(3, 4)) + x(8);
    rho[5] = x(4);
    rho[6] = x(1) * QExt(5) - x(4) + x(5) * QExt(rat(3, 2)) + x(6) - x(7) * QExt(rat(3, 2)) +
             x(14) * QExt(rat(8, 3));
    rho[7] = x(1) * QExt(rat(-100, 9)) - x(5) * QExt(rat(4, 3)) - x(7) * QExt(rat(2, 3));
    return rho;
}

std::array<State, 3> quartic_witness_states(const std::array<QExt, 8>& rho) {
    std::array<State, 3> out;
    QExt third(rat(1, 3));
    for (int r = 1; r <= 3; ++r) {
        State g;
        for (int a = 1; a <= 3; ++a) {
            int arr[3][3] = {{r, a, a}, {a, r, a}, {a, a, r}};
            for (auto& t : arr)
                g += word_state({Iz(t[0], 0, -1), Iz(t[1], 0, -1), Iz(t[2], 0, -1)},
                                rho[0] * third);
        }
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                QExt fc = f_const(r, a, b);
                if (fc.is_zero()) continue;
                g += word_state({Iz(a, 0, -2), Iz(b, 1, -1)}, fc * rho[1]);
                g += word_state({Iz(a, 1, -2), Iz(b, 0, -1)}, fc * rho[2]);
                g += word_state({Iz(a, 0, -2), Iz(b, 0, -1), Kz(0)}, fc * rho[3]);
            }
        g += word_state({Iz(r, 0, -3), Kz(0), Kz(0)}, rho[4]);
        g += word_state({Iz(r, 0, -3), Kz(1)}, rho[5]);
        g += word_state({Iz(r, 1, -3), Kz(0)}, rho[6]);
        g += word_state({Iz(r, 2, -3)}, rho[7]);
        out[r - 1] = g;
    }
    return out;
}

State golden_state(const std::string& tag) {
    if (tag == "sigma1") return quadratic_density();
    if (tag == "sigma3") return from_quartic_coordinates(sigma3_coordinates());
    if (tag == "quartic_alt_density") return from_quartic_coordinates(quartic_alt_coordinates());
    if (tag == "double_translate") return translate_pow(double_translate_core(), 2);
    if (tag.rfind("tdv_", 0) == 0 && tag.size() == 5)
        return derivative_image(tag[4] - '0');
    if (tag.rfind("witness_quadratic_r", 0) == 0 && tag.size() == 20) {
        int r = tag[19] - '0';
        if (r < 1 || r > 3) throw argument_error("unknown golden tag: " + tag);
        return word_state({Iz(r, 0, -1)}, QExt(-4));
    }
    if (tag.rfind("witness_quartic_r", 0) == 0 && tag.size() == 18) {
        int r = tag[17] - '0';
        if (r < 1 || r > 3) throw argument_error("unknown golden tag: " + tag);
        return quartic_witness_states(quartic_witness_rhos(sigma3_coordinates()))[r - 1];
    }
    if (tag == "pair11_A") return pair11_A();
    if (tag == "pair11_B") return pair11_B();
    if (tag == "pair13_A") return pair13_A();
    if (tag == "pair13_B") return pair13_B();
    if (tag.rfind("quartic_basis_", 0) == 0) {
        int i = 0;
        try {
            i = std::stoi(tag.substr(14));
        } catch (const std::exception&) {
            throw argument_error("unknown golden tag: " + tag);
        }
        return quartic_basis_state(i);
    }
    throw argument_error("unknown golden tag: " + tag);
}

const std::vector<std::string>& golden_tags() {
    static const std::vector<std::string> tags = [] {
        std::vector<std::string> t = {"sigma1", "sigma3", "quartic_alt_density",
                                      "double_translate"};
        for (int i = 1; i <= 5; ++i) t.push_back("tdv_" + std::to_string(i));
        for (int r = 1; r <= 3; ++r) t.push_back("witness_quadratic_r" + std::to_string(r));
        for (int r = 1; r <= 3; ++r) t.push_back("witness_quartic_r" + std::to_string(r));
        t.insert(t.end(), {"pair11_A", "pair11_B", "pair13_A", "pair13_B"});
        for (int i = 1; i <= 14; ++i) t.push_back("quartic_basis_" + std::to_string(i));
        return t;
    }();
    return tags;
}

std::string golden_json() {
    nlohmann::json j;
    j["version"] = 1;
    j["states"] = nlohmann::json::array();
    for (const auto& tag : golden_tags()) {
        nlohmann::json e;
        e["tag"] = tag;
        e["expr"] = print_state(golden_state(tag));
        j["states"].push_back(e);
    }
    return j.dump(2) + "\n";
}

}  // namespace gaudin
