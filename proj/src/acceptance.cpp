// The ten acceptance criteria: exact end-to-end verifications of the
// invariant spaces, singular families, zero-product decompositions, the
// rescaled (h-graded) hierarchy, and the vertex-algebra axioms.

#include "gaudin/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "gaudin/golden.hpp"
#include "gaudin/hbar.hpp"
#include "gaudin/solvers.hpp"

namespace gaudin {

namespace {

struct Checker {
    bool pass = true;
    std::vector<std::string> lines;
    void check(const std::string& what, bool ok) {
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        if (!ok) pass = false;
    }
};

Rat factorial(int k) {
    Rat f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Rat binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

State sum_diag(const std::function<Word(int)>& word_of) {
    State out;
    for (int a = 1; a <= 3; ++a) out += normal_order(word_of(a), Scalar(QExt(1)));
    return out;
}

std::vector<State> quartic_basis_states() {
    std::vector<State> b;
    for (int i = 1; i <= 14; ++i) b.push_back(quartic_basis_state(i));
    return b;
}

std::array<QExt, 14> coords_of(const std::vector<State>& basis, const State& v, bool& ok) {
    LinearSolution sol = solve_linear_combination(basis, v);
    std::array<QExt, 14> xi{};
    ok = sol.consistent;
    if (ok)
        for (size_t i = 0; i < 14; ++i) xi[i] = sol.particular[i];
    return xi;
}

void criterion_invariant_dimensions(Checker& c) {
    const size_t expected[5] = {1, 0, 1, 3, 14};
    for (int n = 0; n <= 4; ++n) {
        size_t dim = invariant_subspace(n).vectors.size();
        c.check("degree " + std::to_string(n) + " invariant dimension = " +
                    std::to_string(expected[n]),
                dim == expected[n]);
    }
    // The degree-3 space contains both derivative placements of the
    // delta-contracted pair and the central-dressed pair, independently.
    State w1 = sum_diag([](int a) {
        return Word{make_current(a, 1, -2, Point::Z), make_current(a, 0, -1, Point::Z)};
    });
    State w2 = sum_diag([](int a) {
        return Word{make_current(a, 0, -2, Point::Z), make_current(a, 0, -1, Point::Z),
                    make_central(0, Point::Z)};
    });
    State w3 = sum_diag([](int a) {
        return Word{make_current(a, 0, -2, Point::Z), make_current(a, 1, -1, Point::Z)};
    });
    for (int r = 1; r <= 3; ++r)
        c.check("degree-3 witness " + std::to_string(r) + " killed by zero modes",
                diagonal_action(r, 0, w3).is_zero());
    c.check("three degree-3 invariants are independent", state_rank({w1, w2, w3}) == 3);
    c.check("third invariant lies in the computed kernel",
            solve_linear_combination(invariant_subspace(3).vectors, w3).consistent);
}

void criterion_tensor_identities(Checker& c) {
    c.check("structure-constant syzygies", verify_syzygies().pass);
    c.check("Jacobi identity", verify_jacobi().pass);
    c.check("invariance of delta, f, and symmetric tensors", verify_invariance().pass);
}

void criterion_quadratic_singular(Checker& c) {
    SingularSubspace ss = singular_subspace(2);
    c.check("degree-2 singular dimension = 1", ss.basis.vectors.size() == 1);
    if (ss.basis.vectors.size() != 1) return;
    LinearSolution sol = solve_linear_combination({golden_state("sigma1")}, ss.basis.vectors[0]);
    c.check("basis vector proportional to the quadratic density",
            sol.consistent && !sol.particular[0].is_zero());
    if (!sol.consistent) return;
    QExt cscale = sol.particular[0];
    for (int r = 1; r <= 3; ++r)
        c.check("mode-1 witness color " + std::to_string(r) + " equals -4 I^r_{-1}|0>",
                ss.witnesses[0].G[r - 1] ==
                    golden_state("witness_quadratic_r" + std::to_string(r)).scaled(cscale));
    c.check("mode-2 membership consistent", ss.mode2_consistent);
}

void criterion_quartic_singular(Checker& c) {
    SingularSubspace ss = singular_subspace(4);
    c.check("degree-4 singular dimension = 7", ss.basis.vectors.size() == 7);
    std::vector<State> qb = quartic_basis_states();
    bool rel_ok = true, wit_ok = true, coord_ok = true;
    for (size_t j = 0; j < ss.basis.vectors.size(); ++j) {
        bool ok = false;
        std::array<QExt, 14> xi = coords_of(qb, ss.basis.vectors[j], ok);
        coord_ok = coord_ok && ok;
        if (!ok) continue;
        for (const auto& [dep, form] : quartic_coordinate_relations()) {
            QExt rhs;
            for (const auto& [idx, coef] : form) rhs += xi[idx - 1] * QExt(coef);
            rel_ok = rel_ok && (xi[dep - 1] == rhs);
        }
        std::array<State, 3> expect = quartic_witness_states(quartic_witness_rhos(xi));
        for (int r = 0; r < 3; ++r)
            wit_ok = wit_ok && (ss.witnesses[j].G[r] == expect[r]);
    }
    c.check("every basis vector lies in the 14-state span", coord_ok);
    c.check("dependent-coordinate relations hold on all basis vectors", rel_ok);
    c.check("all eight witness coefficient formulas reproduced", wit_ok);
    c.check("mode-2 membership consistent", ss.mode2_consistent);

    std::vector<State> family{golden_state("sigma3"), golden_state("double_translate")};
    for (int i = 1; i <= 5; ++i) family.push_back(golden_state("tdv_" + std::to_string(i)));
    c.check("density + double translate + five derivative images have rank 7",
            state_rank(family) == 7);
    bool span_ok = true;
    for (const State& v : family)
        span_ok = span_ok && solve_linear_combination(ss.basis.vectors, v).consistent;
    c.check("that family lies in the singular subspace", span_ok);
    c.check("alternative quartic density lies in the singular subspace",
            solve_linear_combination(ss.basis.vectors, golden_state("quartic_alt_density"))
                .consistent);
}

void criterion_zero_products(Checker& c) {
    State a11 = golden_state("pair11_A"), b11 = golden_state("pair11_B");
    c.check("degree-2 pair identity holds exactly",
            verify_given_decomposition(1, 1, a11, b11).is_zero());
    Decomposition d11 = decompose_zero_product(1, 1);
    c.check("solver finds a (1,1) decomposition",
            d11.found && verify_given_decomposition(1, 1, d11.A, d11.B).is_zero());

    State a13 = golden_state("pair13_A"), b13 = golden_state("pair13_B");
    c.check("transcribed (1,3) pair states give zero residual",
            verify_given_decomposition(1, 3, a13, b13).is_zero());
    Decomposition d13 = decompose_zero_product(1, 3);
    c.check("solver finds a (1,3) decomposition",
            d13.found && verify_given_decomposition(1, 3, d13.A, d13.B).is_zero());
    Decomposition d31 = decompose_zero_product(3, 1);
    c.check("solver finds a (3,1) decomposition",
            d31.found && verify_given_decomposition(3, 1, d31.A, d31.B).is_zero());

    // Swapping the factors: A_31(z,w) = A_13(w,z) and B_31 picks up the
    // translate series sum_k (1/(k+1)!) (-1)^k T^k (s1(w)_(k+1) s3(z)).
    State a31 = swap_points(a13);
    State b31 = swap_points(b13).scaled(QExt(-1));
    State s1w = swap_points(build_sigma(1));
    State s3z = build_sigma(3);
    for (int k = 0; k <= 5; ++k) {
        State prod = mode_action(s1w, k + 1, s3z);
        if (prod.is_zero()) continue;
        QExt coef(rat(k % 2 == 0 ? 1 : -1) / factorial(k + 1));
        b31 += translate_pow(prod, k).scaled(coef);
    }
    c.check("skew-symmetry transport of the (1,3) pair verifies as (3,1)",
            verify_given_decomposition(3, 1, a31, b31).is_zero());
    c.check("sign-flipped transported pair is rejected (canary)",
            !verify_given_decomposition(3, 1, a31.scaled(QExt(-1)), b31).is_zero());
    c.check("perturbed coefficient is rejected (canary)",
            !verify_given_decomposition(1, 1, a11.scaled(QExt(rat(101, 100))), b11).is_zero());
}

void criterion_quartic_quartic(Checker& c) {
    Decomposition d = decompose_zero_product(3, 3);
    c.check("solver finds a (3,3) decomposition", d.found);
    if (!d.found) {
        c.check("note: " + d.note, false);
        return;
    }
    c.check("recomputed residual is zero",
            verify_given_decomposition(3, 3, d.A, d.B).is_zero());
}

void criterion_diagonal_regularity(Checker& c) {
    RegularityReport r11 = regular_modulo_translates(golden_state("pair11_A"));
    c.check("degree-2 pair state regular modulo translates", r11.feasible);
    RegularityReport r13 = regular_modulo_translates(golden_state("pair13_A"));
    c.check("degree-4 pair state regular modulo translates", r13.feasible);
}

void criterion_hbar_hierarchy(Checker& c, bool slow_tier) {
    for (int n = 1; n <= 3; ++n)
        c.check("uniqueness at exponent " + std::to_string(2 * n - 1) +
                    ": solution space is one-dimensional",
                singular_mod_hbar3_solution_dim(n) == 1);

    const Rat expected_coef[3] = {rat(-4), rat(-8, 3), rat(-12, 5)};
    for (int n = 1; n <= 3; ++n) {
        bool ok = rat(-4 * n, 2 * n - 1) == expected_coef[n - 1];
        try {
            std::array<State, 3> G = check_singular_mod_hbar3(n);
            if (n == 1)
                for (int r = 1; r <= 3; ++r)
                    ok = ok && (G[r - 1] == golden_state("witness_quadratic_r" +
                                                         std::to_string(r))
                                                .shifted(0, 2));
        } catch (const config_error&) {
            ok = false;
        }
        c.check("witness identity at exponent " + std::to_string(2 * n - 1), ok);
    }
    c.check("quartic witness table gives the same leading coefficient",
            quartic_witness_rhos(sigma3_coordinates())[0] == QExt(rat(-8, 3)));

    std::vector<std::pair<int, int>> pairs;
    for (int m : {1, 3, 5})
        for (int n : {1, 3, 5}) pairs.push_back({m, n});
    if (slow_tier) {
        pairs.push_back({1, 7});
        pairs.push_back({7, 1});
        pairs.push_back({7, 7});
    }
    for (auto [m, n] : pairs) {
        PairwiseReport rep = check_pairwise(m, n);
        std::ostringstream what;
        what << "pairwise (" << m << "," << n << "): residual zero and skew-consistent";
        c.check(what.str(), rep.residual_zero && rep.skew_consistent);
        if (m == 1 && n == 1)
            c.check("closed-form pair state matches the rescaled exact one",
                    rep.A == rescale(golden_state("pair11_A")));
    }

    for (int m : {3, 5}) {
        ProofCombinatoricsReport pr = check_proof_combinatorics(m);
        c.check("top-term expansion replay at exponent " + std::to_string(m), pr.pass());
        if (m == 3)
            c.check("expansion prefactors instantiate to 12, 4, 12",
                    pr.pref1 == 12 && pr.pref2 == 4 && pr.pref3 == 12);
        else
            c.check("expansion prefactors instantiate to 30, 6, 60",
                    pr.pref1 == 30 && pr.pref2 == 6 && pr.pref3 == 60);
    }
    c.check("correction-coefficient identity for n <= 6", xi_identity_holds(6));
}

void criterion_cross_route(Checker& c) {
    State tilde = build_sigma_tilde(2);
    State exact = rescale(build_sigma(3));
    c.check("leading layers agree",
            tilde.h_part(0).with_cutoff(Scalar::kNoCutoff).shifted(0, 4) == exact.h_part(4));
    c.check("correction layers agree",
            tilde.h_part(1).with_cutoff(Scalar::kNoCutoff).shifted(0, 2) == exact.h_part(3));
    c.check("correction layer is 20/3 times the f-contracted basis state",
            tilde.h_part(1).with_cutoff(Scalar::kNoCutoff).shifted(0, -1) ==
                quartic_basis_state(2).scaled(QExt(rat(20, 3))));
}

// Randomized vertex-algebra axiom corpus with a fixed seed.
void criterion_property_corpus(Checker& c) {
    std::mt19937 rng(20260823u);
    auto ri = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto random_word = [&]() {
        Word w;
        int len = ri(1, 3);
        for (int i = 0; i < len; ++i) {
            Point pt = ri(0, 1) ? Point::W : Point::Z;
            if (ri(0, 5) == 0)
                w.push_back(make_central(ri(0, 1), pt));
            else
                w.push_back(make_current(ri(1, 3), ri(0, 1), -ri(1, 2), pt));
        }
        return w;
    };
    auto random_coeff = [&]() {
        static const QExt menu[4] = {QExt(1), QExt(-1), QExt(rat(1, 2)), QExt::s()};
        return Scalar(menu[ri(0, 3)], ri(-1, 1), 0);
    };
    auto random_state = [&]() {
        State v;
        int terms = ri(1, 2);
        for (int i = 0; i < terms; ++i) v += normal_order(random_word(), random_coeff());
        return v;
    };
    // Homogeneous samples keep their generating word: normal ordering may move
    // weight into u-powers, so the reference bigrade comes from the raw word.
    auto random_homogeneous = [&]() {
        Word w = random_word();
        return std::pair<Word, State>(w, normal_order(w, Scalar(QExt(1))));
    };

    size_t total = 0, passed = 0;
    auto tally = [&](bool ok) {
        ++total;
        if (ok) ++passed;
    };

    for (int iter = 0; iter < 125; ++iter) {
        State A = random_state(), B = random_state(), C = random_homogeneous().second;

        // 1. Skew symmetry of the zero product.
        tally(skew_symmetry_check(A, B, 10).pass);

        // 2. Commutator formula [a_(m), b_(k)] = sum_j C(m,j) (a_(j)b)_(m+k-j).
        {
            int m = ri(0, 2), k = ri(0, 2);
            State lhs = mode_action(A, m, mode_action(B, k, C)) -
                        mode_action(B, k, mode_action(A, m, C));
            State rhs;
            for (int j = 0; j <= m; ++j)
                rhs += mode_action(mode_action(A, j, B), m + k - j, C).scaled(QExt(binom(m, j)));
            tally(lhs == rhs);
        }

        // 3. Translates: (TA)_(0) = 0 and (TA)_(1) = -A_(0).
        tally(mode_action(translate(A), 0, B).is_zero());
        tally(mode_action(translate(A), 1, B) == mode_action(A, 0, B).scaled(QExt(-1)));

        // 4. Zero-mode derivation: [a_(0), b_(k)] = (a_(0)b)_(k).
        {
            int k = ri(0, 2);
            State lhs = mode_action(A, 0, mode_action(B, k, C)) -
                        mode_action(B, k, mode_action(A, 0, C));
            tally(lhs == mode_action(mode_action(A, 0, B), k, C));
        }

        // 5. Grade laws on homogeneous words: depth adds as dA+dB-n-1 and the
        // u-adjusted weight adds exactly.
        {
            auto [wa, HA] = random_homogeneous();
            auto [wb, HB] = random_homogeneous();
            int n = ri(0, 1);
            State prod = mode_action(HA, n, HB);
            bool ok = true;
            for (const auto& [w, coef] : prod.terms()) {
                if (word_depth(w) != word_depth(wa) + word_depth(wb) - n - 1) ok = false;
                for (const auto& [uh, q] : coef.terms())
                    if (word_weight(w) - uh.u != word_weight(wa) + word_weight(wb)) ok = false;
            }
            tally(ok);
        }
    }
    std::ostringstream what;
    what << "seeded axiom corpus: " << passed << "/" << total << " cases pass";
    c.check(what.str(), total >= 500 && passed == total);
}

}  // namespace

std::vector<int> criterion_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}; }

CriterionResult run_criterion(int id, bool slow_tier) {
    CriterionResult r;
    r.id = id;
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    switch (id) {
        case 1:
            r.name = "invariant dimensions";
            criterion_invariant_dimensions(c);
            break;
        case 2:
            r.name = "structure-constant identities";
            criterion_tensor_identities(c);
            break;
        case 3:
            r.name = "quadratic singular vector";
            criterion_quadratic_singular(c);
            break;
        case 4:
            r.name = "quartic singular space";
            criterion_quartic_singular(c);
            break;
        case 5:
            r.name = "zero products (degrees 2 and 4)";
            criterion_zero_products(c);
            break;
        case 6:
            r.name = "quartic-quartic decomposition";
            criterion_quartic_quartic(c);
            break;
        case 7:
            r.name = "diagonal regularity";
            criterion_diagonal_regularity(c);
            break;
        case 8:
            r.name = "rescaled hierarchy";
            criterion_hbar_hierarchy(c, slow_tier);
            break;
        case 9:
            r.name = "cross-route density consistency";
            criterion_cross_route(c);
            break;
        case 10:
            r.name = "vertex-algebra property corpus";
            criterion_property_corpus(c);
            break;
        default:
            throw argument_error("unknown criterion id: " + std::to_string(id));
    }
    r.pass = c.pass;
    r.details = std::move(c.lines);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string render_result_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << " (";
    os.precision(1);
    os << std::fixed << r.seconds << "s): " << r.name;
    return os.str();
}

}  // namespace gaudin
