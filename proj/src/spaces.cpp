// spaces.cpp
//
// Invariant-subspace kernels, the generic exact linear problem, and
// top-filtration symbols.

#include "gaudin/spaces.hpp"

#include <algorithm>
#include <array>

#include "gaudin/util.hpp"

namespace gaudin {

SubspaceBasis invariant_subspace(int n) {
    if (n < 0 || n > 6) throw argument_error("invariant subspace supported for 0 <= n <= 6");
    SubspaceBasis out;
    out.depth = n;
    out.weight = n;
    std::vector<Word> words = enumerate_monomials(n, n, {Point::Z});
    std::vector<State> columns;
    columns.reserve(words.size());
    for (const Word& w : words) {
        State v;
        v.add(w, Scalar(QExt(1)));
        columns.push_back(std::move(v));
    }
    // One block per zero mode; kernel vectors are the invariants.
    auto images = parallel_map<std::array<State, 3>>(columns.size(), [&](size_t j) {
        std::array<State, 3> im;
        for (int r = 1; r <= 3; ++r) im[r - 1] = diagonal_action(r, 0, columns[j]);
        return im;
    });
    LinearSystem sys(columns.size());
    StateRowIndex index;
    for (size_t j = 0; j < columns.size(); ++j)
        for (int r = 0; r < 3; ++r) add_state_column(sys, index, r, j, images[j][r]);
    LinearSolution sol = sys.solve();
    for (const auto& nv : sol.nullspace) out.vectors.push_back(combine(columns, nv));
    return out;
}

LinearSolution solve(const LinearProblem& p) {
    auto images = parallel_map<State>(p.unknown_basis.size(),
                                      [&](size_t j) { return p.constraint_map(p.unknown_basis[j]); });
    return solve_linear_combination(images, p.target);
}

namespace {

// Colorless monomial shapes of exact bigrade (depth, weight): canonical words
// whose currents all carry color 1. Mirrors enumerate_monomials but over the
// color-1 generator pool only.
std::vector<Word> enumerate_shapes(int depth, int weight, const std::vector<Point>& points) {
    std::vector<Gen> pool;
    for (Point pt : points) {
        for (int p = 0; p + 1 <= weight; ++p) pool.push_back(make_central(p, pt));
        for (int m = 1; m <= depth; ++m)
            for (int p = 0; p + 1 <= weight && p <= kMaxCurrentDeriv; ++p)
                pool.push_back(make_current(1, p, -m, pt));
    }
    std::sort(pool.begin(), pool.end());
    std::vector<Word> out;
    Word cur;
    auto dfs = [&](auto&& self, size_t start, int d_left, int w_left) -> void {
        if (d_left == 0 && w_left == 0) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i < pool.size(); ++i) {
            Gen g = pool[i];
            int d = g_depth(g), wgt = g_weight(g);
            if (d > d_left || wgt > w_left) continue;
            cur.push_back(g);
            self(self, i, d_left - d, w_left - wgt);
            cur.pop_back();
        }
    };
    dfs(dfs, 0, depth, weight);
    return out;
}

// One contraction group: a delta pair or an epsilon triple over slot indices;
// slot -1 stands for the free adjoint index of an equivariant family.
struct Group {
    std::vector<int> slots;  // size 2 or 3
};

// All partitions of `slots` into pairs and triples, emitted via `sink`.
void slot_partitions(std::vector<int>& slots, std::vector<Group>& acc,
                     const std::function<void(const std::vector<Group>&)>& sink) {
    if (slots.empty()) {
        sink(acc);
        return;
    }
    int s0 = slots.front();
    for (size_t j = 1; j < slots.size(); ++j) {
        Group g{{s0, slots[j]}};
        std::vector<int> rest;
        for (size_t t = 1; t < slots.size(); ++t)
            if (t != j) rest.push_back(slots[t]);
        acc.push_back(g);
        slot_partitions(rest, acc, sink);
        acc.pop_back();
    }
    for (size_t j = 1; j < slots.size(); ++j)
        for (size_t k = j + 1; k < slots.size(); ++k) {
            Group g{{s0, slots[j], slots[k]}};
            std::vector<int> rest;
            for (size_t t = 1; t < slots.size(); ++t)
                if (t != j && t != k) rest.push_back(slots[t]);
            acc.push_back(g);
            slot_partitions(rest, acc, sink);
            acc.pop_back();
        }
}

// Expands one grouping of one shape into a concrete colored state. Slot r_slot
// (if >= 0 in a group) is pre-colored with r_color.
State expand_grouping(const Word& shape, const std::vector<int>& slot_pos,
                      const std::vector<Group>& groups, int r_color) {
    State out;
    Word colored = shape;
    auto rec = [&](auto&& self, size_t gi, const QExt& coeff) -> void {
        if (gi == groups.size()) {
            out += normal_order(colored, Scalar(coeff));
            return;
        }
        const Group& g = groups[gi];
        bool has_free = g.slots.front() == -1;
        auto set_color = [&](int slot, int c) {
            if (slot < 0) return;
            Gen old = colored[static_cast<size_t>(slot_pos[static_cast<size_t>(slot)])];
            colored[static_cast<size_t>(slot_pos[static_cast<size_t>(slot)])] =
                make_current(c, g_deriv(old), g_mode(old), g_point(old));
        };
        if (g.slots.size() == 2) {
            if (has_free) {
                set_color(g.slots[1], r_color);
                self(self, gi + 1, coeff);
            } else {
                for (int c = 1; c <= 3; ++c) {
                    set_color(g.slots[0], c);
                    set_color(g.slots[1], c);
                    self(self, gi + 1, coeff);
                }
            }
        } else if (has_free) {
            for (int b = 1; b <= 3; ++b)
                for (int c = 1; c <= 3; ++c) {
                    int sign = eps(r_color, b, c);
                    if (sign == 0) continue;
                    set_color(g.slots[1], b);
                    set_color(g.slots[2], c);
                    self(self, gi + 1, coeff * QExt(rat(sign)));
                }
        } else {
            for (int a = 1; a <= 3; ++a)
                for (int b = 1; b <= 3; ++b)
                    for (int c = 1; c <= 3; ++c) {
                        int sign = eps(a, b, c);
                        if (sign == 0) continue;
                        set_color(g.slots[0], a);
                        set_color(g.slots[1], b);
                        set_color(g.slots[2], c);
                        self(self, gi + 1, coeff * QExt(rat(sign)));
                    }
        }
    };
    rec(rec, 0, QExt(1));
    return out;
}

std::vector<int> current_slot_positions(const Word& w) {
    std::vector<int> pos;
    for (size_t i = 0; i < w.size(); ++i)
        if (!is_central(w[i])) pos.push_back(static_cast<int>(i));
    return pos;
}

}  // namespace

std::vector<State> invariant_spanning_set(int depth, int weight, const std::vector<Point>& points,
                                          const std::function<bool(const Word&)>& keep) {
    std::vector<State> out;
    for (const Word& shape : enumerate_shapes(depth, weight, points)) {
        if (keep && !keep(shape)) continue;
        std::vector<int> pos = current_slot_positions(shape);
        std::vector<int> slots(pos.size());
        for (size_t i = 0; i < pos.size(); ++i) slots[i] = static_cast<int>(i);
        std::vector<Group> acc;
        slot_partitions(slots, acc, [&](const std::vector<Group>& groups) {
            State v = expand_grouping(shape, pos, groups, 0);
            if (!v.is_zero()) out.push_back(std::move(v));
        });
    }
    return out;
}

std::vector<std::array<State, 3>> equivariant_spanning_set(
    int depth, int weight, const std::vector<Point>& points,
    const std::function<bool(const Word&)>& keep) {
    std::vector<std::array<State, 3>> out;
    for (const Word& shape : enumerate_shapes(depth, weight, points)) {
        if (keep && !keep(shape)) continue;
        std::vector<int> pos = current_slot_positions(shape);
        std::vector<int> slots(pos.size() + 1);
        slots[0] = -1;  // the free adjoint slot
        for (size_t i = 0; i < pos.size(); ++i) slots[i + 1] = static_cast<int>(i);
        std::vector<Group> acc;
        slot_partitions(slots, acc, [&](const std::vector<Group>& groups) {
            std::array<State, 3> fam;
            bool nonzero = false;
            for (int r = 1; r <= 3; ++r) {
                fam[r - 1] = expand_grouping(shape, pos, groups, r);
                nonzero = nonzero || !fam[r - 1].is_zero();
            }
            if (nonzero) out.push_back(std::move(fam));
        });
    }
    return out;
}

SymTensor sym_delta_tensor(int rank) {
    SymTensor t;
    t.rank = rank;
    std::vector<int> idx(static_cast<size_t>(rank), 1);
    // All ascending tuples over colors 1..3.
    auto rec = [&](auto&& self, size_t pos, int low) -> void {
        if (pos == idx.size()) {
            Rat v = sym_tensor_value(idx);
            if (v != 0) t.entries.emplace(idx, QExt(v));
            return;
        }
        for (int c = low; c <= 3; ++c) {
            idx[pos] = c;
            self(self, pos + 1, c);
        }
    };
    rec(rec, 0, 1);
    return t;
}

SymTensor top_term(const State& v) {
    int N = 0;
    for (const auto& [w, c] : v.terms()) N = std::max(N, word_depth(w));
    SymTensor t;
    t.rank = N;
    if (N == 0) return t;
    Rat orbit_base = 1;  // N!
    for (int i = 2; i <= N; ++i) orbit_base *= i;
    for (const auto& [w, c] : v.terms()) {
        if (word_currents(w) != N) continue;
        // N currents in a degree-N state force mode -1, derivative 0 each.
        std::vector<int> colors;
        colors.reserve(w.size());
        for (Gen g : w) {
            if (is_central(g) || g_mode(g) != -1 || g_deriv(g) != 0)
                throw argument_error("top filtration part is not homogeneous of the stated degree");
            colors.push_back(g_color(g));
        }
        std::sort(colors.begin(), colors.end());
        // Orbit size N! / prod(multiplicities!)
        Rat orbit = orbit_base;
        for (size_t i = 0; i < colors.size();) {
            size_t j = i;
            while (j < colors.size() && colors[j] == colors[i]) ++j;
            Rat fact = 1;
            for (size_t k = 2; k <= j - i; ++k) fact *= static_cast<long>(k);
            orbit /= fact;
            i = j;
        }
        const auto& terms = c.terms();
        if (terms.size() != 1 || !(terms.begin()->first == UH{0, 0}))
            throw argument_error("top-term coefficient is not a plain number");
        QExt val = terms.begin()->second * QExt(Rat(1) / orbit);
        auto it = t.entries.find(colors);
        if (it == t.entries.end()) {
            t.entries.emplace(colors, val);
        } else {
            it->second += val;
            if (it->second.is_zero()) t.entries.erase(it);
        }
    }
    return t;
}

}  // namespace gaudin
