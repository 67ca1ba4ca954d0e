// tensor.cpp
//
// Closed-form symmetric tensor values, slot symmetrization, and the
// exhaustive index identities.

#include "gaudin/tensor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gaudin {

Rat sym_tensor_value(const std::vector<int>& indices) {
    if (indices.size() % 2 != 0) throw argument_error("symmetric tensor rank must be even");
    size_t n = indices.size() / 2;
    if (n == 0) return rat(1);
    long counts[4] = {0, 0, 0, 0};
    for (int i : indices) {
        check_color(i);
        ++counts[i];
    }
    for (int c = 1; c <= 3; ++c)
        if (counts[c] % 2 != 0) return rat(0);
    // (2^n n! / (2n)!) * prod_c (counts[c] - 1)!!
    Rat value(1);
    for (size_t i = 0; i < n; ++i) value *= rat(2 * (long long)(i + 1), 1);  // 2^n n!
    for (size_t i = 1; i <= 2 * n; ++i) value /= rat((long long)i, 1);       // / (2n)!
    for (int c = 1; c <= 3; ++c)
        for (long k = counts[c] - 1; k > 1; k -= 2) value *= rat(k, 1);
    return value;
}

Rat sym_tensor_value_bruteforce(const std::vector<int>& indices) {
    if (indices.size() % 2 != 0) throw argument_error("symmetric tensor rank must be even");
    std::vector<int> perm(indices.size());
    std::iota(perm.begin(), perm.end(), 0);
    long long matches = 0, total = 0;
    do {
        ++total;
        bool ok = true;
        for (size_t i = 0; i + 1 < perm.size(); i += 2)
            if (indices[perm[i]] != indices[perm[i + 1]]) {
                ok = false;
                break;
            }
        if (ok) ++matches;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return rat(matches, total);
}

std::vector<IndexedTerm> symmetrize_indices(const std::vector<IndexedTerm>& terms,
                                            const std::vector<int>& marked_slots) {
    std::map<std::vector<int>, QExt> acc;
    std::vector<int> order(marked_slots.size());
    std::iota(order.begin(), order.end(), 0);
    long long nperm = 1;
    for (size_t i = 2; i <= marked_slots.size(); ++i) nperm *= (long long)i;
    QExt inv_nperm = QExt(rat(1, nperm));
    for (const auto& t : terms) {
        std::vector<int> base = t.indices;
        std::sort(order.begin(), order.end());
        do {
            std::vector<int> idx = base;
            for (size_t i = 0; i < marked_slots.size(); ++i)
                idx[marked_slots[i]] = base[marked_slots[order[i]]];
            QExt c = t.coeff * inv_nperm;
            auto it = acc.find(idx);
            if (it == acc.end())
                acc.emplace(std::move(idx), c);
            else
                it->second += c;
        } while (std::next_permutation(order.begin(), order.end()));
    }
    std::vector<IndexedTerm> out;
    for (auto& [idx, c] : acc)
        if (!c.is_zero()) out.push_back({c, idx});
    return out;
}

TensorReport verify_syzygies() {
    TensorReport rep;
    // f^{abc} f^{cde} = 2(d^{ae} d^{bd} - d^{ad} d^{be})
    bool failed = false;
    for (int a = 1; a <= 3 && !failed; ++a)
        for (int b = 1; b <= 3 && !failed; ++b)
            for (int d = 1; d <= 3 && !failed; ++d)
                for (int e = 1; e <= 3 && !failed; ++e) {
                    QExt lhs;
                    for (int c = 1; c <= 3; ++c) lhs += f_const(a, b, c) * f_const(c, d, e);
                    QExt rhs(rat(2 * (delta(a, e) * delta(b, d) - delta(a, d) * delta(b, e))));
                    if (lhs != rhs) {
                        rep.fail("ff contraction at (" + std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(d) + "," + std::to_string(e) + ")");
                        failed = true;
                    }
                }
    // f^{abc} f^{abd} = -4 d^{cd}
    failed = false;
    for (int c = 1; c <= 3 && !failed; ++c)
        for (int d = 1; d <= 3 && !failed; ++d) {
            QExt lhs;
            for (int a = 1; a <= 3; ++a)
                for (int b = 1; b <= 3; ++b) lhs += f_const(a, b, c) * f_const(a, b, d);
            if (lhs != QExt(rat(-4 * delta(c, d)))) {
                rep.fail("ff trace at (" + std::to_string(c) + "," + std::to_string(d) + ")");
                failed = true;
            }
        }
    // f^{abc} d^{de} - f^{bcd} d^{ae} + f^{cda} d^{be} - f^{dab} d^{ce} = 0
    failed = false;
    for (int a = 1; a <= 3 && !failed; ++a)
        for (int b = 1; b <= 3 && !failed; ++b)
            for (int c = 1; c <= 3 && !failed; ++c)
                for (int d = 1; d <= 3 && !failed; ++d)
                    for (int e = 1; e <= 3 && !failed; ++e) {
                        QExt lhs = f_const(a, b, c) * QExt(rat(delta(d, e))) -
                                   f_const(b, c, d) * QExt(rat(delta(a, e))) +
                                   f_const(c, d, a) * QExt(rat(delta(b, e))) -
                                   f_const(d, a, b) * QExt(rat(delta(c, e)));
                        if (!lhs.is_zero()) {
                            rep.fail("four-term f/delta at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + "," +
                                     std::to_string(d) + "," + std::to_string(e) + ")");
                            failed = true;
                        }
                    }
    return rep;
}

TensorReport verify_jacobi() {
    TensorReport rep;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int e = 1; e <= 3; ++e) {
                    QExt sum;
                    for (int d = 1; d <= 3; ++d)
                        sum += f_const(a, b, d) * f_const(d, c, e) +
                               f_const(b, c, d) * f_const(d, a, e) +
                               f_const(c, a, d) * f_const(d, b, e);
                    if (!sum.is_zero()) {
                        rep.fail("jacobi at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + "," + std::to_string(e) + ")");
                        return rep;
                    }
                }
    return rep;
}

namespace {
// sum over slots j of f^{c, t_j, k} T(..., k at j, ...) must vanish for
// invariant T; checks a rank-r tensor given as a callable.
template <typename Fn>
bool invariant_under_rotations(int rank, Fn tensor, std::string* what) {
    std::vector<int> idx(rank, 1);
    while (true) {
        for (int c = 1; c <= 3; ++c) {
            QExt sum;
            for (int j = 0; j < rank; ++j) {
                for (int k = 1; k <= 3; ++k) {
                    if (f_const(c, idx[j], k).is_zero()) continue;
                    std::vector<int> rot = idx;
                    rot[j] = k;
                    sum += f_const(c, idx[j], k) * tensor(rot);
                }
            }
            if (!sum.is_zero()) {
                *what = "rotation index " + std::to_string(c);
                return false;
            }
        }
        int j = rank - 1;
        while (j >= 0 && idx[j] == 3) idx[j--] = 1;
        if (j < 0) break;
        ++idx[j];
    }
    return true;
}
}  // namespace

TensorReport verify_invariance() {
    TensorReport rep;
    std::string what;
    auto d2 = [](const std::vector<int>& i) { return QExt(rat(delta(i[0], i[1]))); };
    auto f3 = [](const std::vector<int>& i) { return f_const(i[0], i[1], i[2]); };
    auto s2 = [](const std::vector<int>& i) { return QExt(sym_tensor_value(i)); };
    auto s4 = [](const std::vector<int>& i) { return QExt(sym_tensor_value(i)); };
    if (!invariant_under_rotations(2, d2, &what)) rep.fail("delta not invariant: " + what);
    if (!invariant_under_rotations(3, f3, &what)) rep.fail("f not invariant: " + what);
    if (!invariant_under_rotations(2, s2, &what)) rep.fail("sym rank 2 not invariant: " + what);
    if (!invariant_under_rotations(4, s4, &what)) rep.fail("sym rank 4 not invariant: " + what);
    return rep;
}

}  // namespace gaudin
