// util.hpp
//
// Small shared helpers: error types, hashing, binomials, and a
// deterministic index-ordered parallel map.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gaudin {

struct config_error : std::runtime_error {
    explicit config_error(const std::string& m) : std::runtime_error(m) {}
};
struct argument_error : std::runtime_error {
    explicit argument_error(const std::string& m) : std::runtime_error(m) {}
};
struct parse_error : std::runtime_error {
    parse_error(const std::string& m, size_t pos)
        : std::runtime_error(m + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

// FNV-1a over raw bytes; stable across runs, used for word hash maps.
inline uint64_t fnv1a(const void* data, size_t n, uint64_t seed = 1469598103934665603ull) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    uint64_t h = seed;
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

// Global worker cap for parallel_map; 0 means hardware concurrency.
int& thread_cap();

// Applies fn(i) for i in [0, n); results land in a vector indexed by i, so the
// caller's merge order is deterministic regardless of scheduling.
template <typename R>
std::vector<R> parallel_map(size_t n, const std::function<R(size_t)>& fn) {
    std::vector<R> out(n);
    unsigned cap = thread_cap() > 0 ? static_cast<unsigned>(thread_cap())
                                    : std::thread::hardware_concurrency();
    if (cap < 1) cap = 1;
    unsigned workers = static_cast<unsigned>(n < cap ? n : cap);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (size_t i = w; i < n; i += workers) out[i] = fn(i);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

// Generalized binomial C(m, k) = m(m-1)...(m-k+1)/k! for any integer m,
// k >= 0; always an exact integer.
long long binomial_int(long long m, unsigned k);

}  // namespace gaudin
