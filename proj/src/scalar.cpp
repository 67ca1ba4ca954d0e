// scalar.cpp
//
// Out-of-line pieces of the scalar layer plus shared utility state.

#include "gaudin/scalar.hpp"
#include "gaudin/util.hpp"

namespace gaudin {

int& thread_cap() {
    static int cap = 0;  // 0 = use hardware concurrency
    return cap;
}

long long binomial_int(long long m, unsigned k) {
    // C(m,k) for any integer m is itself an integer; computed stepwise so the
    // division is exact at each step (C(m,i)*(m-i) = C(m,i+1)*(i+1)).
    __int128 num = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= (m - static_cast<long long>(i));
        num /= static_cast<long long>(i) + 1;
    }
    return static_cast<long long>(num);
}

}  // namespace gaudin
