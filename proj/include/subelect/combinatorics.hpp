#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace subelect {

inline mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// First k-subset of {0..n-1} in lexicographic order, or empty if k > n.
inline std::vector<int> first_combination(int n, int k) {
    if (k > n || k < 0) return {};
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    return c;
}

// Advances to the next k-subset in lexicographic order; false when exhausted.
inline bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace subelect
