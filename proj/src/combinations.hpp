#ifndef EHCUT_SRC_COMBINATIONS_HPP
#define EHCUT_SRC_COMBINATIONS_HPP

#include <cstdint>
#include <vector>

// Lexicographic k-combinations of {0..n-1}, with saturating counting so
// projected enumeration sizes can be compared against budgets without
// overflow.

namespace ehcut::detail {

inline constexpr std::uint64_t kCountCap = ~std::uint64_t{0};

// min(C(n,k), cap); saturates instead of overflowing. The running value
// C(n-k+i, i) is nondecreasing in i, so capping mid-product is sound.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result >= cap) return cap;
    }
    return static_cast<std::uint64_t>(result);
}

// Writes the combination with the given lexicographic rank into out (size k).
inline void unrank_combination(std::uint64_t rank, int n, int k, std::vector<int>& out) {
    out.resize(static_cast<std::size_t>(k));
    int value = 0;
    for (int slot = 0; slot < k; ++slot) {
        while (true) {
            const std::uint64_t below =
                binomial_capped(static_cast<std::uint64_t>(n - value - 1),
                                static_cast<std::uint64_t>(k - slot - 1), kCountCap);
            if (rank < below) break;
            rank -= below;
            ++value;
        }
        out[static_cast<std::size_t>(slot)] = value;
        ++value;
    }
}

// Advances c to the next combination in lexicographic order; false past the end.
inline bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            int v = ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = ++v;
            return true;
        }
    }
    return false;
}

} // namespace ehcut::detail

#endif
