#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace ame::detail {

// All size-m subsets of {1, ..., n} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    if (m == 0 || m > n) {
        return out;
    }
    std::vector<std::size_t> cur(m);
    std::iota(cur.begin(), cur.end(), std::size_t{1});
    while (true) {
        out.push_back(cur);
        std::size_t i = m;
        while (i > 0 && cur[i - 1] == n - m + i) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++cur[i - 1];
        for (std::size_t j = i; j < m; ++j) {
            cur[j] = cur[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace ame::detail
