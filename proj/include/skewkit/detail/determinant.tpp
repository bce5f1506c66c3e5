#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace skewkit {

template <class T>
T determinant(const std::vector<std::vector<T>>& m, const T& zero, const T& one,
              const std::function<bool(const T&)>& is_zero) {
    const std::size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    if (n == 0) return one;
    if (n > 30) throw std::invalid_argument("matrix too large for cofactor expansion");

    // minor over rows [n - popcount(cols), n) and the column set `cols`
    std::unordered_map<std::uint32_t, T> memo;
    std::function<T(std::uint32_t)> minor = [&](std::uint32_t cols) -> T {
        if (cols == 0) return one;
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(cols));
        T acc = zero;
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(cols >> j & 1u)) continue;
            const T& e = m[row][j];
            if (!is_zero(e)) {
                T sub = minor(cols & ~(1u << j));
                if (!is_zero(sub)) {
                    if (sign > 0) acc = acc + e * sub;
                    else acc = acc - e * sub;
                }
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return minor(n == 32 ? 0xffffffffu : ((1u << n) - 1u));
}

}  // namespace skewkit
