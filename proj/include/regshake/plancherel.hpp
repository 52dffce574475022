#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "partition.hpp"
#include "rng.hpp"

namespace regshake {

// Plancherel mass of lambda: #Std(lambda)^2 / n!, exact.
inline Rational plancherel_pmf(const Partition& p) {
    const BigInt f = num_standard_tableaux(p);
    return Rational(f * f, factorial(p.size()));
}

// Plancherel sample of size n via RSK row insertion of n iid uniforms.
// Deterministic in (n, seed). Each insertion walks the bump chain with a
// binary search per row; rows stay sorted because the bumped entry is always
// the leftmost one exceeding the incoming value.
inline Partition sample_plancherel(long long n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("sample_plancherel: n must be nonnegative");
    Xoshiro256pp rng(seed);
    std::vector<std::vector<double>> rows;
    for (long long i = 0; i < n; ++i) {
        double v = rng.uniform01();
        bool placed = false;
        for (auto& row : rows) {
            auto it = std::upper_bound(row.begin(), row.end(), v);
            if (it == row.end()) {
                row.push_back(v);
                placed = true;
                break;
            }
            std::swap(v, *it);   // bump the leftmost entry exceeding v
        }
        if (!placed) rows.emplace_back(1, v);
    }
    std::vector<long long> shape;
    shape.reserve(rows.size());
    for (const auto& row : rows) {
        assert(shape.empty() || shape.back() >= static_cast<long long>(row.size()));
        shape.push_back(static_cast<long long>(row.size()));
    }
    return Partition(std::move(shape));
}

} // namespace regshake
