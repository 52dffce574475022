#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace regshake {

// Integer partition: weakly decreasing positive parts. The empty partition
// is the unique partition of 0. Value type, immutable after construction.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
        for (long long p : parts_) n_ += p;
    }

    const std::vector<long long>& parts() const { return parts_; }
    long long size() const { return n_; }                       // number of boxes
    long long num_parts() const { return static_cast<long long>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long part(std::size_t i) const {                       // 1-based, 0 beyond the last row
        return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    // "4,4,2,1"; the empty partition serialises to the empty string
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    static Partition parse(const std::string& text) {
        std::vector<long long> parts;
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            const auto first = token.find_first_not_of(" \t");
            if (first == std::string::npos) {
                if (parts.empty() && in.eof()) break;   // empty string -> empty partition
                throw std::invalid_argument("Partition::parse: empty part in '" + text + "'");
            }
            const auto last = token.find_last_not_of(" \t");
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(token.substr(first, last - first + 1), &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("Partition::parse: bad part in '" + text + "'");
            }
            if (used != last - first + 1)
                throw std::invalid_argument("Partition::parse: bad part in '" + text + "'");
            parts.push_back(value);
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<long long> parts_;
    long long n_ = 0;
};

inline void require_ladder_order(long long e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
}

// Ladder number of the node in row a, column b (both 1-based).
inline long long ladder_number(long long a, long long b, long long e) {
    require_ladder_order(e);
    if (a < 1 || b < 1) throw std::invalid_argument("ladder_number: node coordinates are 1-based");
    return a + (e - 1) * (b - 1);
}

// How many nodes of the diagram sit on each e-ladder.
inline std::map<long long, long long> ladder_counts(const Partition& p, long long e) {
    require_ladder_order(e);
    std::map<long long, long long> counts;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const long long a = static_cast<long long>(i) + 1;
        for (long long b = 1; b <= parts[i]; ++b) ++counts[a + (e - 1) * (b - 1)];
    }
    return counts;
}

// No part repeats e or more times; equivalently lambda_i > lambda_{i+e-1}.
inline bool is_e_regular(const Partition& p, long long e) {
    require_ladder_order(e);
    const auto& parts = p.parts();
    for (std::size_t i = 0; i + e - 1 < parts.size(); ++i)
        if (parts[i] == parts[i + e - 1]) return false;
    return true;
}

// e-regularisation: every node moves as high as possible in its ladder, so
// each ladder ends up filled from its top node (maximal column) downward.
// The result is a partition with the same ladder counts, and it is e-regular.
inline Partition regularise(const Partition& p, long long e) {
    require_ladder_order(e);
    std::map<long long, long long> row_len;
    for (const auto& [ladder, count] : ladder_counts(p, e)) {
        const long long b_top = (ladder - 1) / (e - 1) + 1;   // highest node of the ladder
        for (long long j = 0; j < count; ++j) {
            const long long b = b_top - j;
            const long long a = ladder - (e - 1) * (b - 1);
            ++row_len[a];
        }
    }
    std::vector<long long> parts;
    parts.reserve(row_len.size());
    long long next_row = 1;
    for (const auto& [row, len] : row_len) {
        assert(row == next_row && "refilled rows must be contiguous from the top");
        ++next_row;
        parts.push_back(len);
    }
    return Partition(std::move(parts));   // constructor re-checks weak decrease
}

inline Partition conjugate(const Partition& p) {
    const auto& parts = p.parts();
    std::vector<long long> cols;
    if (!parts.empty()) {
        cols.resize(static_cast<std::size_t>(parts[0]));
        std::size_t height = 0;   // rows with part >= col, grows as col shrinks
        for (long long col = parts[0]; col >= 1; --col) {
            while (height < parts.size() && parts[height] >= col) ++height;
            cols[static_cast<std::size_t>(col - 1)] = static_cast<long long>(height);
        }
    }
    return Partition(std::move(cols));
}

// Hook lengths cell by cell, rows in diagram order.
inline std::vector<std::vector<long long>> hook_lengths(const Partition& p) {
    const auto& parts = p.parts();
    const Partition conj = conjugate(p);
    std::vector<std::vector<long long>> hooks(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        hooks[i].resize(static_cast<std::size_t>(parts[i]));
        for (long long j = 1; j <= parts[i]; ++j) {
            const long long arm = parts[i] - j;
            const long long leg = conj.part(static_cast<std::size_t>(j)) - static_cast<long long>(i) - 1;
            hooks[i][static_cast<std::size_t>(j - 1)] = arm + leg + 1;
        }
    }
    return hooks;
}

// Number of standard Young tableaux: n! / product of hooks, exact.
inline BigInt num_standard_tableaux(const Partition& p) {
    BigInt denom = 1;
    for (const auto& row : hook_lengths(p))
        for (long long h : row) denom *= h;
    const BigInt numer = factorial(p.size());
    assert(numer % denom == 0);
    return numer / denom;
}

namespace detail {
inline void enumerate_rec(long long remaining, long long max_part,
                          std::vector<long long>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (long long first = std::min(remaining, max_part); first >= 1; --first) {
        prefix.push_back(first);
        enumerate_rec(remaining - first, first, prefix, out);
        prefix.pop_back();
    }
}
} // namespace detail

// All partitions of n in reverse lexicographic order ((n) first, (1^n) last).
// The bound guards against accidental exponential blowups.
inline std::vector<Partition> enumerate_partitions(long long n, long long bound = 40) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    if (n > bound) throw std::invalid_argument("enumerate_partitions: n exceeds bound");
    std::vector<Partition> out;
    std::vector<long long> prefix;
    detail::enumerate_rec(n, n, prefix, out);
    return out;
}

} // namespace regshake
