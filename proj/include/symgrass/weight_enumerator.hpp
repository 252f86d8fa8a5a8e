#pragma once

#include <cstdint>
#include <map>
#include <optional>

namespace symgrass {

/// Exact weight distribution of a linear code: weight -> number of codewords.
/// The zero codeword is counted once at weight 0.
struct WeightEnumerator {
    std::map<std::uint64_t, std::uint64_t> distribution;

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (const auto& [w, c] : distribution) s += c;
        return s;
    }

    /// Smallest weight > 0 with a nonzero count.
    std::optional<std::uint64_t> min_nonzero_weight() const {
        for (const auto& [w, c] : distribution)
            if (w > 0 && c > 0) return w;
        return std::nullopt;
    }

    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

}  // namespace symgrass
