#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

namespace gridperm {

// Number of compact class representatives of each positive length, plus
// whether ε belongs to the set.
struct LengthHistogram {
    std::map<std::size_t, std::uint64_t> counts;
    bool has_epsilon = false;

    std::uint64_t total() const noexcept {
        std::uint64_t sum = has_epsilon ? 1 : 0;
        for (const auto& [m, c] : counts) sum += c;
        return sum;
    }

    friend bool operator==(const LengthHistogram&, const LengthHistogram&) = default;
};

}  // namespace gridperm
