#pragma once

#include <optional>
#include <string_view>

namespace gridperm {

// Generator family of a distance class: prefix reversals f_i (burnt pancake
// flips) or block reversals b_{i,j} (genome inversions).
enum class DistanceFamily { PrefixReversal, BlockReversal };

// "pancake" / "reversal"; also the cache directory names.
constexpr std::string_view family_name(DistanceFamily family) noexcept {
    return family == DistanceFamily::PrefixReversal ? "pancake" : "reversal";
}

inline std::optional<DistanceFamily> parse_family(std::string_view name) noexcept {
    if (name == "pancake" || name == "prefix") return DistanceFamily::PrefixReversal;
    if (name == "reversal" || name == "block") return DistanceFamily::BlockReversal;
    return std::nullopt;
}

}  // namespace gridperm
