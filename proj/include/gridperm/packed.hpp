#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "gridperm/signed_perm.hpp"

// Fixed-width forms of short signed permutations for the hot loops.
//
// Key: 64-bit injective encoding. Slot i (i < 12) occupies bits [5i, 5i+5):
// the low four bits hold |entry| and bit 4 is set for negative entries.
// Unused slots are zero. Bits [60, 64) hold the length.
//
// Lanes: the same permutation as 16 signed bytes, zero past the length.
namespace gridperm::packed {

inline constexpr std::size_t kMaxLength = 12;

using Key = std::uint64_t;

struct alignas(16) Lanes {
    std::array<std::int8_t, 16> v{};

    friend bool operator==(const Lanes&, const Lanes&) = default;
};

constexpr std::size_t length(Key key) noexcept { return static_cast<std::size_t>(key >> 60); }

constexpr bool fits(std::size_t length) noexcept { return length <= kMaxLength; }

// Throws std::length_error when the permutation is longer than kMaxLength.
Key encode(const SignedPerm& pi);
SignedPerm decode(Key key);

Lanes to_lanes(const SignedPerm& pi);
SignedPerm from_lanes(const Lanes& lanes, std::size_t length);

}  // namespace gridperm::packed

namespace gridperm {
// Builds a SignedPerm from entries already known to be standard.
SignedPerm from_packed_entries(std::vector<int> entries) noexcept;
}  // namespace gridperm
