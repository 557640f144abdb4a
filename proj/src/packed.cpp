#include "gridperm/packed.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gridperm {

SignedPerm from_packed_entries(std::vector<int> entries) noexcept {
    return SignedPerm(std::move(entries), SignedPerm::trusted_tag{});
}

}  // namespace gridperm

namespace gridperm::packed {

namespace {

void require_fit(std::size_t n) {
    if (!fits(n))
        throw std::length_error("permutation of length " + std::to_string(n) +
                                " exceeds the packed limit of " + std::to_string(kMaxLength));
}

}  // namespace

Key encode(const SignedPerm& pi) {
    require_fit(pi.size());
    Key key = static_cast<Key>(pi.size()) << 60;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        const int e = pi[i];
        const Key slot = static_cast<Key>(std::abs(e)) | (e < 0 ? 16u : 0u);
        key |= slot << (5 * i);
    }
    return key;
}

SignedPerm decode(Key key) {
    const std::size_t n = length(key);
    std::vector<int> entries(n);
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned slot = static_cast<unsigned>((key >> (5 * i)) & 31u);
        const int magnitude = static_cast<int>(slot & 15u);
        entries[i] = (slot & 16u) ? -magnitude : magnitude;
    }
    return from_packed_entries(std::move(entries));
}

Lanes to_lanes(const SignedPerm& pi) {
    require_fit(pi.size());
    Lanes lanes;
    for (std::size_t i = 0; i < pi.size(); ++i) lanes.v[i] = static_cast<std::int8_t>(pi[i]);
    return lanes;
}

SignedPerm from_lanes(const Lanes& lanes, std::size_t length) {
    std::vector<int> entries(length);
    for (std::size_t i = 0; i < length; ++i) entries[i] = lanes.v[i];
    return from_packed_entries(std::move(entries));
}

}  // namespace gridperm::packed
