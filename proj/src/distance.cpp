#include "gridperm/distance.hpp"

#include <algorithm>

#include "gridperm/cache.hpp"

namespace gridperm {

using packed::Key;

namespace {

void check_ceiling(DistanceFamily family, std::size_t k, const DistanceLimits& limits) {
    const std::size_t ceiling = limits.ceiling(family);
    if (k > ceiling)
        throw ResourceLimitError(std::string(family_name(family)) + " k=" + std::to_string(k) +
                                 " exceeds the configured ceiling k<=" + std::to_string(ceiling));
    if (!packed::fits(generator_length(family, k)))
        throw ResourceLimitError(std::string(family_name(family)) + " k=" + std::to_string(k) +
                                 " needs generators of length " +
                                 std::to_string(generator_length(family, k)) +
                                 ", beyond the supported maximum " +
                                 std::to_string(packed::kMaxLength));
}

// 1 + e_i (+ e_j), 1-based.
InflationVector split_blocks(std::size_t len, std::size_t i, std::size_t j) {
    std::vector<int> sizes(len, 1);
    ++sizes[i - 1];
    ++sizes[j - 1];
    return InflationVector(std::move(sizes));
}

InflationVector split_block(std::size_t len, std::size_t i) {
    std::vector<int> sizes(len, 1);
    ++sizes[i - 1];
    return InflationVector(std::move(sizes));
}

}  // namespace

std::vector<Key> next_generators(DistanceFamily family, std::span<const Key> current) {
    std::vector<Key> next;
    for (Key key : current) {
        const SignedPerm pi = packed::decode(key);
        const std::size_t len = pi.size();
        if (family == DistanceFamily::PrefixReversal) {
            for (std::size_t i = 1; i <= len; ++i)
                next.push_back(packed::encode(prefix_reversal(inflate(pi, split_block(len, i)), i)));
        } else {
            for (std::size_t i = 1; i <= len; ++i)
                for (std::size_t j = i; j <= len; ++j)
                    next.push_back(packed::encode(
                        block_reversal(inflate(pi, split_blocks(len, i, j)), i + 1, j + 1)));
        }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
}

std::vector<Key> generator_keys(DistanceFamily family, std::size_t k, const DistanceOptions& options) {
    check_ceiling(family, k, options.limits);
    if (options.cache) {
        if (auto cached = options.cache->load_generators(family, k)) return std::move(*cached);
    }
    std::vector<Key> level{packed::encode(SignedPerm{1})};
    for (std::size_t step = 0; step < k; ++step) level = next_generators(family, level);
    return level;
}

PermSet distance_generators(DistanceFamily family, std::size_t k, const DistanceOptions& options) {
    PermSet out;
    for (Key key : generator_keys(family, k, options)) out.insert(packed::decode(key));
    return out;
}

PermSet pancake_pi(std::size_t k) { return distance_generators(DistanceFamily::PrefixReversal, k); }

PermSet reversal_pi(std::size_t k) { return distance_generators(DistanceFamily::BlockReversal, k); }

LengthHistogram distance_histogram(DistanceFamily family, std::size_t k, const DistanceOptions& options) {
    check_ceiling(family, k, options.limits);
    if (options.cache) {
        if (auto cached = options.cache->load_histogram(family, k)) return *cached;
    }
    const std::vector<Key> generators = generator_keys(family, k, options);
    LengthHistogram histogram = packed_closure_histogram(generators, options.closure);
    if (options.cache) {
        options.cache->save_generators(family, k, generators);
        options.cache->save_histogram(family, k, histogram);
    }
    return histogram;
}

Polynomial distance_polynomial(DistanceFamily family, std::size_t k, const DistanceOptions& options) {
    return from_histogram(distance_histogram(family, k, options));
}

Polynomial exact_distance_polynomial(DistanceFamily family, std::size_t k,
                                     const DistanceOptions& options) {
    Polynomial within = distance_polynomial(family, k, options);
    if (k == 0) return within;
    return within - distance_polynomial(family, k - 1, options);
}

std::string to_string(const Move& move, DistanceFamily family) {
    if (family == DistanceFamily::PrefixReversal) return "f" + std::to_string(move.last);
    return "b" + std::to_string(move.first) + "," + std::to_string(move.last);
}

SignedPerm apply_moves(const SignedPerm& sigma, std::span<const Move> moves) {
    SignedPerm current = sigma;
    for (const Move& m : moves) {
        if (m.is_identity()) continue;
        current = block_reversal(current, m.first, m.last);
    }
    return current;
}

std::vector<Move> sorting_sequence(const SignedPerm& sigma, DistanceFamily family,
                                   const SignedPerm& pi, const InflationVector& v,
                                   std::span<const Move> s) {
    if (inflate(pi, v) != sigma)
        throw std::invalid_argument("sorting_sequence: pi[v] differs from sigma");
    for (const Move& m : s) {
        if (m.first < 1 || m.last < m.first || m.last > pi.size())
            throw std::invalid_argument("sorting_sequence: move " + to_string(m, family) +
                                        " out of range for length " + std::to_string(pi.size()));
        if (family == DistanceFamily::PrefixReversal && m.first != 1)
            throw std::invalid_argument("sorting_sequence: " + to_string(m, family) +
                                        " is not a prefix reversal");
    }
    if (apply_moves(pi, s) != identity(pi.size()))
        throw std::invalid_argument("sorting_sequence: s does not sort pi");

    std::vector<int> blocks = v.sizes();
    std::vector<Move> translated;
    translated.reserve(s.size());
    for (const Move& m : s) {
        std::size_t before = 0;
        for (std::size_t t = 0; t + 1 < m.first; ++t) before += static_cast<std::size_t>(blocks[t]);
        std::size_t through = before;
        for (std::size_t t = m.first - 1; t < m.last; ++t) through += static_cast<std::size_t>(blocks[t]);
        translated.push_back(Move{before + 1, through});
        std::reverse(blocks.begin() + static_cast<std::ptrdiff_t>(m.first - 1),
                     blocks.begin() + static_cast<std::ptrdiff_t>(m.last));
    }
    return translated;
}

}  // namespace gridperm
