#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridperm/family.hpp"
#include "gridperm/grid_class.hpp"
#include "gridperm/packed.hpp"
#include "gridperm/perm_set.hpp"
#include "gridperm/polynomial.hpp"

namespace gridperm {

class DistanceCache;

// A request refused because it exceeds a configured resource ceiling.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DistanceLimits {
    std::size_t pancake_k_ceiling = 10;
    std::size_t reversal_k_ceiling = 5;

    std::size_t ceiling(DistanceFamily family) const noexcept {
        return family == DistanceFamily::PrefixReversal ? pancake_k_ceiling : reversal_k_ceiling;
    }
};

struct DistanceOptions {
    DistanceLimits limits;
    ClosureOptions closure;
    // Optional on-disk cache for generator sets and histograms.
    const DistanceCache* cache = nullptr;
};

// Length of every member of the k-th generator set.
constexpr std::size_t generator_length(DistanceFamily family, std::size_t k) noexcept {
    return family == DistanceFamily::PrefixReversal ? k + 1 : 2 * k + 1;
}

// One recursion step, deduplicated and sorted by key:
//   prefix: f_i(π[e_i + 1]) for 1 <= i <= len(π)
//   block:  b_{i+1,j+1}(π[e_i + e_j + 1]) for 1 <= i <= j <= len(π)
std::vector<packed::Key> next_generators(DistanceFamily family, std::span<const packed::Key> current);

// Packed generator set Π_k, starting from Π_0 = {1}. Enforces the ceiling.
std::vector<packed::Key> generator_keys(DistanceFamily family, std::size_t k,
                                        const DistanceOptions& options = {});

PermSet distance_generators(DistanceFamily family, std::size_t k, const DistanceOptions& options = {});
PermSet pancake_pi(std::size_t k);
PermSet reversal_pi(std::size_t k);

// Compact class representatives of Grid(Π_k) by length.
LengthHistogram distance_histogram(DistanceFamily family, std::size_t k,
                                   const DistanceOptions& options = {});

// Number of elements of B_n within distance k of the identity, for n >= 1.
Polynomial distance_polynomial(DistanceFamily family, std::size_t k,
                               const DistanceOptions& options = {});

// Number of elements at distance exactly k: the k-th minus the (k-1)-th
// distance polynomial (k = 0 gives the constant 1).
Polynomial exact_distance_polynomial(DistanceFamily family, std::size_t k,
                                     const DistanceOptions& options = {});

// A reversal of positions first..last (1-based, inclusive). Prefix
// reversal f_i is {1, i}. A move with last < first is the identity; these
// arise when translating through empty blocks.
struct Move {
    std::size_t first = 1;
    std::size_t last = 0;

    static Move prefix(std::size_t i) { return {1, i}; }
    static Move block(std::size_t i, std::size_t j) { return {i, j}; }
    bool is_identity() const noexcept { return last < first; }

    friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& move, DistanceFamily family);

SignedPerm apply_moves(const SignedPerm& sigma, std::span<const Move> moves);

// Given sigma = pi[v] and a sequence s sorting pi, builds the sequence of the
// same length that sorts sigma: each reversal of blocks i..j becomes the
// reversal of the positions those blocks occupy, after which the blocks of
// v are reversed the same way. Throws std::invalid_argument when
// pi[v] != sigma, when s does not sort pi, or when a move does not belong to
// the family.
std::vector<Move> sorting_sequence(const SignedPerm& sigma, DistanceFamily family,
                                   const SignedPerm& pi, const InflationVector& v,
                                   std::span<const Move> s);

}  // namespace gridperm
