#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gridperm/family.hpp"
#include "gridperm/polynomial.hpp"
#include "gridperm/signed_perm.hpp"

namespace gridperm {

struct DistanceOptions;

// Breadth-first ground truth over the Cayley graph of B_n.
struct OracleLimits {
    // Default 7 (645,120 states). 8 (10,321,920 states) must be requested.
    std::size_t n_ceiling = 7;
    static constexpr std::size_t kHardMaximum = 8;
};

struct DistanceHistogram {
    std::size_t n = 0;
    DistanceFamily family = DistanceFamily::PrefixReversal;
    // counts[d] = number of elements at distance exactly d.
    std::vector<std::uint64_t> counts;

    std::size_t diameter() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
    std::uint64_t total() const noexcept;
};

// 2^n * n!
std::uint64_t signed_perm_count(std::size_t n);

// Dense index of an element of B_n in [0, 2^n n!).
std::uint64_t rank_signed_perm(std::span<const int> entries);

DistanceHistogram bfs_histogram(std::size_t n, DistanceFamily family, const OracleLimits& limits = {});

std::uint64_t count_within(std::size_t n, std::size_t k, DistanceFamily family,
                           const OracleLimits& limits = {});

struct VerifyRow {
    std::size_t n = 0;
    std::size_t k = 0;
    Rational polynomial_value;
    std::uint64_t bfs_count = 0;
    bool match = false;
};

struct VerifyReport {
    DistanceFamily family = DistanceFamily::PrefixReversal;
    std::vector<VerifyRow> rows;

    bool all_match() const noexcept;
    std::size_t mismatches() const noexcept;
    std::string table() const;
    // JSON array of {n, k, polynomial_value, bfs_count, match}.
    std::string json() const;
};

// Compares polynomial(k)(n) with the BFS count for 1 <= n <= n_max and
// 0 <= k <= k_max. Mismatches are reported, not thrown.
VerifyReport verify(DistanceFamily family, std::size_t k_max, std::size_t n_max,
                    const std::function<Polynomial(std::size_t)>& polynomial,
                    const OracleLimits& limits = {});

VerifyReport verify(DistanceFamily family, std::size_t k_max, std::size_t n_max,
                    const DistanceOptions& options, const OracleLimits& limits = {});

}  // namespace gridperm
