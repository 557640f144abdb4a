#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "gridperm/family.hpp"
#include "gridperm/length_histogram.hpp"
#include "gridperm/packed.hpp"

namespace gridperm {

// Layout under the root directory:
//   {family}/pi_{k}.perms  generator set, permutation-file format
//   {family}/S_{k}.hist    length histogram, "m count" lines ("0 1" for ε)
// Both start with a "# gridperm <kind> v1 family=<name> k=<k>" header.
// Files with a different header are ignored and rewritten.
class DistanceCache {
public:
    static constexpr int kFormatVersion = 1;

    explicit DistanceCache(std::filesystem::path root) : root_(std::move(root)) {}

    // $GRIDPERM_CACHE_DIR, else $XDG_CACHE_HOME/gridperm, else
    // $HOME/.cache/gridperm. Empty when none of these is set.
    static std::optional<std::filesystem::path> default_root();

    const std::filesystem::path& root() const noexcept { return root_; }
    std::filesystem::path generators_path(DistanceFamily family, std::size_t k) const;
    std::filesystem::path histogram_path(DistanceFamily family, std::size_t k) const;

    std::optional<std::vector<packed::Key>> load_generators(DistanceFamily family, std::size_t k) const;
    void save_generators(DistanceFamily family, std::size_t k, std::span<const packed::Key> keys) const;

    std::optional<LengthHistogram> load_histogram(DistanceFamily family, std::size_t k) const;
    void save_histogram(DistanceFamily family, std::size_t k, const LengthHistogram& histogram) const;

private:
    std::filesystem::path root_;
};

}  // namespace gridperm
