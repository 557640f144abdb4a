#include "gridperm/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gridperm/signed_perm.hpp"

namespace gridperm {

namespace fs = std::filesystem;

namespace {

std::string header(std::string_view kind, DistanceFamily family, std::size_t k) {
    std::ostringstream out;
    out << "# gridperm " << kind << " v" << DistanceCache::kFormatVersion
        << " family=" << family_name(family) << " k=" << k;
    return out.str();
}

// Writes through a temporary file so readers never see a partial file.
template <typename Body>
void write_atomically(const fs::path& target, Body&& body) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    if (ec) {
        std::cerr << "gridperm: cannot create cache directory " << target.parent_path() << ": "
                  << ec.message() << '\n';
        return;
    }
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            std::cerr << "gridperm: cannot write cache file " << tmp << '\n';
            return;
        }
        body(out);
        if (!out) {
            std::cerr << "gridperm: failed writing cache file " << tmp << '\n';
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) std::cerr << "gridperm: cannot finalize cache file " << target << ": " << ec.message() << '\n';
}

}  // namespace

std::optional<fs::path> DistanceCache::default_root() {
    if (const char* dir = std::getenv("GRIDPERM_CACHE_DIR"); dir && *dir) return fs::path(dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "gridperm";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "gridperm";
    return std::nullopt;
}

fs::path DistanceCache::generators_path(DistanceFamily family, std::size_t k) const {
    return root_ / std::string(family_name(family)) / ("pi_" + std::to_string(k) + ".perms");
}

fs::path DistanceCache::histogram_path(DistanceFamily family, std::size_t k) const {
    return root_ / std::string(family_name(family)) / ("S_" + std::to_string(k) + ".hist");
}

std::optional<std::vector<packed::Key>> DistanceCache::load_generators(DistanceFamily family,
                                                                       std::size_t k) const {
    std::ifstream in(generators_path(family, k));
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != header("permset", family, k)) return std::nullopt;
    std::vector<packed::Key> keys;
    try {
        while (std::getline(in, line)) keys.push_back(packed::encode(SignedPerm::parse(line)));
    } catch (const std::exception& e) {
        std::cerr << "gridperm: ignoring corrupt cache file " << generators_path(family, k) << ": "
                  << e.what() << '\n';
        return std::nullopt;
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

void DistanceCache::save_generators(DistanceFamily family, std::size_t k,
                                    std::span<const packed::Key> keys) const {
    std::vector<SignedPerm> perms;
    perms.reserve(keys.size());
    for (packed::Key key : keys) perms.push_back(packed::decode(key));
    std::vector<std::string> lines;
    lines.reserve(perms.size());
    for (const SignedPerm& pi : perms) lines.push_back(pi.to_string());
    std::vector<std::size_t> order(lines.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (perms[a].size() != perms[b].size()) return perms[a].size() < perms[b].size();
        return lines[a] < lines[b];
    });
    write_atomically(generators_path(family, k), [&](std::ostream& out) {
        out << header("permset", family, k) << '\n';
        for (std::size_t i : order) out << lines[i] << '\n';
    });
}

std::optional<LengthHistogram> DistanceCache::load_histogram(DistanceFamily family, std::size_t k) const {
    std::ifstream in(histogram_path(family, k));
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != header("hist", family, k)) return std::nullopt;
    LengthHistogram histogram;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::size_t m = 0;
        std::uint64_t count = 0;
        if (!(fields >> m >> count) || count == 0) {
            std::cerr << "gridperm: ignoring corrupt cache file " << histogram_path(family, k) << '\n';
            return std::nullopt;
        }
        if (m == 0)
            histogram.has_epsilon = true;
        else
            histogram.counts[m] = count;
    }
    return histogram;
}

void DistanceCache::save_histogram(DistanceFamily family, std::size_t k,
                                   const LengthHistogram& histogram) const {
    write_atomically(histogram_path(family, k), [&](std::ostream& out) {
        out << header("hist", family, k) << '\n';
        if (histogram.has_epsilon) out << "0 1\n";
        for (const auto& [m, c] : histogram.counts) out << m << ' ' << c << '\n';
    });
}

}  // namespace gridperm
