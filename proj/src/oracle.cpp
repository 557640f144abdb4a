#include "gridperm/oracle.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

#include "gridperm/distance.hpp"
#include "gridperm/kernels.hpp"

namespace gridperm {

namespace {

void check_n(std::size_t n, const OracleLimits& limits) {
    if (n < 1) throw std::invalid_argument("oracle: n must be positive");
    const std::size_t ceiling = std::min(limits.n_ceiling, OracleLimits::kHardMaximum);
    if (n > ceiling)
        throw ResourceLimitError("oracle: n=" + std::to_string(n) + " exceeds the ceiling n<=" +
                                 std::to_string(ceiling) + " (" + std::to_string(signed_perm_count(n)) +
                                 " states)");
}

std::uint64_t rank_lanes(const packed::Lanes& lanes, std::size_t n) {
    int entries[16];
    for (std::size_t i = 0; i < n; ++i) entries[i] = lanes.v[i];
    return rank_signed_perm(std::span<const int>(entries, n));
}

}  // namespace

std::uint64_t DistanceHistogram::total() const noexcept {
    std::uint64_t sum = 0;
    for (auto c : counts) sum += c;
    return sum;
}

std::uint64_t signed_perm_count(std::size_t n) {
    std::uint64_t count = 1;
    for (std::size_t i = 1; i <= n; ++i) count *= 2 * i;
    return count;
}

std::uint64_t rank_signed_perm(std::span<const int> entries) {
    const std::size_t n = entries.size();
    std::uint64_t perm_rank = 0;
    std::uint64_t signs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int a = entries[i] < 0 ? -entries[i] : entries[i];
        std::uint64_t smaller_later = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const int b = entries[j] < 0 ? -entries[j] : entries[j];
            smaller_later += b < a;
        }
        perm_rank = perm_rank * (n - i) + smaller_later;
        if (entries[i] < 0) signs |= std::uint64_t{1} << i;
    }
    return (perm_rank << n) | signs;
}

DistanceHistogram bfs_histogram(std::size_t n, DistanceFamily family, const OracleLimits& limits) {
    check_n(n, limits);
    const auto& k = kernels::active();
    const std::size_t generators =
        family == DistanceFamily::PrefixReversal ? n : n * (n + 1) / 2;

    constexpr std::uint8_t kUnseen = 0xFF;
    std::vector<std::uint8_t> distance(signed_perm_count(n), kUnseen);

    DistanceHistogram histogram{n, family, {}};
    std::vector<packed::Lanes> frontier{packed::to_lanes(identity(n))};
    distance[rank_lanes(frontier.front(), n)] = 0;
    std::vector<packed::Lanes> images(generators);
    std::uint8_t depth = 0;
    while (!frontier.empty()) {
        histogram.counts.push_back(frontier.size());
        std::vector<packed::Lanes> next;
        for (const auto& state : frontier) {
            if (family == DistanceFamily::PrefixReversal)
                k.prefix_reversals(state, static_cast<int>(n), images.data());
            else
                k.block_reversals(state, static_cast<int>(n), images.data());
            for (const auto& image : images) {
                auto& d = distance[rank_lanes(image, n)];
                if (d != kUnseen) continue;
                d = static_cast<std::uint8_t>(depth + 1);
                next.push_back(image);
            }
        }
        frontier.swap(next);
        ++depth;
    }
    return histogram;
}

std::uint64_t count_within(std::size_t n, std::size_t k, DistanceFamily family,
                           const OracleLimits& limits) {
    const auto histogram = bfs_histogram(n, family, limits);
    std::uint64_t sum = 0;
    for (std::size_t d = 0; d < histogram.counts.size() && d <= k; ++d) sum += histogram.counts[d];
    return sum;
}

bool VerifyReport::all_match() const noexcept { return mismatches() == 0; }

std::size_t VerifyReport::mismatches() const noexcept {
    std::size_t bad = 0;
    for (const auto& row : rows) bad += !row.match;
    return bad;
}

std::string VerifyReport::table() const {
    std::ostringstream out;
    out << "family " << family_name(family) << '\n';
    out << std::setw(3) << "n" << std::setw(4) << "k" << std::setw(14) << "polynomial"
        << std::setw(14) << "bfs" << "  match\n";
    for (const auto& row : rows) {
        out << std::setw(3) << row.n << std::setw(4) << row.k << std::setw(14)
            << row.polynomial_value.get_str() << std::setw(14) << row.bfs_count << "  "
            << (row.match ? "yes" : "NO") << '\n';
    }
    out << rows.size() << " checks, " << mismatches() << " mismatches\n";
    return out.str();
}

std::string VerifyReport::json() const {
    nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json r;
        r["n"] = row.n;
        r["k"] = row.k;
        if (row.polynomial_value.get_den() == 1 && row.polynomial_value.get_num().fits_slong_p())
            r["polynomial_value"] = row.polynomial_value.get_num().get_si();
        else
            r["polynomial_value"] = row.polynomial_value.get_str();
        r["bfs_count"] = row.bfs_count;
        r["match"] = row.match;
        rows_json.push_back(std::move(r));
    }
    return rows_json.dump();
}

VerifyReport verify(DistanceFamily family, std::size_t k_max, std::size_t n_max,
                    const std::function<Polynomial(std::size_t)>& polynomial,
                    const OracleLimits& limits) {
    for (std::size_t n = 1; n <= n_max; ++n) check_n(n, limits);
    std::vector<Polynomial> polys;
    polys.reserve(k_max + 1);
    for (std::size_t k = 0; k <= k_max; ++k) polys.push_back(polynomial(k));

    VerifyReport report{family, {}};
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto histogram = bfs_histogram(n, family, limits);
        std::uint64_t within = 0;
        for (std::size_t k = 0; k <= k_max; ++k) {
            if (k < histogram.counts.size()) within += histogram.counts[k];
            VerifyRow row;
            row.n = n;
            row.k = k;
            row.polynomial_value = polys[k](Rational(static_cast<unsigned long>(n)));
            row.bfs_count = within;
            row.match = row.polynomial_value == Rational(static_cast<unsigned long>(within));
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

VerifyReport verify(DistanceFamily family, std::size_t k_max, std::size_t n_max,
                    const DistanceOptions& options, const OracleLimits& limits) {
    return verify(
        family, k_max, n_max,
        [&](std::size_t k) { return distance_polynomial(family, k, options); }, limits);
}

}  // namespace gridperm
