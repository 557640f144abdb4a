#include "gridperm/signed_perm.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace gridperm {

namespace {

void check_word(const std::vector<int>& entries) {
    std::vector<int> seen;
    seen.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] == 0)
            throw std::invalid_argument("zero entry at position " + std::to_string(i + 1));
        seen.push_back(std::abs(entries[i]));
    }
    std::sort(seen.begin(), seen.end());
    auto dup = std::adjacent_find(seen.begin(), seen.end());
    if (dup != seen.end())
        throw std::invalid_argument("repeated absolute value " + std::to_string(*dup));
}

}  // namespace

SignedWord::SignedWord(std::vector<int> entries) : entries_(std::move(entries)) {
    check_word(entries_);
}

SignedPerm::SignedPerm(std::vector<int> entries) : entries_(std::move(entries)) {
    check_word(entries_);
    const auto n = static_cast<int>(entries_.size());
    for (int e : entries_) {
        if (std::abs(e) > n)
            throw std::invalid_argument("non-standard values: |" + std::to_string(e) +
                                        "| exceeds length " + std::to_string(n));
    }
}

SignedPerm SignedPerm::parse(std::string_view text) {
    std::vector<int> entries;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' || text[i] == '\n') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r' &&
               text[j] != '\n')
            ++j;
        std::string_view token = text.substr(i, j - i);
        std::string_view digits = token;
        if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size())
            throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
        entries.push_back(value);
        i = j;
    }
    return SignedPerm(std::move(entries));
}

int SignedPerm::at(std::size_t position) const {
    if (position < 1 || position > entries_.size())
        throw std::out_of_range("position " + std::to_string(position) + " outside 1.." +
                                std::to_string(entries_.size()));
    return entries_[position - 1];
}

std::string SignedPerm::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(entries_[i]);
    }
    return out;
}

bool CanonicalOrder::operator()(const SignedPerm& a, const SignedPerm& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.to_string() < b.to_string();
}

std::size_t SignedPermHash::operator()(const SignedPerm& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull ^ p.size();
    for (int e : p.entries()) {
        h ^= static_cast<std::size_t>(static_cast<unsigned>(e));
        h *= 0x100000001b3ull;
    }
    return h;
}

InflationVector::InflationVector(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (sizes_[i] < 0)
            throw std::invalid_argument("negative inflation component at position " +
                                        std::to_string(i + 1));
    }
}

InflationVector InflationVector::ones(std::size_t dimension) {
    return InflationVector(std::vector<int>(dimension, 1));
}

bool InflationVector::is_filling() const noexcept {
    return std::all_of(sizes_.begin(), sizes_.end(), [](int s) { return s >= 1; });
}

long long InflationVector::total() const noexcept {
    return std::accumulate(sizes_.begin(), sizes_.end(), 0LL);
}

std::string InflationVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(sizes_[i]);
    }
    return out;
}

SignedPerm identity(std::size_t n) {
    std::vector<int> entries(n);
    std::iota(entries.begin(), entries.end(), 1);
    return SignedPerm(std::move(entries), SignedPerm::trusted_tag{});
}

SignedPerm standardize(const SignedWord& word) {
    return standardize_unchecked(word.entries());
}

SignedPerm standardize_unchecked(std::span<const int> word) {
    std::vector<std::size_t> order(word.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(word[a]) < std::abs(word[b]);
    });
    std::vector<int> out(word.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const std::size_t i = order[rank];
        const int value = static_cast<int>(rank + 1);
        out[i] = word[i] < 0 ? -value : value;
    }
    return SignedPerm(std::move(out), SignedPerm::trusted_tag{});
}

namespace {

// Depth-first embedding of pi into sigma, one entry of pi at a time.
bool embed(std::span<const int> sigma, std::span<const int> pi, std::vector<std::size_t>& chosen,
           std::size_t next_from) {
    const std::size_t j = chosen.size();
    if (j == pi.size()) return true;
    const std::size_t last_start = sigma.size() - (pi.size() - j);
    for (std::size_t i = next_from; i <= last_start; ++i) {
        if ((sigma[i] < 0) != (pi[j] < 0)) continue;
        bool consistent = true;
        for (std::size_t l = 0; l < j; ++l) {
            const bool pi_less = std::abs(pi[l]) < std::abs(pi[j]);
            const bool sigma_less = std::abs(sigma[chosen[l]]) < std::abs(sigma[i]);
            if (pi_less != sigma_less) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;
        chosen.push_back(i);
        if (embed(sigma, pi, chosen, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool contains(const SignedPerm& sigma, const SignedPerm& pi) {
    if (pi.size() > sigma.size()) return false;
    if (pi.size() == sigma.size()) return pi == sigma;
    std::vector<std::size_t> chosen;
    chosen.reserve(pi.size());
    return embed(sigma.view(), pi.view(), chosen, 0);
}

SignedPerm delete_entry(const SignedPerm& pi, std::size_t position) {
    if (position < 1 || position > pi.size())
        throw std::out_of_range("delete position " + std::to_string(position) + " outside 1.." +
                                std::to_string(pi.size()));
    const int removed = std::abs(pi[position - 1]);
    std::vector<int> out;
    out.reserve(pi.size() - 1);
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (i == position - 1) continue;
        int e = pi[i];
        if (std::abs(e) > removed) e += e > 0 ? -1 : 1;
        out.push_back(e);
    }
    return SignedPerm(std::move(out), SignedPerm::trusted_tag{});
}

SignedPerm inflate(const SignedPerm& pi, const InflationVector& v) {
    if (v.size() != pi.size())
        throw std::invalid_argument("inflation vector has " + std::to_string(v.size()) +
                                    " components for a permutation of length " +
                                    std::to_string(pi.size()));
    // offset[a] = number of values taken by blocks whose source |entry| < a
    std::vector<int> size_by_abs(pi.size() + 1, 0);
    for (std::size_t i = 0; i < pi.size(); ++i) size_by_abs[std::abs(pi[i])] = v[i];
    std::vector<int> offset(pi.size() + 1, 0);
    for (std::size_t a = 2; a <= pi.size(); ++a) offset[a] = offset[a - 1] + size_by_abs[a - 1];

    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(v.total()));
    for (std::size_t i = 0; i < pi.size(); ++i) {
        const int base = offset[std::abs(pi[i])];
        const int len = v[i];
        if (pi[i] > 0) {
            for (int t = 1; t <= len; ++t) out.push_back(base + t);
        } else {
            for (int t = len; t >= 1; --t) out.push_back(-(base + t));
        }
    }
    return SignedPerm(std::move(out), SignedPerm::trusted_tag{});
}

bool is_compact(const SignedPerm& pi) {
    for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
        if (pi[i + 1] - pi[i] == 1) return false;
    }
    return true;
}

Compactification compactify(const SignedPerm& sigma) {
    std::vector<int> heads;
    std::vector<int> sizes;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (i > 0 && sigma[i] - sigma[i - 1] == 1) {
            ++sizes.back();
        } else {
            heads.push_back(sigma[i]);
            sizes.push_back(1);
        }
    }
    return {standardize_unchecked(heads), InflationVector(std::move(sizes))};
}

SignedPerm prefix_reversal(const SignedPerm& pi, std::size_t i) {
    if (i < 1 || i > pi.size())
        throw std::out_of_range("prefix reversal index " + std::to_string(i) + " outside 1.." +
                                std::to_string(pi.size()));
    return block_reversal(pi, 1, i);
}

SignedPerm block_reversal(const SignedPerm& pi, std::size_t i, std::size_t j) {
    if (i < 1 || i > j || j > pi.size())
        throw std::out_of_range("block reversal (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") invalid for length " + std::to_string(pi.size()));
    std::vector<int> out = pi.entries();
    std::reverse(out.begin() + static_cast<std::ptrdiff_t>(i - 1),
                 out.begin() + static_cast<std::ptrdiff_t>(j));
    for (std::size_t t = i - 1; t < j; ++t) out[t] = -out[t];
    return SignedPerm(std::move(out), SignedPerm::trusted_tag{});
}

}  // namespace gridperm
