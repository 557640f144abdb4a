#pragma once

// Naive reference implementations used as test oracles. They share no code
// with the library beyond the SignedPerm value type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gridperm/signed_perm.hpp"

namespace testing_support {

using gridperm::SignedPerm;
using Word = std::vector<int>;

inline Word naive_standardize(const Word& w) {
    std::vector<int> abs_sorted;
    for (int x : w) abs_sorted.push_back(std::abs(x));
    std::sort(abs_sorted.begin(), abs_sorted.end());
    Word out;
    for (int x : w) {
        const int rank =
            static_cast<int>(std::lower_bound(abs_sorted.begin(), abs_sorted.end(), std::abs(x)) -
                             abs_sorted.begin()) + 1;
        out.push_back(x < 0 ? -rank : rank);
    }
    return out;
}

// Every element of B_n in one-line notation.
inline std::vector<Word> all_signed_words(int n) {
    std::vector<Word> out;
    Word base(n);
    std::iota(base.begin(), base.end(), 1);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Word w = base;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u) w[i] = -w[i];
            out.push_back(w);
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

inline std::vector<SignedPerm> all_signed_perms(int n) {
    std::vector<SignedPerm> out;
    for (auto& w : all_signed_words(n)) out.emplace_back(std::move(w));
    return out;
}

// Subsequence search over every index subset.
inline bool naive_contains(const Word& sigma, const Word& pi) {
    const int n = static_cast<int>(sigma.size());
    const int k = static_cast<int>(pi.size());
    if (k > n) return false;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        Word sub;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) sub.push_back(sigma[i]);
        if (naive_standardize(sub) == pi) return true;
    }
    return false;
}

// Entry i becomes a run of v[i] consecutive values placed after the runs of
// every entry with smaller absolute value.
inline Word naive_inflate(const Word& pi, const std::vector<int>& v) {
    Word out;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        int offset = 0;
        for (std::size_t j = 0; j < pi.size(); ++j)
            if (std::abs(pi[j]) < std::abs(pi[i])) offset += v[j];
        if (pi[i] > 0)
            for (int t = 1; t <= v[i]; ++t) out.push_back(offset + t);
        else
            for (int t = v[i]; t >= 1; --t) out.push_back(-(offset + t));
    }
    return out;
}

// Adjacent pair forming an interval order isomorphic to 12 or -2 -1.
inline bool naive_has_monotone_interval(const Word& pi) {
    for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
        const Word pair = naive_standardize({pi[i], pi[i + 1]});
        const bool interval = std::abs(std::abs(pi[i]) - std::abs(pi[i + 1])) == 1;
        if (interval && (pair == Word{1, 2} || pair == Word{-2, -1})) return true;
    }
    return false;
}

// All vectors of `parts` nonnegative (or positive) integers summing to total.
inline void for_each_composition(int total, int parts, bool positive,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> v(parts, 0);
    const int low = positive ? 1 : 0;
    std::function<void(int, int)> rec = [&](int index, int remaining) {
        if (index == parts - 1) {
            if (remaining < low) return;
            v[index] = remaining;
            fn(v);
            return;
        }
        for (int x = low; x <= remaining - low * (parts - 1 - index); ++x) {
            v[index] = x;
            rec(index + 1, remaining - x);
        }
    };
    if (parts == 0) {
        if (total == 0) fn(v);
        return;
    }
    rec(0, total);
}

// Brute-force |{σ ∈ B_n : σ = π[v] for some π ∈ generators, v >= 0}|.
inline std::size_t brute_grid_count(const std::vector<Word>& generators, int n) {
    std::set<Word> hits;
    for (const auto& pi : generators)
        for_each_composition(n, static_cast<int>(pi.size()), false,
                             [&](const std::vector<int>& v) { hits.insert(naive_inflate(pi, v)); });
    return hits.size();
}

inline Word random_signed_word(std::mt19937_64& rng, int n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    for (int& x : w)
        if (rng() & 1u) x = -x;
    return w;
}

inline std::string words_to_string(const std::vector<Word>& ws) {
    std::string s = "{";
    for (const auto& w : ws) {
        s += " [";
        for (int x : w) s += std::to_string(x) + " ";
        s += "]";
    }
    return s + " }";
}

}  // namespace testing_support
