#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gridperm {

class InflationVector;

// A sequence of nonzero signed integers with pairwise distinct absolute
// values. Not necessarily standard; standardize() turns it into a SignedPerm.
class SignedWord {
public:
    SignedWord() = default;
    explicit SignedWord(std::vector<int> entries);

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::vector<int> entries_;
};

// Element of B_n written in one-line notation: entry i (1-based) is the
// signed image of i. Absolute values are exactly {1, ..., n}. The empty
// permutation is a valid value of length 0.
class SignedPerm {
public:
    SignedPerm() = default;

    // Throws std::invalid_argument unless `entries` is a standard signed
    // permutation.
    explicit SignedPerm(std::vector<int> entries);
    SignedPerm(std::initializer_list<int> entries)
        : SignedPerm(std::vector<int>(entries)) {}

    // Parses the canonical text encoding ("-2 1 3"; empty string is ε).
    static SignedPerm parse(std::string_view text);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    // 1-based access, matching the notation used throughout the interfaces.
    int at(std::size_t position) const;
    int operator[](std::size_t index0) const noexcept { return entries_[index0]; }

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::span<const int> view() const noexcept { return entries_; }

    // Canonical encoding: signed decimals separated by single spaces.
    std::string to_string() const;

    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

private:
    struct trusted_tag {};
    SignedPerm(std::vector<int> entries, trusted_tag) noexcept
        : entries_(std::move(entries)) {}

    friend SignedPerm standardize(const SignedWord& word);
    friend SignedPerm standardize_unchecked(std::span<const int> word);
    friend SignedPerm identity(std::size_t n);
    friend SignedPerm delete_entry(const SignedPerm& pi, std::size_t position);
    friend SignedPerm inflate(const SignedPerm& pi, const InflationVector& v);
    friend SignedPerm block_reversal(const SignedPerm& pi, std::size_t i, std::size_t j);
    friend SignedPerm from_packed_entries(std::vector<int> entries) noexcept;

    std::vector<int> entries_;
};

// Orders by length first, then by byte-wise comparison of the canonical
// encoding. This is the serialization order of every permutation file.
struct CanonicalOrder {
    bool operator()(const SignedPerm& a, const SignedPerm& b) const;
};

struct SignedPermHash {
    std::size_t operator()(const SignedPerm& p) const noexcept;
};

// Block sizes used to inflate a permutation, one per entry.
class InflationVector {
public:
    InflationVector() = default;
    explicit InflationVector(std::vector<int> sizes);
    InflationVector(std::initializer_list<int> sizes)
        : InflationVector(std::vector<int>(sizes)) {}

    // The all-ones vector of the given dimension.
    static InflationVector ones(std::size_t dimension);

    const std::vector<int>& sizes() const noexcept { return sizes_; }
    std::size_t size() const noexcept { return sizes_.size(); }
    int operator[](std::size_t index0) const noexcept { return sizes_[index0]; }

    // Every component is at least 1.
    bool is_filling() const noexcept;
    long long total() const noexcept;

    std::string to_string() const;

    friend bool operator==(const InflationVector&, const InflationVector&) = default;

private:
    std::vector<int> sizes_;
};

SignedPerm identity(std::size_t n);

SignedPerm standardize(const SignedWord& word);

// Same as standardize() but skips validation. The caller guarantees the
// input has nonzero entries with distinct absolute values.
SignedPerm standardize_unchecked(std::span<const int> word);

// True iff sigma has a subsequence order isomorphic to pi with matching signs.
bool contains(const SignedPerm& sigma, const SignedPerm& pi);

// Removes the entry at 1-based `position` and standardizes.
SignedPerm delete_entry(const SignedPerm& pi, std::size_t position);

// Replaces entry i by a monotone run of v(i) consecutive absolute values,
// increasing and positive for positive entries, decreasing and negative for
// negative ones.
SignedPerm inflate(const SignedPerm& pi, const InflationVector& v);

// No adjacent pair with pi(i+1) - pi(i) == 1.
bool is_compact(const SignedPerm& pi);

struct Compactification {
    SignedPerm core;
    InflationVector fill;
};

// The unique compact permutation filled by sigma, with its filling vector.
Compactification compactify(const SignedPerm& sigma);

// Reverses and negates the first `i` entries (1 <= i <= len).
SignedPerm prefix_reversal(const SignedPerm& pi, std::size_t i);

// Reverses and negates entries i..j (1 <= i <= j <= len).
SignedPerm block_reversal(const SignedPerm& pi, std::size_t i, std::size_t j);

}  // namespace gridperm
