#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridperm/signed_perm.hpp"

namespace gridperm {

// A finite set of signed permutations, iterated in canonical order
// (length, then canonical encoding).
class PermSet {
public:
    using container = std::set<SignedPerm, CanonicalOrder>;
    using const_iterator = container::const_iterator;

    PermSet() = default;
    PermSet(std::initializer_list<SignedPerm> members) : members_(members) {}
    template <typename It>
    PermSet(It first, It last) : members_(first, last) {}

    bool insert(SignedPerm pi) { return members_.insert(std::move(pi)).second; }
    bool contains(const SignedPerm& pi) const { return members_.count(pi) != 0; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    std::size_t max_length() const noexcept;

    const_iterator begin() const noexcept { return members_.begin(); }
    const_iterator end() const noexcept { return members_.end(); }

    friend bool operator==(const PermSet& a, const PermSet& b) { return a.members_ == b.members_; }

private:
    container members_;
};

// A malformed line in a permutation file; carries the 1-based line number.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t line, const std::string& reason)
        : std::invalid_argument("line " + std::to_string(line) + ": " + reason), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// File format: one canonical encoding per line, canonical order. Lines
// starting with '#' are headers and ignored. An empty line denotes ε and
// may only appear as the first non-header line.
void write_perm_set(std::ostream& out, const PermSet& set);
PermSet read_perm_set(std::istream& in);

}  // namespace gridperm
