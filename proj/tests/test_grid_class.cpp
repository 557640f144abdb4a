#include <doctest.h>

#include "gridperm/grid_class.hpp"
#include "gridperm/packed.hpp"
#include "support.hpp"

using namespace gridperm;
using namespace testing_support;

namespace {

SignedPerm P(std::string_view s) { return SignedPerm::parse(s); }

PermSet set_of(std::initializer_list<std::string_view> items) {
    PermSet s;
    for (auto item : items) s.insert(P(item));
    return s;
}

// Closure by brute force: every subsequence of every generator, standardized,
// filtered to compact ones.
PermSet naive_closure(const PermSet& generators) {
    std::set<Word> found{Word{}};
    for (const auto& g : generators) {
        const Word& w = g.entries();
        const int n = static_cast<int>(w.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Word sub;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u) sub.push_back(w[i]);
            sub = naive_standardize(sub);
            if (!naive_has_monotone_interval(sub)) found.insert(sub);
        }
    }
    PermSet out;
    for (const auto& w : found) out.insert(SignedPerm(w));
    return out;
}

PermSet random_generators(std::mt19937_64& rng, int max_length, int count) {
    PermSet s;
    for (int i = 0; i < count; ++i) s.insert(SignedPerm(random_signed_word(rng, 1 + static_cast<int>(rng() % max_length))));
    return s;
}

}  // namespace

TEST_CASE("worked example closure") {
    const PermSet s = complete_and_compact(set_of({"-2 1 3"}));
    CHECK(s == set_of({"", "1", "-1", "-1 2", "-2 1", "-2 1 3"}));
    CHECK(complete_and_compact_reference(set_of({"-2 1 3"})) == s);
    const LengthHistogram h = length_histogram(s);
    CHECK(h.has_epsilon);
    CHECK(h.counts == std::map<std::size_t, std::uint64_t>{{1, 2}, {2, 2}, {3, 1}});
    CHECK(enumerate(set_of({"-2 1 3"})) == Polynomial({1, Rational(1, 2), Rational(1, 2)}));
}

TEST_CASE("closure edge cases") {
    CHECK(complete_and_compact(set_of({""})) == set_of({""}));
    CHECK(complete_and_compact(set_of({"1 2 3"})) == set_of({"", "1"}));
    CHECK(enumerate(set_of({""})).is_zero());
    CHECK(enumerate(set_of({"1"})) == Polynomial::constant(1));
    CHECK(length_histogram(set_of({""})) == LengthHistogram{{}, true});
    CHECK(length_histogram(set_of({"1", "-1"})) == LengthHistogram{{{1, 2}}, false});
    for (std::size_t m = 1; m <= 14; ++m) CHECK(complete_and_compact(PermSet{identity(m)}) == set_of({"", "1"}));
}

TEST_CASE("grid membership") {
    const PermSet s = complete_and_compact(set_of({"-2 1 3"}));
    CHECK(grid_member(P("-3 -2 -1 4 5 6"), s));
    CHECK(grid_member(P(""), s));
    CHECK_FALSE(grid_member(P("2 1"), s));
}

TEST_CASE("packed and reference closures agree with subsequence enumeration") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const PermSet g = random_generators(rng, 8, 1 + static_cast<int>(rng() % 4));
        const PermSet expected = naive_closure(g);
        CHECK(complete_and_compact_reference(g) == expected);
        CHECK(complete_and_compact(g) == expected);
    }
}

TEST_CASE("closure output is compact, downward closed and idempotent") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const PermSet s = complete_and_compact(random_generators(rng, 9, 3));
        CHECK(s.contains(SignedPerm{}));
        for (const auto& pi : s) {
            CHECK(is_compact(pi));
            for (std::size_t i = 1; i <= pi.size(); ++i) {
                const SignedPerm child = delete_entry(pi, i);
                if (is_compact(child)) CHECK(s.contains(child));
            }
        }
        CHECK(complete_and_compact(s) == s);
    }
}

TEST_CASE("closure beyond the packed width falls back to the reference") {
    std::vector<int> long_perm;
    for (int i = 1; i <= 14; ++i) long_perm.push_back(i % 2 ? -i : i);
    const PermSet g{SignedPerm(long_perm)};
    const PermSet s = complete_and_compact(g);
    CHECK(s == complete_and_compact_reference(g));
    CHECK(s.max_length() == 14);
}

TEST_CASE("closure is deterministic across worker counts") {
    std::mt19937_64 rng(31);
    PermSet g = random_generators(rng, 11, 40);
    std::vector<packed::Key> keys;
    for (const auto& pi : g) keys.push_back(packed::encode(pi));
    const PermSet single = complete_and_compact(g, {1});
    const LengthHistogram h1 = packed_closure_histogram(keys, {1});
    for (unsigned workers : {2u, 3u, 8u}) {
        CHECK(complete_and_compact(g, {workers}) == single);
        CHECK(packed_closure_histogram(keys, {workers}) == h1);
    }
    CHECK(length_histogram(single) == h1);
}

TEST_CASE("packed closure streams levels from longest to shortest") {
    const packed::Key g = packed::encode(P("-2 1 3"));
    std::vector<std::size_t> lengths;
    std::size_t total = 0;
    packed_closure(std::span<const packed::Key>(&g, 1), {}, [&](std::size_t len, std::span<const packed::Key> keys) {
        lengths.push_back(len);
        CHECK(std::is_sorted(keys.begin(), keys.end()));
        total += keys.size();
    });
    CHECK(lengths == std::vector<std::size_t>{3, 2, 1, 0});
    CHECK(total == 6);
}

TEST_CASE("enumeration counts the grid class") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        const PermSet g = random_generators(rng, 5, 1 + static_cast<int>(rng() % 3));
        std::vector<Word> words;
        for (const auto& pi : g) words.push_back(pi.entries());
        const Polynomial p = enumerate(g);
        for (int n = 1; n <= 6; ++n)
            CHECK_MESSAGE(p(Rational(n)) == Rational(static_cast<long>(brute_grid_count(words, n))),
                          words_to_string(words) << " n=" << n);
    }
}
