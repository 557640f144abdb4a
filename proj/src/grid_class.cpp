#include "gridperm/grid_class.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <deque>
#include <iterator>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "gridperm/kernels.hpp"

namespace gridperm {

using packed::Key;

namespace {

// Sorted, deduplicated keys of one length plus an unsorted tail that is
// folded in whenever it outgrows the sorted part.
class Bucket {
public:
    void append(std::span<const Key> keys) {
        pending_.insert(pending_.end(), keys.begin(), keys.end());
        if (pending_.size() > std::max(settled_.size(), kMinPending)) settle();
    }

    void settle() {
        if (pending_.empty()) return;
        std::sort(pending_.begin(), pending_.end());
        pending_.erase(std::unique(pending_.begin(), pending_.end()), pending_.end());
        if (settled_.empty()) {
            settled_.swap(pending_);
        } else {
            std::vector<Key> merged;
            merged.reserve(settled_.size() + pending_.size());
            std::set_union(settled_.begin(), settled_.end(), pending_.begin(), pending_.end(),
                           std::back_inserter(merged));
            settled_.swap(merged);
        }
        pending_.clear();
        pending_.shrink_to_fit();
    }

    const std::vector<Key>& settled() const noexcept { return settled_; }

    void release() {
        std::vector<Key>().swap(settled_);
        std::vector<Key>().swap(pending_);
    }

private:
    static constexpr std::size_t kMinPending = std::size_t{1} << 20;
    std::vector<Key> settled_;
    std::vector<Key> pending_;
};

using Buckets = std::array<Bucket, packed::kMaxLength + 1>;

constexpr std::size_t kChunk = std::size_t{1} << 14;

void expand_level(std::span<const Key> level, Buckets& buckets, unsigned workers) {
    const auto& k = kernels::active();
    std::mutex sink;
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        std::array<std::vector<Key>, packed::kMaxLength + 1> local;
        Key children[16];
        auto flush = [&] {
            std::lock_guard<std::mutex> lock(sink);
            for (std::size_t len = 0; len < local.size(); ++len) {
                if (local[len].empty()) continue;
                buckets[len].append(local[len]);
                local[len].clear();
            }
        };
        while (true) {
            const std::size_t begin = next.fetch_add(kChunk);
            if (begin >= level.size()) break;
            const std::size_t end = std::min(level.size(), begin + kChunk);
            for (std::size_t p = begin; p < end; ++p) {
                const int count = k.expand_cores(level[p], children);
                for (int c = 0; c < count; ++c)
                    local[packed::length(children[c])].push_back(children[c]);
            }
            flush();
        }
    };

    if (workers <= 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

}  // namespace

void packed_closure(std::span<const Key> generators, const ClosureOptions& options,
                    const std::function<void(std::size_t, std::span<const Key>)>& on_level) {
    const auto& k = kernels::active();
    Buckets buckets;
    const Key epsilon = 0;
    buckets[0].append(std::span<const Key>(&epsilon, 1));
    for (Key g : generators) {
        packed::Lanes lanes;
        packed::Lanes core;
        const int len = k.unpack(g, lanes);
        const int core_len = k.compact_core(lanes, len, core);
        const Key key = k.pack(core, core_len);
        buckets[static_cast<std::size_t>(core_len)].append(std::span<const Key>(&key, 1));
    }
    for (std::size_t len = packed::kMaxLength + 1; len-- > 0;) {
        Bucket& bucket = buckets[len];
        bucket.settle();
        const auto& level = bucket.settled();
        if (level.empty()) continue;
        on_level(len, level);
        if (len > 0) expand_level(level, buckets, options.workers);
        bucket.release();
    }
}

LengthHistogram packed_closure_histogram(std::span<const Key> generators,
                                         const ClosureOptions& options) {
    LengthHistogram histogram;
    packed_closure(generators, options, [&](std::size_t len, std::span<const Key> keys) {
        if (len == 0)
            histogram.has_epsilon = true;
        else
            histogram.counts[len] = keys.size();
    });
    return histogram;
}

PermSet complete_and_compact_reference(const PermSet& generators) {
    std::unordered_set<SignedPerm, SignedPermHash> visited;
    std::deque<SignedPerm> queue;
    auto visit = [&](const SignedPerm& pi) {
        if (visited.insert(pi).second) queue.push_back(pi);
    };
    visit(SignedPerm{});
    for (const SignedPerm& g : generators) visit(g);

    PermSet out;
    while (!queue.empty()) {
        SignedPerm tau = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 1; i <= tau.size(); ++i) visit(delete_entry(tau, i));
        if (is_compact(tau)) out.insert(std::move(tau));
    }
    return out;
}

namespace {

bool packable(const PermSet& set) { return packed::fits(set.max_length()); }

std::vector<Key> encode_all(const PermSet& set) {
    std::vector<Key> keys;
    keys.reserve(set.size());
    for (const SignedPerm& pi : set) keys.push_back(packed::encode(pi));
    return keys;
}

}  // namespace

PermSet complete_and_compact(const PermSet& generators, const ClosureOptions& options) {
    if (!packable(generators)) return complete_and_compact_reference(generators);
    PermSet out;
    const auto keys = encode_all(generators);
    packed_closure(keys, options, [&](std::size_t, std::span<const Key> level) {
        for (Key key : level) out.insert(packed::decode(key));
    });
    return out;
}

LengthHistogram length_histogram(const PermSet& compact_set) {
    LengthHistogram histogram;
    for (const SignedPerm& pi : compact_set) {
        if (pi.empty())
            histogram.has_epsilon = true;
        else
            ++histogram.counts[pi.size()];
    }
    return histogram;
}

Polynomial enumerate(const PermSet& generators, const ClosureOptions& options) {
    if (!packable(generators))
        return from_histogram(length_histogram(complete_and_compact_reference(generators)));
    const auto keys = encode_all(generators);
    return from_histogram(packed_closure_histogram(keys, options));
}

bool grid_member(const SignedPerm& sigma, const PermSet& compact_set) {
    return compact_set.contains(compactify(sigma).core);
}

}  // namespace gridperm
