#include "kernels_impl.hpp"

#include <cstdlib>

namespace gridperm::kernels::detail {

namespace {

void delete_each(const Lanes& p, int len, Lanes* out) {
    for (int i = 0; i < len; ++i) {
        const int removed = std::abs(p.v[i]);
        Lanes child;
        int t = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i) continue;
            int e = p.v[j];
            if (std::abs(e) > removed) e += e > 0 ? -1 : 1;
            child.v[t++] = static_cast<std::int8_t>(e);
        }
        out[i] = child;
    }
}

std::uint32_t ascent_mask(const Lanes& p, int len) {
    std::uint32_t mask = 0;
    for (int i = 0; i + 1 < len; ++i) {
        if (p.v[i + 1] - p.v[i] == 1) mask |= 1u << i;
    }
    return mask;
}

int compact_core(const Lanes& p, int len, Lanes& out) {
    Lanes heads;
    int kept = 0;
    int removed[16];
    int num_removed = 0;
    for (int i = 0; i < len; ++i) {
        if (i > 0 && p.v[i] - p.v[i - 1] == 1) {
            removed[num_removed++] = std::abs(p.v[i]);
        } else {
            heads.v[kept++] = p.v[i];
        }
    }
    for (int i = 0; i < kept; ++i) {
        const int a = std::abs(heads.v[i]);
        int below = 0;
        for (int r = 0; r < num_removed; ++r) below += removed[r] < a;
        const int e = heads.v[i] < 0 ? -(a - below) : a - below;
        heads.v[i] = static_cast<std::int8_t>(e);
    }
    out = heads;
    return kept;
}

Key pack(const Lanes& p, int len) {
    Key key = static_cast<Key>(len) << 60;
    for (int i = 0; i < len; ++i) {
        const int e = p.v[i];
        const Key slot = static_cast<Key>(std::abs(e)) | (e < 0 ? 16u : 0u);
        key |= slot << (5 * i);
    }
    return key;
}

int unpack(Key key, Lanes& out) {
    const int len = static_cast<int>(key >> 60);
    out = Lanes{};
    for (int i = 0; i < len; ++i) {
        const unsigned slot = static_cast<unsigned>((key >> (5 * i)) & 31u);
        const int magnitude = static_cast<int>(slot & 15u);
        out.v[i] = static_cast<std::int8_t>((slot & 16u) ? -magnitude : magnitude);
    }
    return len;
}

void reverse_negate(const Lanes& p, int i, int j, Lanes& out) {
    out = p;
    for (int t = i; t <= j; ++t) out.v[t] = static_cast<std::int8_t>(-p.v[i + j - t]);
}

void prefix_reversals(const Lanes& p, int n, Lanes* out) {
    for (int i = 1; i <= n; ++i) reverse_negate(p, 0, i - 1, out[i - 1]);
}

void block_reversals(const Lanes& p, int n, Lanes* out) {
    int t = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) reverse_negate(p, i - 1, j - 1, out[t++]);
}

int expand_cores(Key parent, Key* out) {
    Lanes p;
    const int len = unpack(parent, p);
    Lanes children[16];
    delete_each(p, len, children);
    for (int i = 0; i < len; ++i) {
        Lanes core;
        const int core_len = compact_core(children[i], len - 1, core);
        out[i] = pack(core, core_len);
    }
    return len;
}

}  // namespace

const KernelSet scalar_set{
    "scalar",     delete_each,      ascent_mask,     compact_core, pack,
    unpack,       prefix_reversals, block_reversals, expand_cores,
};

}  // namespace gridperm::kernels::detail
