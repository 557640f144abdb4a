// AVX2 + BMI2 variants of the packed-permutation kernels. Compiled with
// -mavx2 -mbmi2; only reached through kernels::avx2() after a CPU check.

#include "kernels_impl.hpp"

#include <immintrin.h>

#include <array>
#include <cstring>

namespace gridperm::kernels::detail {

namespace {

constexpr std::uint64_t kSlotMask8 = 0x1F1F1F1F1F1F1F1Full;
constexpr std::uint64_t kSlotMask4 = 0x000000001F1F1F1Full;
constexpr std::uint64_t kByteSpread = 0x0101010101010101ull;

struct ShuffleTables {
    // drop[i]: moves lanes > i down by one, shifting zero in at the top.
    alignas(16) std::array<std::array<std::int8_t, 16>, 16> drop{};
    // reverse[i][j]: reverses lanes i..j (0-based, inclusive).
    alignas(16) std::array<std::array<std::array<std::int8_t, 16>, 16>, 16> reverse{};
    // negate[i][j]: 0xFF on lanes i..j.
    alignas(16) std::array<std::array<std::array<std::int8_t, 16>, 16>, 16> negate{};

    ShuffleTables() {
        for (int i = 0; i < 16; ++i)
            for (int l = 0; l < 16; ++l) {
                const int src = l < i ? l : l + 1;
                drop[i][l] = static_cast<std::int8_t>(src < 16 ? src : 0x80);
            }
        for (int i = 0; i < 16; ++i)
            for (int j = i; j < 16; ++j)
                for (int l = 0; l < 16; ++l) {
                    const bool inside = l >= i && l <= j;
                    reverse[i][j][l] = static_cast<std::int8_t>(inside ? i + j - l : l);
                    negate[i][j][l] = static_cast<std::int8_t>(inside ? -1 : 0);
                }
    }
};

const ShuffleTables& tables() {
    static const ShuffleTables t;
    return t;
}

inline __m128i load(const Lanes& p) { return _mm_load_si128(reinterpret_cast<const __m128i*>(p.v.data())); }
inline void store(Lanes& p, __m128i x) { _mm_store_si128(reinterpret_cast<__m128i*>(p.v.data()), x); }
inline __m128i load_table(const std::array<std::int8_t, 16>& row) {
    return _mm_loadu_si128(reinterpret_cast<const __m128i*>(row.data()));
}

// x - sign(x) on lanes whose |x| exceeds the per-lane threshold.
inline __m256i shrink_above(__m256i x, __m256i threshold) {
    const __m256i gt = _mm256_cmpgt_epi8(_mm256_abs_epi8(x), threshold);
    const __m256i sgn = _mm256_sign_epi8(_mm256_set1_epi8(1), x);
    return _mm256_sub_epi8(x, _mm256_and_si256(sgn, gt));
}

inline __m128i shrink_above(__m128i x, __m128i threshold) {
    const __m128i gt = _mm_cmpgt_epi8(_mm_abs_epi8(x), threshold);
    const __m128i sgn = _mm_sign_epi8(_mm_set1_epi8(1), x);
    return _mm_sub_epi8(x, _mm_and_si128(sgn, gt));
}

inline std::uint32_t ascent_bits(__m128i x, int len) {
    if (len < 2) return 0;
    const __m128i next = _mm_srli_si128(x, 1);
    const __m128i eq = _mm_cmpeq_epi8(_mm_sub_epi8(next, x), _mm_set1_epi8(1));
    return static_cast<std::uint32_t>(_mm_movemask_epi8(eq)) & ((1u << (len - 1)) - 1u);
}

// Keeps the lanes selected by `keep`, packed towards lane 0.
inline __m128i compress_lanes(__m128i x, std::uint32_t keep) {
    const std::uint64_t lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(x));
    const std::uint64_t hi = static_cast<std::uint64_t>(_mm_extract_epi64(x, 1));
    const std::uint64_t lo_bytes = _pdep_u64(keep & 0xFFu, kByteSpread) * 0xFFu;
    const std::uint64_t hi_bytes = _pdep_u64((keep >> 8) & 0xFFu, kByteSpread) * 0xFFu;
    const std::uint64_t lo_kept = _pext_u64(lo, lo_bytes);
    const std::uint64_t hi_kept = _pext_u64(hi, hi_bytes);
    const int lo_count = __builtin_popcount(keep & 0xFFu);
    std::uint64_t out_lo = lo_kept;
    std::uint64_t out_hi = hi_kept;
    if (lo_count < 8) {
        const int shift = 8 * lo_count;
        out_lo |= hi_kept << shift;
        out_hi = shift == 0 ? 0 : hi_kept >> (64 - shift);
    }
    return _mm_set_epi64x(static_cast<long long>(out_hi), static_cast<long long>(out_lo));
}

inline int core_of(__m128i x, int len, __m128i& out) {
    const std::uint32_t runs = ascent_bits(x, len);
    if (runs == 0) {
        out = x;
        return len;
    }
    const std::uint32_t dropped = runs << 1;
    const std::uint32_t keep = ~dropped & ((1u << len) - 1u);

    alignas(16) std::int8_t lanes[16];
    _mm_store_si128(reinterpret_cast<__m128i*>(lanes), x);
    const __m128i magnitude = _mm_abs_epi8(x);
    const __m128i sgn = _mm_sign_epi8(_mm_set1_epi8(1), x);
    __m128i result = x;
    for (std::uint32_t bits = dropped; bits; bits &= bits - 1) {
        const int lane = __builtin_ctz(bits);
        const int r = lanes[lane] < 0 ? -lanes[lane] : lanes[lane];
        const __m128i gt = _mm_cmpgt_epi8(magnitude, _mm_set1_epi8(static_cast<char>(r)));
        result = _mm_sub_epi8(result, _mm_and_si128(sgn, gt));
    }
    out = compress_lanes(result, keep);
    return __builtin_popcount(keep);
}

inline Key pack_vec(__m128i x, int len) {
    const __m128i neg = _mm_cmpgt_epi8(_mm_setzero_si128(), x);
    const __m128i slots = _mm_or_si128(_mm_abs_epi8(x), _mm_and_si128(neg, _mm_set1_epi8(16)));
    const std::uint64_t lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(slots));
    const std::uint64_t hi = static_cast<std::uint64_t>(_mm_extract_epi64(slots, 1));
    return _pext_u64(lo, kSlotMask8) | (_pext_u64(hi, kSlotMask4) << 40) |
           (static_cast<Key>(len) << 60);
}

inline __m128i unpack_vec(Key key) {
    const std::uint64_t lo = _pdep_u64(key & ((1ull << 40) - 1), kSlotMask8);
    const std::uint64_t hi = _pdep_u64((key >> 40) & 0xFFFFFull, kSlotMask4);
    const __m128i slots = _mm_set_epi64x(static_cast<long long>(hi), static_cast<long long>(lo));
    const __m128i magnitude = _mm_and_si128(slots, _mm_set1_epi8(15));
    const __m128i neg = _mm_cmpeq_epi8(_mm_and_si128(slots, _mm_set1_epi8(16)), _mm_set1_epi8(16));
    return _mm_sub_epi8(_mm_xor_si128(magnitude, neg), neg);
}

// Children for deleting lanes i and i+1, one per 128-bit half.
inline __m256i delete_pair(__m256i both, const Lanes& p, int i) {
    const auto& t = tables();
    const __m256i mask = _mm256_set_m128i(load_table(t.drop[i + 1]), load_table(t.drop[i]));
    const int r0 = p.v[i] < 0 ? -p.v[i] : p.v[i];
    const int r1 = p.v[i + 1] < 0 ? -p.v[i + 1] : p.v[i + 1];
    const __m256i threshold = _mm256_set_m128i(_mm_set1_epi8(static_cast<char>(r1)),
                                               _mm_set1_epi8(static_cast<char>(r0)));
    return shrink_above(_mm256_shuffle_epi8(both, mask), threshold);
}

inline __m128i delete_one(__m128i x, const Lanes& p, int i) {
    const int r = p.v[i] < 0 ? -p.v[i] : p.v[i];
    return shrink_above(_mm_shuffle_epi8(x, load_table(tables().drop[i])),
                        _mm_set1_epi8(static_cast<char>(r)));
}

void delete_each(const Lanes& p, int len, Lanes* out) {
    const __m128i x = load(p);
    const __m256i both = _mm256_broadcastsi128_si256(x);
    int i = 0;
    for (; i + 1 < len; i += 2) {
        const __m256i kids = delete_pair(both, p, i);
        store(out[i], _mm256_castsi256_si128(kids));
        store(out[i + 1], _mm256_extracti128_si256(kids, 1));
    }
    if (i < len) store(out[i], delete_one(x, p, i));
}

std::uint32_t ascent_mask(const Lanes& p, int len) { return ascent_bits(load(p), len); }

int compact_core(const Lanes& p, int len, Lanes& out) {
    __m128i core;
    const int n = core_of(load(p), len, core);
    store(out, core);
    return n;
}

Key pack(const Lanes& p, int len) { return pack_vec(load(p), len); }

int unpack(Key key, Lanes& out) {
    store(out, unpack_vec(key));
    return static_cast<int>(key >> 60);
}

inline __m128i reverse_negate(__m128i x, int i, int j) {
    const auto& t = tables();
    const __m128i moved = _mm_shuffle_epi8(x, load_table(t.reverse[i][j]));
    const __m128i neg = load_table(t.negate[i][j]);
    return _mm_sub_epi8(_mm_xor_si128(moved, neg), neg);
}

inline __m256i reverse_negate_pair(__m256i both, int i0, int j0, int i1, int j1) {
    const auto& t = tables();
    const __m256i mask =
        _mm256_set_m128i(load_table(t.reverse[i1][j1]), load_table(t.reverse[i0][j0]));
    const __m256i neg = _mm256_set_m128i(load_table(t.negate[i1][j1]), load_table(t.negate[i0][j0]));
    const __m256i moved = _mm256_shuffle_epi8(both, mask);
    return _mm256_sub_epi8(_mm256_xor_si256(moved, neg), neg);
}

void prefix_reversals(const Lanes& p, int n, Lanes* out) {
    const __m128i x = load(p);
    const __m256i both = _mm256_broadcastsi128_si256(x);
    int i = 1;
    for (; i + 1 <= n; i += 2) {
        const __m256i images = reverse_negate_pair(both, 0, i - 1, 0, i);
        store(out[i - 1], _mm256_castsi256_si128(images));
        store(out[i], _mm256_extracti128_si256(images, 1));
    }
    if (i <= n) store(out[i - 1], reverse_negate(x, 0, i - 1));
}

void block_reversals(const Lanes& p, int n, Lanes* out) {
    const __m128i x = load(p);
    const __m256i both = _mm256_broadcastsi128_si256(x);
    int pairs[136][2];
    int count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            pairs[count][0] = i;
            pairs[count][1] = j;
            ++count;
        }
    int t = 0;
    for (; t + 1 < count; t += 2) {
        const __m256i images =
            reverse_negate_pair(both, pairs[t][0], pairs[t][1], pairs[t + 1][0], pairs[t + 1][1]);
        store(out[t], _mm256_castsi256_si128(images));
        store(out[t + 1], _mm256_extracti128_si256(images, 1));
    }
    if (t < count) store(out[t], reverse_negate(x, pairs[t][0], pairs[t][1]));
}

int expand_cores(Key parent, Key* out) {
    const __m128i x = unpack_vec(parent);
    const int len = static_cast<int>(parent >> 60);
    Lanes p;
    store(p, x);
    const __m256i both = _mm256_broadcastsi128_si256(x);
    int i = 0;
    __m128i core;
    for (; i + 1 < len; i += 2) {
        const __m256i kids = delete_pair(both, p, i);
        int n = core_of(_mm256_castsi256_si128(kids), len - 1, core);
        out[i] = pack_vec(core, n);
        n = core_of(_mm256_extracti128_si256(kids, 1), len - 1, core);
        out[i + 1] = pack_vec(core, n);
    }
    if (i < len) {
        const int n = core_of(delete_one(x, p, i), len - 1, core);
        out[i] = pack_vec(core, n);
    }
    return len;
}

}  // namespace

const KernelSet avx2_set{
    "avx2",       delete_each,      ascent_mask,     compact_core, pack,
    unpack,       prefix_reversals, block_reversals, expand_cores,
};

}  // namespace gridperm::kernels::detail
