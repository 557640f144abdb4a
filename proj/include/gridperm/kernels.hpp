#pragma once

#include <cstdint>
#include <string_view>

#include "gridperm/packed.hpp"

// Inner-loop kernels over packed permutations. Every kernel has a portable
// scalar reference; an AVX2+BMI2 variant is used when the CPU supports it.
// Both produce bit-identical results.
namespace gridperm::kernels {

using packed::Key;
using packed::Lanes;

struct KernelSet {
    std::string_view name;

    // out[i] = standardized p with entry i removed, for i < len.
    void (*delete_each)(const Lanes& p, int len, Lanes* out);

    // Bit i is set iff p[i+1] - p[i] == 1 (0 <= i < len-1).
    std::uint32_t (*ascent_mask)(const Lanes& p, int len);

    // Compact core of p: drops the tail of every run with successive
    // difference 1, then standardizes. Returns the core length.
    int (*compact_core)(const Lanes& p, int len, Lanes& out);

    Key (*pack)(const Lanes& p, int len);
    // Returns the length stored in the key.
    int (*unpack)(Key key, Lanes& out);

    // Images of p under f_1 .. f_n (prefix reversal with negation).
    void (*prefix_reversals)(const Lanes& p, int n, Lanes* out);

    // Images of p under b_{i,j}, 1 <= i <= j <= n, ordered by i then j.
    void (*block_reversals)(const Lanes& p, int n, Lanes* out);

    // Fused closure step: packed compact cores of the len single-deletion
    // children of `parent`. Returns the number written (= length(parent)).
    int (*expand_cores)(Key parent, Key* out);
};

const KernelSet& scalar();

// nullptr unless this build has the AVX2 kernels and the CPU supports
// AVX2 and BMI2.
const KernelSet* avx2();

// Best available set, unless GRIDPERM_KERNELS=scalar forces the reference.
const KernelSet& active();

}  // namespace gridperm::kernels
