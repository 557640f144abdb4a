#pragma once

#include "gridperm/kernels.hpp"

namespace gridperm::kernels::detail {

extern const KernelSet scalar_set;

#if defined(GRIDPERM_HAVE_AVX2_KERNELS)
extern const KernelSet avx2_set;
#endif

}  // namespace gridperm::kernels::detail
