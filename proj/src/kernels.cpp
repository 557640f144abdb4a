#include "kernels_impl.hpp"

#include <cstdlib>
#include <string_view>

namespace gridperm::kernels {

const KernelSet& scalar() { return detail::scalar_set; }

const KernelSet* avx2() {
#if defined(GRIDPERM_HAVE_AVX2_KERNELS)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("bmi2");
    return supported ? &detail::avx2_set : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet& active() {
    static const KernelSet* chosen = [] {
        const char* forced = std::getenv("GRIDPERM_KERNELS");
        if (forced && std::string_view(forced) == "scalar") return &scalar();
        const KernelSet* fast = avx2();
        return fast ? fast : &scalar();
    }();
    return *chosen;
}

}  // namespace gridperm::kernels
