#include "kernels_impl.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace tfspec::simd {

namespace {

constexpr Kernels kScalar{Isa::scalar,
                          detail::recurrence_table_scalar,
                          detail::dot_scalar,
                          detail::dot3_scalar,
                          detail::axpy_scalar,
                          detail::mul_inplace_scalar};

#if defined(TFSPEC_HAVE_AVX2)
constexpr Kernels kAvx2{Isa::avx2,
                        detail::recurrence_table_avx2,
                        detail::dot_avx2,
                        detail::dot3_avx2,
                        detail::axpy_avx2,
                        detail::mul_inplace_avx2};
#endif

Isa detect() {
    if (const char* env = std::getenv("TFSPEC_SIMD")) {
        const std::string v(env);
        if (v == "scalar") return Isa::scalar;
        if (v == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
    }
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& active_slot() {
    static std::atomic<Isa> slot{detect()};
    return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(TFSPEC_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

const Kernels& kernels(Isa isa) {
#if defined(TFSPEC_HAVE_AVX2)
    if (isa == Isa::avx2 && isa_available(Isa::avx2)) return kAvx2;
#endif
    (void)isa;
    return kScalar;
}

const Kernels& active() { return kernels(active_slot().load(std::memory_order_relaxed)); }

Isa active_isa() { return active().isa; }

void set_active(Isa isa) {
    active_slot().store(isa_available(isa) ? isa : Isa::scalar, std::memory_order_relaxed);
}

}  // namespace tfspec::simd
