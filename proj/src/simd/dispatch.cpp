#include <cstdlib>
#include <string_view>

#include "transemi/bitkernels.hpp"

namespace transemi::kernels {

#if defined(TRANSEMI_HAVE_AVX2)
namespace avx2_impl {
const Table& table();
}
#endif
#if defined(__aarch64__) && defined(__ARM_NEON)
namespace neon_impl {
const Table& table();
}
#endif

const Table* avx2() {
#if defined(TRANSEMI_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_impl::table() : nullptr;
#else
  return nullptr;
#endif
}

const Table* neon() {
#if defined(__aarch64__) && defined(__ARM_NEON)
  return &neon_impl::table();
#else
  return nullptr;
#endif
}

const Table& active() {
  static const Table* chosen = [] {
    const char* forced = std::getenv("TRANSEMI_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return &scalar();
    if (const Table* t = avx2()) return t;
    if (const Table* t = neon()) return t;
    return &scalar();
  }();
  return *chosen;
}

}  // namespace transemi::kernels
