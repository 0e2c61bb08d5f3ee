#include <cstdlib>
#include <cstring>

#include "qint/kernels.hpp"

namespace qint::kernels {

#ifdef QINT_HAVE_AVX2_KERNELS
namespace detail {
const Ops& avx2_ops_impl();
}
#endif

bool avx2_compiled() {
#ifdef QINT_HAVE_AVX2_KERNELS
  return true;
#else
  return false;
#endif
}

bool avx2_supported() {
#if defined(QINT_HAVE_AVX2_KERNELS) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const Ops& avx2_ops() {
#ifdef QINT_HAVE_AVX2_KERNELS
  if (avx2_supported()) return detail::avx2_ops_impl();
#endif
  return scalar_ops();
}

const Ops& ops() {
  static const Ops& chosen = []() -> const Ops& {
    const char* env = std::getenv("QINT_KERNEL");
    if (env != nullptr) {
      if (std::strcmp(env, "scalar") == 0) return scalar_ops();
      if (std::strcmp(env, "avx2") == 0) return avx2_ops();
    }
    return avx2_supported() ? avx2_ops() : scalar_ops();
  }();
  return chosen;
}

}  // namespace qint::kernels
