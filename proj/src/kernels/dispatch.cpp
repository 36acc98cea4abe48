#include "tq/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace tq::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Backend& active_backend() {
  static const Backend* chosen = [] {
    if (const char* e = std::getenv("TQ_KERNELS"))
      if (std::string_view(e) == "scalar") return &scalar_backend();
    return avx2_available() ? &avx2_backend() : &scalar_backend();
  }();
  return *chosen;
}

}  // namespace tq::kernels
