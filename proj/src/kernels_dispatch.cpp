#include <cstdlib>
#include <cstring>

#include "nct/kernels.hpp"

namespace nct::kern {

const Kernels* avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return detail::avx2_table();
#endif
  return nullptr;
}

namespace {

const Kernels& pick() {
  if (const char* env = std::getenv("NCT_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return scalar();
    if (std::strcmp(env, "avx2") == 0) {
      if (const Kernels* k = avx2()) return *k;
      return scalar();  // requested variant unavailable, fall back
    }
  }
  if (const Kernels* k = avx2()) return *k;
  return scalar();
}

}  // namespace

const Kernels& active() {
  static const Kernels& chosen = pick();
  return chosen;
}

}  // namespace nct::kern
