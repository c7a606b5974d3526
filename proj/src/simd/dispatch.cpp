#include <cstdlib>
#include <string_view>

#include "lpwidim/simd/kernels.hpp"

namespace lpwidim::simd {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

namespace {

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& select_kernels() {
  const auto tables = available_kernels();
  if (const char* forced = std::getenv("LPWIDIM_ISA")) {
    for (const KernelTable* t : tables)
      if (isa_name(t->isa) == std::string_view(forced)) return *t;
  }
  return *tables.back();
}

}  // namespace

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> tables{&scalar_kernels()};
  if (const KernelTable* t = detail::avx2_kernels(); t && cpu_has_avx2()) tables.push_back(t);
  // NEON is part of the aarch64 baseline.
  if (const KernelTable* t = detail::neon_kernels()) tables.push_back(t);
  return tables;
}

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace lpwidim::simd
