#pragma once

#include <cstddef>

namespace tq::kernels {

// Data-parallel inner loops behind dissection and validation:
//   * batch evaluation of the two closed-form maps over multiplicative
//     coordinate arrays,
//   * per-cell Pitot defect and perimeter over an (n+1)x(n+1) row-major
//     lattice (outputs have n*n entries, cell (k,j) at index j*n+k).
//
// Every lane evaluates the exact same expression tree with IEEE
// correctly-rounded primitives (the build disables FMA contraction), so
// lanes agree bit-for-bit and are equivalence-tested that way.
struct Backend {
  const char* name;
  void (*general_map)(const double* P, const double* Q, double* u, double* v,
                      std::size_t count);
  void (*trapezoid_map)(const double* P, const double* Q, double* u, double* v,
                        std::size_t count);
  void (*cell_defects)(const double* u, const double* v, std::size_t n,
                       double* defect, double* perim);
};

const Backend& scalar_backend();

/// AVX2 lane on x86-64; identical to scalar elsewhere.
const Backend& avx2_backend();
bool avx2_available();

/// Runtime selection: AVX2 when the CPU supports it, overridable with
/// TQ_KERNELS=scalar in the environment. Decided once per process.
const Backend& active_backend();

}  // namespace tq::kernels
