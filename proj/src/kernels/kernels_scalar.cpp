#include "tq/kernels.hpp"

#include "kernels_common.hpp"

namespace tq::kernels {
namespace {

void scalar_general_map(const double* P, const double* Q, double* u, double* v,
                        std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    detail::general_map_one(P[i], Q[i], u[i], v[i]);
}

void scalar_trapezoid_map(const double* P, const double* Q, double* u,
                          double* v, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    detail::trapezoid_map_one(P[i], Q[i], u[i], v[i]);
}

void scalar_cell_defects(const double* u, const double* v, std::size_t n,
                         double* defect, double* perim) {
  const std::size_t w = n + 1;
  for (std::size_t j = 0; j < n; ++j) {
    const double* u0 = u + j * w;
    const double* v0 = v + j * w;
    const double* u1 = u0 + w;
    const double* v1 = v0 + w;
    for (std::size_t k = 0; k < n; ++k)
      detail::cell_defect_one(u0, v0, u1, v1, k, defect[j * n + k],
                              perim[j * n + k]);
  }
}

}  // namespace

const Backend& scalar_backend() {
  static constexpr Backend b{"scalar", &scalar_general_map,
                             &scalar_trapezoid_map, &scalar_cell_defects};
  return b;
}

}  // namespace tq::kernels
