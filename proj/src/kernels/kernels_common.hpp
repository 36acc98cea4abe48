#pragma once

#include <cmath>

// Shared scalar formulas. Both lanes mirror these expression trees exactly;
// keep operand order in sync with the AVX2 kernels when editing.
namespace tq::kernels::detail {

inline void general_map_one(double P, double Q, double& u, double& v) {
  double den = (P + Q) * (P * Q - 1.0);
  u = P * (Q * Q - 1.0) / den;
  v = 2.0 * P * Q / den;
}

inline void trapezoid_map_one(double P, double Q, double& u, double& v) {
  u = P;
  v = 0.5 * P * (Q - 1.0 / Q);
}

inline double edge_len(double du, double dv) {
  return std::sqrt(du * du + dv * dv);
}

inline void cell_defect_one(const double* u0, const double* v0,
                            const double* u1, const double* v1, std::size_t k,
                            double& defect, double& perim) {
  double ab = edge_len(u0[k + 1] - u0[k], v0[k + 1] - v0[k]);
  double bc = edge_len(u1[k + 1] - u0[k + 1], v1[k + 1] - v0[k + 1]);
  double cd = edge_len(u1[k] - u1[k + 1], v1[k] - v1[k + 1]);
  double da = edge_len(u0[k] - u1[k], v0[k] - v1[k]);
  defect = (ab + cd) - (bc + da);
  perim = (ab + bc) + (cd + da);
}

}  // namespace tq::kernels::detail
