#pragma once

#include "drg/spectra.hpp"

namespace drg {

// q(h,i,j) are the structure constants of the Hadamard product on the
// idempotent basis: E_i o E_j = (1/n) sum_h q(h,i,j) E_h. All entries are
// nonnegative; zero entries are classified relative to the largest entry and
// harmonised across the symmetry orbit (h,i,j) -> (i,j,h) -> (j,h,i).
struct KreinTensor {
  int d = 0;
  double tol = kDefaultTol;
  double scale = 0.0;  // max |q(h,i,j)|
  Tensor3<double> q;
  Tensor3<unsigned char> zero;

  bool is_zero(int h, int i, int j) const { return zero(h, i, j) != 0; }
  nlohmann::json to_json() const;
};

// |value| < tol * scale
bool classify_zero(double value, double scale, double tol);

// Spectral route: q(h,i,j) = (m_i m_j / n) sum_r k_r u_r(i) u_r(j) u_r(h).
KreinTensor krein_from_spectra(const SpectralData& s, double tol = kDefaultTol);

// Projector route: q(h,i,j) = (n / m_h) trace(E_h (E_i o E_j)); requires the
// graph (n <= 4096) and serves as the independent oracle for the formula.
KreinTensor krein_oracle(const DistanceMatrices& dm, const SpectralData& s,
                         double tol = kDefaultTol);

}  // namespace drg
