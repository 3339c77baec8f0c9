#include "drg/krein.hpp"

#include <cmath>

#include "drg/errors.hpp"

namespace drg {

bool classify_zero(double value, double scale, double tol) {
  return std::abs(value) < tol * scale;
}

namespace {

// Shared validation and zero classification for both construction routes.
KreinTensor finalize(Tensor3<double> q, const SpectralData& s, double tol) {
  const int d = q.dim() - 1;
  KreinTensor kt;
  kt.d = d;
  kt.tol = tol;
  kt.q = std::move(q);

  for (double v : kt.q.flat()) kt.scale = std::max(kt.scale, std::abs(v));
  const double bound = tol * std::max(1.0, kt.scale);
  const double mmax = max_abs(s.m);
  const double mbound = tol * std::max(1.0, kt.scale * mmax);

  for (int h = 0; h <= d; ++h)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) {
        const double v = kt.q(h, i, j);
        if (v < -bound)
          throw KreinViolationError(
              "negative Krein parameter q(" + std::to_string(h) + "," +
              std::to_string(i) + "," + std::to_string(j) + ") = " +
              std::to_string(v));
        if (std::abs(v - kt.q(h, j, i)) > bound ||
            std::abs(s.m[h] * v - s.m[i] * kt.q(i, j, h)) > mbound ||
            std::abs(s.m[h] * v - s.m[j] * kt.q(j, h, i)) > mbound)
          throw KreinViolationError(
              "Krein symmetry violated at (" + std::to_string(h) + "," +
              std::to_string(i) + "," + std::to_string(j) + ")");
      }

  // q(h,0,j) = [h == j]
  for (int h = 0; h <= d; ++h)
    for (int j = 0; j <= d; ++j)
      if (std::abs(kt.q(h, 0, j) - (h == j ? 1.0 : 0.0)) > bound)
        throw KreinViolationError("q(h,0,j) != delta_hj at h=" +
                                  std::to_string(h) + ", j=" +
                                  std::to_string(j));

  // Zero classification, harmonised over the symmetry orbit: an entry is zero
  // only if every orbit image passes the threshold test.
  kt.zero = Tensor3<unsigned char>(d + 1, 0);
  for (int h = 0; h <= d; ++h)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) {
        const bool z = classify_zero(kt.q(h, i, j), kt.scale, tol) &&
                       classify_zero(kt.q(h, j, i), kt.scale, tol) &&
                       classify_zero(kt.q(i, j, h), kt.scale, tol) &&
                       classify_zero(kt.q(i, h, j), kt.scale, tol) &&
                       classify_zero(kt.q(j, h, i), kt.scale, tol) &&
                       classify_zero(kt.q(j, i, h), kt.scale, tol);
        kt.zero(h, i, j) = z ? 1 : 0;
      }
  return kt;
}

}  // namespace

KreinTensor krein_from_spectra(const SpectralData& s, double tol) {
  const int d = s.d();
  const auto& k = s.arr.valencies();
  Tensor3<double> q(d + 1);
  for (int h = 0; h <= d; ++h)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) {
        double sum = 0;
        for (int r = 0; r <= d; ++r)
          sum += static_cast<double>(k[r]) * s.u(r, i) * s.u(r, j) * s.u(r, h);
        q(h, i, j) = s.m[i] * s.m[j] / static_cast<double>(s.n) * sum;
      }
  return finalize(std::move(q), s, tol);
}

KreinTensor krein_oracle(const DistanceMatrices& dm, const SpectralData& s,
                         double tol) {
  if (dm.n > 4096)
    throw InputError("projector oracle limited to 4096 vertices");
  const int d = s.d();
  const auto E = all_idempotents(dm, s);
  Tensor3<double> q(d + 1);
  for (int i = 0; i <= d; ++i)
    for (int j = i; j <= d; ++j) {
      const Eigen::MatrixXd had = E[i].cwiseProduct(E[j]);
      for (int h = 0; h <= d; ++h) {
        // trace(E_h had) with both factors symmetric
        const double tr = E[h].cwiseProduct(had).sum();
        q(h, i, j) = static_cast<double>(s.n) / s.m[h] * tr;
        q(h, j, i) = q(h, i, j);
      }
    }
  return finalize(std::move(q), s, tol);
}

nlohmann::json KreinTensor::to_json() const {
  nlohmann::json jq = nlohmann::json::array();
  nlohmann::json jz = nlohmann::json::array();
  for (int h = 0; h <= d; ++h) {
    nlohmann::json qh = nlohmann::json::array();
    nlohmann::json zh = nlohmann::json::array();
    for (int i = 0; i <= d; ++i) {
      nlohmann::json qi = nlohmann::json::array();
      nlohmann::json zi = nlohmann::json::array();
      for (int j = 0; j <= d; ++j) {
        qi.push_back(round_sig(q(h, i, j)));
        zi.push_back(static_cast<int>(zero(h, i, j)));
      }
      qh.push_back(std::move(qi));
      zh.push_back(std::move(zi));
    }
    jq.push_back(std::move(qh));
    jz.push_back(std::move(zh));
  }
  return nlohmann::json{{"q", std::move(jq)},
                        {"zero_mask", std::move(jz)},
                        {"scale", round_sig(scale)},
                        {"tol", tol}};
}

}  // namespace drg
