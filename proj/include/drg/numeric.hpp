#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace drg {

// Single global comparison tolerance; every public operation that compares
// floating-point quantities accepts an override.
inline constexpr double kDefaultTol = 1e-8;

// |a - b| within tol scaled by the largest magnitude involved (floored at 1
// so that near-zero quantities are compared absolutely).
inline bool close(double a, double b, double tol, double scale) {
  return std::abs(a - b) <= tol * std::max(1.0, scale);
}

inline bool close(double a, double b, double tol = kDefaultTol) {
  return close(a, b, tol, std::max(std::abs(a), std::abs(b)));
}

inline double max_abs(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Eigen::VectorXd& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Round to 12 significant digits; used when serialising reals so that output
// is stable under reordering of arithmetically equivalent computations.
inline double round_sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

// Deterministic linear-congruential generator yielding doubles in [-1, 1);
// used wherever reproducible sample vectors are needed.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed)
      : state_(seed * 0x9e3779b97f4a7c15ull + 0xda3e39cb94b95bdbull) {}

  double next() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return 2.0 * (static_cast<double>(state_ >> 11) / 9007199254740992.0) -
           1.0;
  }

  Eigen::VectorXd vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = next();
    return v;
  }

 private:
  std::uint64_t state_;
};

// Dense cube-shaped tensor indexed by three indices in [0, dim).
template <typename T>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int dim, T init = T{})
      : dim_(dim), v_(static_cast<size_t>(dim) * dim * dim, init) {}

  int dim() const { return dim_; }
  T& operator()(int h, int i, int j) { return v_[index(h, i, j)]; }
  const T& operator()(int h, int i, int j) const { return v_[index(h, i, j)]; }
  const std::vector<T>& flat() const { return v_; }

 private:
  size_t index(int h, int i, int j) const {
    return (static_cast<size_t>(h) * dim_ + i) * dim_ + j;
  }
  int dim_ = 0;
  std::vector<T> v_;
};

}  // namespace drg
