#pragma once

#include <Eigen/Dense>
#include <vector>

#include "drg/graph.hpp"
#include "drg/numeric.hpp"
#include "json.hpp"

namespace drg {

// Parameter array {b_0,...,b_{d-1}; c_1,...,c_d} of a distance-regular graph
// with diameter d >= 3. Immutable once created; construction validates the
// arithmetic laws (positivity, monotonicity bounds, integral sphere sizes).
class IntersectionArray {
 public:
  // Empty placeholder; every populated instance comes from a factory below.
  IntersectionArray() = default;

  static IntersectionArray create(std::vector<long long> b,
                                  std::vector<long long> c);
  static IntersectionArray from_intersection_numbers(
      const IntersectionNumbers& num);
  // JSON shape: {"b": [b_0,...], "c": [c_1,...]}
  static IntersectionArray from_json(const nlohmann::json& j);

  int d() const { return static_cast<int>(b_.size()); }
  long long k() const { return b_[0]; }
  long long b(int i) const { return i == d() ? 0 : b_.at(i); }
  long long c(int i) const { return i == 0 ? 0 : c_.at(i - 1); }
  long long a(int i) const { return k() - b(i) - c(i); }
  const std::vector<long long>& valencies() const { return k_; }
  long long vertex_count() const { return n_; }
  nlohmann::json to_json() const;

  bool operator==(const IntersectionArray& o) const {
    return b_ == o.b_ && c_ == o.c_;
  }

 private:
  std::vector<long long> b_, c_, k_;
  long long n_ = 0;
};

struct SpectralData {
  IntersectionArray arr;
  long long n = 0;
  std::vector<double> theta;  // distinct eigenvalues, strictly decreasing
  Eigen::MatrixXd u;          // u(i, j) = u_i(theta_j)
  std::vector<double> m;      // multiplicities; m[0] == 1, sum == n

  int d() const { return arr.d(); }
};

// Eigenvalues of the (d+1)x(d+1) tridiagonal matrix with subdiagonal c_i,
// diagonal a_i, superdiagonal b_i: solved via the symmetrized similar matrix,
// then polished by one Newton step on the characteristic polynomial. Sorted
// strictly decreasing; theta[0] = k. Throws SpectralError if two eigenvalues
// collide within tol * max|theta|.
std::vector<double> eigenvalues_from_array(const IntersectionArray& arr,
                                           double tol = kDefaultTol);

// One further Newton polish applied to each entry (stability experiments).
std::vector<double> refine_eigenvalues(const IntersectionArray& arr,
                                       const std::vector<double>& theta);

// u_0 = 1, u_1 = theta/k, c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i.
std::vector<double> standard_sequence(const IntersectionArray& arr,
                                      double theta);

// m_j = n / sum_i k_i u_i(theta_j)^2. Validated: each within 1e-6 of a
// positive integer, m_0 = 1, sum = n.
std::vector<double> multiplicities(const IntersectionArray& arr,
                                   const Eigen::MatrixXd& u);

SpectralData analyze_spectra(const IntersectionArray& arr,
                             double tol = kDefaultTol);

// Rebuild sequences and multiplicities from externally supplied eigenvalues.
SpectralData spectral_data_from_eigenvalues(const IntersectionArray& arr,
                                            std::vector<double> theta);

struct DualEigenvalueSequence {
  int j = 0;
  std::vector<double> theta_star;  // theta*_i = m_j u_i(theta_j)
};

// Requires 1 <= j <= d (the trivial idempotent j = 0 is rejected).
DualEigenvalueSequence dual_eigenvalues(const SpectralData& s, int j);

// True when dual-eigenvalue degeneracies theta*_i = theta*_0 (i >= 1) occur
// for exactly the expected pairs: bipartite graphs with i even and j = d,
// and antipodal graphs with i = d and j even.
bool dual_degeneracy_consistent(const SpectralData& s, bool bipartite,
                                bool antipodal, double tol = kDefaultTol);

// E_j = prod_{l != j} (A - theta_l I) / (theta_j - theta_l); j = 0 gives J/n.
Eigen::MatrixXd idempotent_projection(const DistanceMatrices& dm,
                                      const SpectralData& s, int j);

std::vector<Eigen::MatrixXd> all_idempotents(const DistanceMatrices& dm,
                                             const SpectralData& s);

}  // namespace drg
