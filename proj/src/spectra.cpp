#include "drg/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "drg/errors.hpp"

namespace drg {

IntersectionArray IntersectionArray::create(std::vector<long long> b,
                                            std::vector<long long> c) {
  if (b.size() != c.size())
    throw InvalidArrayError("b and c must have the same length");
  const int d = static_cast<int>(b.size());
  if (d < 3)
    throw InvalidArrayError("diameter must be at least 3, got " +
                            std::to_string(d));
  IntersectionArray arr;
  arr.b_ = std::move(b);
  arr.c_ = std::move(c);
  for (int i = 0; i < d; ++i)
    if (arr.b_[i] <= 0)
      throw InvalidArrayError("b_" + std::to_string(i) + " must be positive");
  for (int i = 1; i <= d; ++i)
    if (arr.c(i) <= 0)
      throw InvalidArrayError("c_" + std::to_string(i) + " must be positive");
  if (arr.c(1) != 1) throw InvalidArrayError("c_1 must equal 1");
  for (int i = 0; i <= d; ++i)
    if (arr.a(i) < 0)
      throw InvalidArrayError("a_" + std::to_string(i) + " = " +
                              std::to_string(arr.a(i)) + " is negative");

  arr.k_.assign(d + 1, 1);
  for (int i = 0; i < d; ++i) {
    long long num = arr.k_[i] * arr.b(i);
    if (num % arr.c(i + 1) != 0)
      throw InvalidArrayError("sphere size k_" + std::to_string(i + 1) +
                              " is not an integer");
    arr.k_[i + 1] = num / arr.c(i + 1);
  }
  arr.n_ = 0;
  for (long long ki : arr.k_) arr.n_ += ki;
  return arr;
}

IntersectionArray IntersectionArray::from_intersection_numbers(
    const IntersectionNumbers& num) {
  std::vector<long long> b(num.d), c(num.d);
  for (int i = 0; i < num.d; ++i) {
    b[i] = num.p(i, 1, i + 1);
    c[i] = num.p(i + 1, 1, i);
  }
  return create(std::move(b), std::move(c));
}

IntersectionArray IntersectionArray::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("b") || !j.contains("c") ||
      !j["b"].is_array() || !j["c"].is_array())
    throw InvalidArrayError(
        "intersection array JSON must be {\"b\": [...], \"c\": [...]}");
  std::vector<long long> b, c;
  for (const auto& v : j["b"]) {
    if (!v.is_number_integer())
      throw InvalidArrayError("entries of b must be integers");
    b.push_back(v.get<long long>());
  }
  for (const auto& v : j["c"]) {
    if (!v.is_number_integer())
      throw InvalidArrayError("entries of c must be integers");
    c.push_back(v.get<long long>());
  }
  return create(std::move(b), std::move(c));
}

nlohmann::json IntersectionArray::to_json() const {
  return nlohmann::json{{"b", b_}, {"c", c_}};
}

namespace {

// Characteristic polynomial of the tridiagonal intersection matrix and its
// derivative at theta, via the three-term recurrence on leading principal
// minors of (theta I - T).
std::pair<double, double> charpoly(const IntersectionArray& arr,
                                   double theta) {
  const int d = arr.d();
  double pm2 = 0, pm1 = 1, qm2 = 0, qm1 = 0;  // p_{k-2}, p_{k-1} and derivatives
  for (int k = 1; k <= d + 1; ++k) {
    const double diag = theta - static_cast<double>(arr.a(k - 1));
    const double off =
        k >= 2 ? static_cast<double>(arr.b(k - 2) * arr.c(k - 1)) : 0.0;
    const double p = diag * pm1 - off * pm2;
    const double q = pm1 + diag * qm1 - off * qm2;
    pm2 = pm1;
    pm1 = p;
    qm2 = qm1;
    qm1 = q;
  }
  return {pm1, qm1};
}

double newton_step(const IntersectionArray& arr, double theta) {
  auto [p, dp] = charpoly(arr, theta);
  if (dp == 0.0) return theta;
  return theta - p / dp;
}

}  // namespace

std::vector<double> refine_eigenvalues(const IntersectionArray& arr,
                                       const std::vector<double>& theta) {
  std::vector<double> out;
  out.reserve(theta.size());
  for (double t : theta) out.push_back(newton_step(arr, t));
  return out;
}

std::vector<double> eigenvalues_from_array(const IntersectionArray& arr,
                                           double tol) {
  const int d = arr.d();
  // Conjugating by diag(sqrt(k_i)) symmetrizes T because k_i b_i = k_{i+1} c_{i+1}.
  Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) sym(i, i) = static_cast<double>(arr.a(i));
  for (int i = 0; i < d; ++i) {
    const double off = std::sqrt(static_cast<double>(arr.b(i) * arr.c(i + 1)));
    sym(i, i + 1) = sym(i + 1, i) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success)
    throw SpectralError("eigenvalue solver failed to converge");

  std::vector<double> theta(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + d + 1);
  std::sort(theta.rbegin(), theta.rend());
  theta = refine_eigenvalues(arr, theta);

  double scale = max_abs(theta);
  for (int i = 0; i < d; ++i)
    if (!(theta[i] - theta[i + 1] > tol * std::max(1.0, scale)))
      throw SpectralError("eigenvalue collision near " +
                          std::to_string(theta[i]));
  return theta;
}

std::vector<double> standard_sequence(const IntersectionArray& arr,
                                      double theta) {
  const int d = arr.d();
  std::vector<double> u(d + 1);
  u[0] = 1.0;
  double prev = 0.0;  // u_{-1}, paired with c_0 = 0
  for (int i = 0; i < d; ++i) {
    const double next =
        ((theta - static_cast<double>(arr.a(i))) * u[i] -
         static_cast<double>(arr.c(i)) * prev) /
        static_cast<double>(arr.b(i));
    prev = u[i];
    u[i + 1] = next;
  }
  return u;
}

std::vector<double> multiplicities(const IntersectionArray& arr,
                                   const Eigen::MatrixXd& u) {
  const int d = arr.d();
  const auto& k = arr.valencies();
  const double n = static_cast<double>(arr.vertex_count());
  std::vector<double> m(d + 1);
  for (int j = 0; j <= d; ++j) {
    double denom = 0;
    for (int i = 0; i <= d; ++i)
      denom += static_cast<double>(k[i]) * u(i, j) * u(i, j);
    m[j] = n / denom;
    const double nearest = std::round(m[j]);
    if (nearest < 1.0 || std::abs(m[j] - nearest) > 1e-6)
      throw SpectralError("multiplicity m_" + std::to_string(j) + " = " +
                          std::to_string(m[j]) + " is not a positive integer");
  }
  if (std::abs(m[0] - 1.0) > 1e-6)
    throw SpectralError("m_0 must equal 1");
  double sum = 0;
  for (double mj : m) sum += mj;
  if (std::abs(sum - n) > 1e-6 * n)
    throw SpectralError("multiplicities sum to " + std::to_string(sum) +
                        ", expected " + std::to_string(n));
  return m;
}

SpectralData spectral_data_from_eigenvalues(const IntersectionArray& arr,
                                            std::vector<double> theta) {
  const int d = arr.d();
  SpectralData s;
  s.arr = arr;
  s.n = arr.vertex_count();
  s.theta = std::move(theta);
  s.u.resize(d + 1, d + 1);
  for (int j = 0; j <= d; ++j) {
    const auto col = standard_sequence(arr, s.theta[j]);
    for (int i = 0; i <= d; ++i) s.u(i, j) = col[i];
  }
  s.m = multiplicities(arr, s.u);
  return s;
}

SpectralData analyze_spectra(const IntersectionArray& arr, double tol) {
  return spectral_data_from_eigenvalues(arr, eigenvalues_from_array(arr, tol));
}

DualEigenvalueSequence dual_eigenvalues(const SpectralData& s, int j) {
  if (j < 1 || j > s.d())
    throw InputError("idempotent index " + std::to_string(j) +
                     " out of range 1.." + std::to_string(s.d()));
  DualEigenvalueSequence ds;
  ds.j = j;
  ds.theta_star.resize(s.d() + 1);
  for (int i = 0; i <= s.d(); ++i) ds.theta_star[i] = s.m[j] * s.u(i, j);
  return ds;
}

bool dual_degeneracy_consistent(const SpectralData& s, bool bipartite,
                                bool antipodal, double tol) {
  const int d = s.d();
  for (int j = 1; j <= d; ++j) {
    const auto ds = dual_eigenvalues(s, j);
    const double bound = tol * std::max(1.0, max_abs(ds.theta_star));
    for (int i = 1; i <= d; ++i) {
      const bool equal =
          std::abs(ds.theta_star[i] - ds.theta_star[0]) <= bound;
      const bool expected = (bipartite && i % 2 == 0 && j == d) ||
                            (antipodal && i == d && j % 2 == 0);
      if (equal != expected) return false;
    }
  }
  return true;
}

Eigen::MatrixXd idempotent_projection(const DistanceMatrices& dm,
                                      const SpectralData& s, int j) {
  if (j < 0 || j > s.d())
    throw InputError("idempotent index " + std::to_string(j) +
                     " out of range 0.." + std::to_string(s.d()));
  if (dm.d != s.d())
    throw InputError("distance matrices do not match the array diameter");
  const Eigen::MatrixXd A = dm.A[1].cast<double>();
  Eigen::MatrixXd E = Eigen::MatrixXd::Identity(dm.n, dm.n);
  for (int l = 0; l <= s.d(); ++l) {
    if (l == j) continue;
    E = E * (A - s.theta[l] * Eigen::MatrixXd::Identity(dm.n, dm.n)) /
        (s.theta[j] - s.theta[l]);
  }
  return E;
}

std::vector<Eigen::MatrixXd> all_idempotents(const DistanceMatrices& dm,
                                             const SpectralData& s) {
  std::vector<Eigen::MatrixXd> E;
  E.reserve(s.d() + 1);
  for (int j = 0; j <= s.d(); ++j) E.push_back(idempotent_projection(dm, s, j));
  return E;
}

}  // namespace drg
