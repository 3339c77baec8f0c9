#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "drg/corpus.hpp"
#include "drg/errors.hpp"
#include "drg/spectra.hpp"
#include "json.hpp"

using namespace drg;
using nlohmann::json;

namespace {

constexpr double kSqrt5 = 2.2360679774997896964;
constexpr double kSqrt2 = 1.4142135623730950488;

IntersectionArray array_of(const std::string& fixture) {
  return IntersectionArray::from_intersection_numbers(
      check_distance_regular(corpus::get_fixture(fixture).graph));
}

// Independent eigenvalue oracle: Sturm-sequence bisection on the symmetric
// tridiagonal matrix similar to the intersection matrix. Counts eigenvalues
// below x through the sign pattern of the LDL^T pivots.
int eigenvalues_below(const IntersectionArray& arr, double x) {
  const int d = arr.d();
  int count = 0;
  double pivot = 1.0;
  for (int i = 0; i <= d; ++i) {
    const double off2 =
        i == 0 ? 0.0
               : static_cast<double>(arr.b(i - 1)) * static_cast<double>(arr.c(i));
    double next = (static_cast<double>(arr.a(i)) - x) -
                  (pivot == 0.0 ? std::abs(off2) / 1e-300 : off2 / pivot);
    if (next == 0.0) next = -1e-300;
    if (next < 0.0) ++count;
    pivot = next;
  }
  return count;
}

std::vector<double> bisection_eigenvalues(const IntersectionArray& arr) {
  const int d = arr.d();
  const double k = static_cast<double>(arr.k());
  std::vector<double> out;
  for (int j = 0; j <= d; ++j) {
    double lo = -k - 1.0, hi = k + 1.0;
    // Find the (d - j)-th smallest eigenvalue, i.e. the j-th largest.
    const int want = d - j + 1;  // #eigenvalues <= target
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (eigenvalues_below(arr, mid) >= want)
        hi = mid;
      else
        lo = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

void check_close_vectors(const std::vector<double>& got,
                         const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (size_t i = 0; i < got.size(); ++i)
    CHECK(std::abs(got[i] - want[i]) <=
          tol * std::max(1.0, std::abs(want[i])));
}

}  // namespace

TEST_CASE("intersection array validation") {
  CHECK_THROWS_AS(IntersectionArray::create({3, 2}, {1, 2}), InvalidArrayError);
  CHECK_THROWS_AS(IntersectionArray::create({3, 2, 1}, {1, 2}),
                  InvalidArrayError);
  CHECK_THROWS_AS(IntersectionArray::create({3, 2, 1}, {2, 2, 3}),
                  InvalidArrayError);
  CHECK_THROWS_AS(IntersectionArray::create({3, 0, 1}, {1, 2, 3}),
                  InvalidArrayError);
  // a_1 = k - b_1 - c_1 < 0.
  CHECK_THROWS_AS(IntersectionArray::create({2, 2, 1}, {1, 1, 2}),
                  InvalidArrayError);
  // k_3 = 3 * 2 * 1 / (2 * 2) is not an integer.
  CHECK_THROWS_AS(IntersectionArray::create({3, 2, 1}, {1, 2, 2}),
                  InvalidArrayError);

  const IntersectionArray cube = IntersectionArray::create({3, 2, 1}, {1, 2, 3});
  CHECK(cube.d() == 3);
  CHECK(cube.k() == 3);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.valencies() == std::vector<long long>{1, 3, 3, 1});
  CHECK(cube.a(1) == 0);
  CHECK(cube.b(3) == 0);
  CHECK(cube.c(0) == 0);
}

TEST_CASE("intersection array json round trip and error handling") {
  const IntersectionArray arr = array_of("dodecahedron");
  const IntersectionArray back = IntersectionArray::from_json(arr.to_json());
  CHECK(back == arr);
  CHECK(back.vertex_count() == 20);

  CHECK_THROWS_AS(IntersectionArray::from_json(json::parse("{}")), InputError);
  CHECK_THROWS_AS(
      IntersectionArray::from_json(json::parse(R"({"b":[3,2,1]})")),
      InputError);
  CHECK_THROWS_AS(IntersectionArray::from_json(
                      json::parse(R"({"b":[3,2.5,1],"c":[1,2,3]})")),
                  InputError);
  CHECK_THROWS_AS(IntersectionArray::from_json(
                      json::parse(R"({"b":"x","c":[1,2,3]})")),
                  InputError);
}

TEST_CASE("eigenvalues match the bisection oracle on every fixture") {
  for (const auto& name : corpus::fixture_names()) {
    CAPTURE(name);
    const IntersectionArray arr = array_of(name);
    const std::vector<double> got = eigenvalues_from_array(arr);
    const std::vector<double> oracle = bisection_eigenvalues(arr);
    check_close_vectors(got, oracle, 1e-9);
    CHECK(got.front() == doctest::Approx(static_cast<double>(arr.k())));
    for (size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1] > got[i]);
  }
}

TEST_CASE("pinned eigenvalues of known graphs") {
  check_close_vectors(eigenvalues_from_array(array_of("gh_2_1")),
                      {4.0, 1.0 + kSqrt2, 1.0 - kSqrt2, -2.0}, 1e-10);
  check_close_vectors(
      eigenvalues_from_array(array_of("dodecahedron")),
      {3.0, kSqrt5, 1.0, 0.0, -2.0, -kSqrt5}, 1e-10);
  check_close_vectors(eigenvalues_from_array(array_of("wells")),
                      {5.0, kSqrt5, 1.0, -kSqrt5, -3.0}, 1e-10);
  check_close_vectors(eigenvalues_from_array(array_of("icosahedron")),
                      {5.0, kSqrt5, -1.0, -kSqrt5}, 1e-10);
}

TEST_CASE("standard sequences satisfy the three-term recurrence exactly") {
  for (const auto& name : corpus::fixture_names()) {
    CAPTURE(name);
    const IntersectionArray arr = array_of(name);
    const int d = arr.d();
    for (double theta : eigenvalues_from_array(arr)) {
      const std::vector<double> u = standard_sequence(arr, theta);
      REQUIRE(static_cast<int>(u.size()) == d + 1);
      CHECK(u[0] == 1.0);
      CHECK(u[1] ==
            doctest::Approx(theta / static_cast<double>(arr.k())).epsilon(1e-12));
      // Tridiagonal action: c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i,
      // including the closing row i = d.
      for (int i = 0; i <= d; ++i) {
        const double prev = i > 0 ? u[i - 1] : 0.0;
        const double next = i < d ? u[i + 1] : 0.0;
        const double lhs = static_cast<double>(arr.c(i)) * prev +
                           static_cast<double>(arr.a(i)) * u[i] +
                           static_cast<double>(arr.b(i)) * next;
        CHECK(std::abs(lhs - theta * u[i]) <= 1e-10 * std::max(1.0, std::abs(theta)));
      }
    }
  }
}

TEST_CASE("multiplicities are positive integers summing to n") {
  for (const auto& name : corpus::fixture_names()) {
    CAPTURE(name);
    const SpectralData s = analyze_spectra(array_of(name));
    double total = 0.0;
    for (double mj : s.m) {
      CHECK(std::abs(mj - std::round(mj)) <= 1e-6);
      CHECK(mj >= 1.0 - 1e-6);
      total += mj;
    }
    CHECK(std::abs(total - static_cast<double>(s.n)) <= 1e-6 * s.n);
    CHECK(s.m[0] == doctest::Approx(1.0));
  }
}

TEST_CASE("pinned multiplicities") {
  check_close_vectors(analyze_spectra(array_of("dodecahedron")).m,
                      {1, 3, 5, 4, 4, 3}, 1e-9);
  check_close_vectors(analyze_spectra(array_of("gh_2_1")).m, {1, 6, 6, 8},
                      1e-9);
  check_close_vectors(analyze_spectra(array_of("wells")).m, {1, 8, 10, 8, 5},
                      1e-9);
  check_close_vectors(analyze_spectra(array_of("j_6_3")).m, {1, 5, 9, 5},
                      1e-9);
}

TEST_CASE("spherical-function orthogonality across eigenvalues") {
  // sum_i k_i u_i(theta_j) u_i(theta_l) = delta_{jl} n / m_j; the diagonal
  // case defines m_j, the off-diagonal case is an independent identity.
  for (const auto& name : corpus::fixture_names()) {
    CAPTURE(name);
    const SpectralData s = analyze_spectra(array_of(name));
    const auto& k = s.arr.valencies();
    for (int j = 0; j <= s.d(); ++j)
      for (int l = 0; l <= s.d(); ++l) {
        double sum = 0.0;
        for (int i = 0; i <= s.d(); ++i)
          sum += static_cast<double>(k[i]) * s.u(i, j) * s.u(i, l);
        const double want = j == l ? static_cast<double>(s.n) / s.m[j] : 0.0;
        CHECK(std::abs(sum - want) <= 1e-8 * std::max(1.0, std::abs(want)));
      }
  }
}

TEST_CASE("dual eigenvalues: pinned values and leading entry") {
  const SpectralData s = analyze_spectra(array_of("dodecahedron"));
  check_close_vectors(dual_eigenvalues(s, 1).theta_star,
                      {3.0, kSqrt5, 1.0, -1.0, -kSqrt5, -3.0}, 1e-10);
  for (const auto& name : corpus::fixture_names()) {
    CAPTURE(name);
    const SpectralData sd = analyze_spectra(array_of(name));
    for (int j = 1; j <= sd.d(); ++j)
      CHECK(dual_eigenvalues(sd, j).theta_star[0] ==
            doctest::Approx(sd.m[j]).epsilon(1e-10));
  }
  CHECK_THROWS_AS(dual_eigenvalues(s, 0), InputError);
  CHECK_THROWS_AS(dual_eigenvalues(s, 6), InputError);
}

TEST_CASE("eigenvalue refinement is a stable fixed point") {
  for (const auto& name : {"dodecahedron", "wells", "gh_2_1", "h_5_2"}) {
    CAPTURE(name);
    const IntersectionArray arr = array_of(name);
    const std::vector<double> theta = eigenvalues_from_array(arr);
    // Perturb each eigenvalue and let Newton polish pull it back.
    std::vector<double> noisy = theta;
    for (size_t i = 0; i < noisy.size(); ++i)
      noisy[i] += (i % 2 == 0 ? 1.0 : -1.0) * 1e-7 * (1.0 + std::abs(noisy[i]));
    std::vector<double> polished = refine_eigenvalues(arr, noisy);
    polished = refine_eigenvalues(arr, polished);
    polished = refine_eigenvalues(arr, polished);
    check_close_vectors(polished, theta, 1e-9);
  }
}

TEST_CASE("degeneracy pattern matches the structural tags") {
  struct Tagged {
    const char* name;
    bool bipartite, antipodal;
  };
  for (const auto& t : {Tagged{"h_3_2", true, true}, Tagged{"c_6", true, true},
                        Tagged{"c_7", false, false}, Tagged{"c_8", true, true},
                        Tagged{"j_6_3", false, true},
                        Tagged{"icosahedron", false, true},
                        Tagged{"dodecahedron", false, true},
                        Tagged{"gh_2_1", false, false},
                        Tagged{"wells", false, true},
                        Tagged{"h_4_2", true, true},
                        Tagged{"h_5_2", true, true}}) {
    CAPTURE(t.name);
    const SpectralData s = analyze_spectra(array_of(t.name));
    CHECK(dual_degeneracy_consistent(s, t.bipartite, t.antipodal));
    // Claiming the wrong tags must break the biconditional whenever the
    // graph actually has a degeneracy pattern.
    if (t.bipartite || t.antipodal)
      CHECK_FALSE(dual_degeneracy_consistent(s, false, false));
  }
  // A primitive graph's pattern is incompatible with imprimitive claims.
  const SpectralData gh = analyze_spectra(array_of("gh_2_1"));
  CHECK_FALSE(dual_degeneracy_consistent(gh, true, false));
  CHECK_FALSE(dual_degeneracy_consistent(gh, false, true));
}

TEST_CASE("idempotent projections satisfy the projector algebra") {
  for (const auto& name : {"c_7", "h_3_2", "icosahedron"}) {
    CAPTURE(name);
    const Graph g = corpus::get_fixture(name).graph;
    const DistanceMatrices dm = distance_matrices(g);
    const SpectralData s = analyze_spectra(
        IntersectionArray::from_intersection_numbers(check_distance_regular(g)));
    const auto E = all_idempotents(dm, s);
    const Eigen::MatrixXd A = dm.A[1].cast<double>();

    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(g.n, g.n);
    for (int j = 0; j <= s.d(); ++j) {
      sum += E[j];
      CHECK(max_abs(Eigen::MatrixXd(E[j] * E[j] - E[j])) <= 1e-9);
      CHECK(max_abs(Eigen::MatrixXd(A * E[j] - s.theta[j] * E[j])) <= 1e-8);
      CHECK(E[j].trace() == doctest::Approx(s.m[j]).epsilon(1e-8));
      if (j > 0)
        CHECK(max_abs(Eigen::MatrixXd(E[0] * E[j])) <= 1e-9);
    }
    CHECK(max_abs(Eigen::MatrixXd(
              sum - Eigen::MatrixXd::Identity(g.n, g.n))) <= 1e-9);
    // E_0 = J/n.
    CHECK(max_abs(Eigen::MatrixXd(
              E[0] - Eigen::MatrixXd::Constant(g.n, g.n, 1.0 / g.n))) <= 1e-9);
  }
}

TEST_CASE("spectral data rebuilt from external eigenvalues agrees") {
  const IntersectionArray arr = array_of("wells");
  const SpectralData a = analyze_spectra(arr);
  const SpectralData b = spectral_data_from_eigenvalues(arr, a.theta);
  for (int j = 0; j <= a.d(); ++j) {
    CHECK(a.m[j] == doctest::Approx(b.m[j]).epsilon(1e-12));
    for (int i = 0; i <= a.d(); ++i)
      CHECK(a.u(i, j) == doctest::Approx(b.u(i, j)).epsilon(1e-12));
  }
}
