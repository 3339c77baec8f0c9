#include "drg/qpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "drg/errors.hpp"

namespace drg {

int RepresentationDiagram::degree(int v) const {
  int deg = 0;
  for (int w = 0; w <= d; ++w)
    if (adj[v][w]) ++deg;
  return deg;
}

std::vector<int> RepresentationDiagram::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 0; w <= d; ++w)
    if (adj[v][w]) out.push_back(w);
  return out;
}

std::string RepresentationDiagram::to_dot() const {
  std::ostringstream out;
  out << "graph DeltaE {\n";
  for (int v = 0; v <= d; ++v)
    if (degree(v) == 0) out << "  " << v << ";\n";
  for (int i = 0; i <= d; ++i)
    for (int l = i + 1; l <= d; ++l)
      if (adj[i][l]) out << "  " << i << " -- " << l << ";\n";
  out << "}\n";
  return out.str();
}

RepresentationDiagram representation_diagram(const KreinTensor& kt, int j) {
  if (j < 1 || j > kt.d)
    throw InputError("idempotent index " + std::to_string(j) +
                     " out of range 1.." + std::to_string(kt.d));
  RepresentationDiagram g;
  g.j = j;
  g.d = kt.d;
  g.adj.assign(kt.d + 1, std::vector<bool>(kt.d + 1, false));
  for (int i = 0; i <= kt.d; ++i)
    for (int l = 0; l <= kt.d; ++l)
      if (i != l && !kt.is_zero(j, i, l)) g.adj[i][l] = true;
  return g;
}

bool is_connected(const RepresentationDiagram& g) {
  std::vector<char> seen(g.d + 1, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w <= g.d; ++w)
      if (g.adj[v][w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.d + 1;
}

bool is_tail(const KreinTensor& kt, int j) {
  if (j < 1 || j > kt.d)
    throw InputError("idempotent index " + std::to_string(j) +
                     " out of range 1.." + std::to_string(kt.d));
  int support = 0;
  for (int h = 0; h <= kt.d; ++h)
    if (h != 0 && h != j && !kt.is_zero(h, j, j)) ++support;
  return support <= 1;
}

std::optional<TTRWitness> ttr_witness(const DualEigenvalueSequence& ds,
                                      double tol) {
  const auto& t = ds.theta_star;
  const int d = static_cast<int>(t.size()) - 1;
  const double bound = tol * std::max(1.0, max_abs(t));

  double beta, gamma;
  if (std::abs(t[1] - t[2]) > bound) {
    // Equations at i = 1, 2 determine the witness uniquely.
    beta = (t[0] - t[1] + t[2] - t[3]) / (t[1] - t[2]);
    gamma = t[0] - beta * t[1] + t[2];
  } else {
    // Degenerate leading coefficients: minimum-norm least squares over all
    // d-1 equations theta*_i beta + gamma = theta*_{i-1} + theta*_{i+1}.
    Eigen::MatrixXd M(d - 1, 2);
    Eigen::VectorXd rhs(d - 1);
    for (int i = 1; i <= d - 1; ++i) {
      M(i - 1, 0) = t[i];
      M(i - 1, 1) = 1.0;
      rhs(i - 1) = t[i - 1] + t[i + 1];
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(M);
    Eigen::Vector2d sol = cod.solve(rhs);
    beta = sol(0);
    gamma = sol(1);
  }

  double residual = 0;
  for (int i = 1; i <= d - 1; ++i)
    residual =
        std::max(residual, std::abs(t[i - 1] - beta * t[i] + t[i + 1] - gamma));
  if (residual > bound) return std::nullopt;

  TTRWitness w;
  w.beta = beta;
  w.gamma_star = gamma;
  w.delta_star =
      t[0] * t[0] - beta * t[0] * t[1] + t[1] * t[1] - gamma * (t[0] + t[1]);
  w.residual = residual;
  return w;
}

bool condition_iii(const DualEigenvalueSequence& ds, double tol) {
  const auto& t = ds.theta_star;
  const double bound = tol * std::max(1.0, max_abs(t));
  for (size_t i = 1; i < t.size(); ++i)
    if (std::abs(t[i] - t[0]) <= bound) return false;
  return true;
}

std::optional<std::vector<int>> q_polynomial_ordering(
    const RepresentationDiagram& g) {
  int endpoints = 0;
  for (int v = 0; v <= g.d; ++v) {
    const int deg = g.degree(v);
    if (deg == 1)
      ++endpoints;
    else if (deg != 2)
      return std::nullopt;
  }
  if (endpoints != 2 || g.degree(0) != 1) return std::nullopt;

  std::vector<int> order{0};
  int prev = -1, cur = 0;
  while (true) {
    int next = -1;
    for (int w = 0; w <= g.d; ++w)
      if (g.adj[cur][w] && w != prev) {
        next = w;
        break;
      }
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != g.d + 1) return std::nullopt;
  return order;
}

ClassificationReport classify_idempotent(const SpectralData& s,
                                         const KreinTensor& kt, int j,
                                         double tol) {
  const auto ds = dual_eigenvalues(s, j);
  ClassificationReport rep;
  rep.j = j;
  rep.tail = is_tail(kt, j);
  rep.ttr = ttr_witness(ds, tol);
  rep.condition_iii = condition_iii(ds, tol);
  rep.ordering = q_polynomial_ordering(representation_diagram(kt, j));
  rep.q_polynomial = rep.ordering.has_value();
  rep.theorem_consistent =
      rep.q_polynomial ==
      (rep.tail && rep.ttr.has_value() && rep.condition_iii);
  return rep;
}

std::vector<ClassificationReport> classify_all(const SpectralData& s,
                                               const KreinTensor& kt,
                                               double tol) {
  std::vector<ClassificationReport> reports;
  reports.reserve(s.d());
  for (int j = 1; j <= s.d(); ++j)
    reports.push_back(classify_idempotent(s, kt, j, tol));
  return reports;
}

double eigenvalue_recurrence_check(const SpectralData& s,
                                   const ClassificationReport& rep) {
  if (!rep.q_polynomial || !rep.ordering)
    throw MissingWitnessError("recurrence check requires a path ordering");
  if (!rep.ttr)
    throw MissingWitnessError("recurrence check requires a recurrence witness");
  const auto& sigma = *rep.ordering;
  const double bp1 = rep.ttr->beta + 1.0;
  const int d = s.d();
  double residual = 0;
  for (int i = 2; i <= d - 1; ++i) {
    const double r = s.theta[sigma[i + 1]] - bp1 * s.theta[sigma[i]] +
                     bp1 * s.theta[sigma[i - 1]] - s.theta[sigma[i - 2]];
    residual = std::max(residual, std::abs(r));
  }
  return residual;
}

nlohmann::json ClassificationReport::to_json() const {
  nlohmann::json rep{{"j", j},
                     {"tail", tail},
                     {"condition_iii", condition_iii},
                     {"q_polynomial", q_polynomial},
                     {"theorem_consistent", theorem_consistent}};
  if (ttr) {
    rep["ttr"] = nlohmann::json{{"beta", round_sig(ttr->beta)},
                                {"gamma_star", round_sig(ttr->gamma_star)},
                                {"delta_star", round_sig(ttr->delta_star)},
                                {"residual", round_sig(ttr->residual)}};
  } else {
    rep["ttr"] = nullptr;
  }
  if (ordering)
    rep["ordering"] = *ordering;
  else
    rep["ordering"] = nullptr;
  return rep;
}

}  // namespace drg
