#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drg/krein.hpp"

namespace drg {

// Graph on the index set {0..d}: i ~ l iff i != l and q(j,i,l) is nonzero.
// Vertex 0 is always adjacent to j alone.
struct RepresentationDiagram {
  int j = 0;
  int d = 0;
  std::vector<std::vector<bool>> adj;

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::string to_dot() const;
};

RepresentationDiagram representation_diagram(const KreinTensor& kt, int j);

bool is_connected(const RepresentationDiagram& g);

// At most one index h outside {0, j} with q(h,j,j) nonzero.
bool is_tail(const KreinTensor& kt, int j);

// theta*_{i-1} - beta theta*_i + theta*_{i+1} = gamma* for 1 <= i <= d-1,
// with delta* the shared value of the companion quadratic form at i = 1.
struct TTRWitness {
  double beta = 0;
  double gamma_star = 0;
  double delta_star = 0;
  double residual = 0;
};

std::optional<TTRWitness> ttr_witness(const DualEigenvalueSequence& ds,
                                      double tol = kDefaultTol);

// min_{1<=i<=d} |theta*_i - theta*_0| > tol * max|theta*|
bool condition_iii(const DualEigenvalueSequence& ds, double tol = kDefaultTol);

// The vertex sequence of the diagram when it is a path starting at 0 and
// covering all d+1 indices; nullopt otherwise.
std::optional<std::vector<int>> q_polynomial_ordering(
    const RepresentationDiagram& g);

struct ClassificationReport {
  int j = 0;
  bool tail = false;
  std::optional<TTRWitness> ttr;
  bool condition_iii = false;
  bool q_polynomial = false;
  std::optional<std::vector<int>> ordering;
  // q_polynomial agrees with (tail && ttr && condition_iii)
  bool theorem_consistent = false;

  nlohmann::json to_json() const;
};

ClassificationReport classify_idempotent(const SpectralData& s,
                                         const KreinTensor& kt, int j,
                                         double tol = kDefaultTol);

std::vector<ClassificationReport> classify_all(const SpectralData& s,
                                               const KreinTensor& kt,
                                               double tol = kDefaultTol);

// Max residual of theta_{s(i+1)} - (beta+1) theta_{s(i)}
//                + (beta+1) theta_{s(i-1)} - theta_{s(i-2)} over 2 <= i <= d-1
// along the report's path ordering s. Requires a q-polynomial report with a
// TTR witness; throws MissingWitnessError otherwise.
double eigenvalue_recurrence_check(const SpectralData& s,
                                   const ClassificationReport& rep);

}  // namespace drg
