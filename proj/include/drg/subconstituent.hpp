#pragma once

#include <optional>
#include <vector>

#include "drg/qpoly.hpp"

namespace drg {

// Diagonal dual structure relative to a base vertex x. The dual idempotent
// E*_i is the 0/1 diagonal selecting the distance-i sphere around x; the dual
// distance matrix A*_i is diagonal with entries theta*(i) at the distance of
// each vertex from x. Both are stored as diagonal vectors.
struct SubconstituentContext {
  int x = 0;
  long long n = 0;
  int d = 0;
  std::vector<int> dist_from_x;
  std::vector<Eigen::VectorXd> estar;    // E*_i diagonals
  std::vector<Eigen::VectorXd> astar;    // A*_i diagonals; astar[0] == 1
  std::vector<Eigen::VectorXd> a_basis;  // A_i x-hat (0/1 sphere indicators)
  std::vector<Eigen::VectorXd> e_basis;  // E_i x-hat = A*_i 1 / n
};

SubconstituentContext build_context(const DistanceMatrices& dm,
                                    const SpectralData& s, int x);

// Max-entry residual of A*_j v = n (E_j x-hat) o v, where the left side uses
// the context (dual-eigenvalue route) and the right side the projector E_j.
double hadamard_action_residual(const SubconstituentContext& ctx,
                                const Eigen::MatrixXd& Ej, int j,
                                const Eigen::VectorXd& v);

// Max-entry residual of E_h A*_i E_j x-hat = q(h,i,j) E_h x-hat.
double triple_product_residual(const SubconstituentContext& ctx,
                               const std::vector<Eigen::MatrixXd>& E,
                               const KreinTensor& kt, int h, int i, int j);

// Distance of v = E_h A*_i E_j x-hat from the line spanned by w = E_h x-hat:
// max-entry norm of v - lambda w (lambda the least-squares multiple),
// relative to max(1, |v|). Small iff v is a multiple of w.
double span_collinearity_residual(const SubconstituentContext& ctx,
                                  const std::vector<Eigen::MatrixXd>& E,
                                  int h, int i, int j);

struct VanishingViolation {
  int h = 0, i = 0, j = 0;
  bool dual = false;  // false: E*_h A_i E*_j vs p; true: E_h A*_i E_j vs q
  double norm = 0;
};

// Asserts the two support biconditionals over all (d+1)^3 triples:
//   E*_h A_i E*_j = 0  iff  p(h,i,j) = 0
//   E_h A*_i E_j  = 0  iff  q(h,i,j) is classified zero
// Returns the list of violations (empty on success).
std::vector<VanishingViolation> vanishing_checks(
    const SubconstituentContext& ctx, const DistanceMatrices& dm,
    const IntersectionNumbers& num, const std::vector<Eigen::MatrixXd>& E,
    const KreinTensor& kt, double tol = kDefaultTol);

// Max-entry norm of [A*, M] with
// M = A*A*A - beta A*AA* + AA*A* - gamma* (AA* + A*A) - delta* A,
// where A* = A*_j. Throws MissingWitnessError when no witness is supplied.
double commutator_residual(const SubconstituentContext& ctx,
                           const DistanceMatrices& dm, int j,
                           const std::optional<TTRWitness>& w);

// Same residual divided by max(1, |M| |A*|) (max-entry norms), for
// comparison against a bare tolerance.
double commutator_relative_residual(const SubconstituentContext& ctx,
                                    const DistanceMatrices& dm, int j,
                                    const std::optional<TTRWitness>& w);

// Max-entry residual of the projector-facing context identities:
// (A*_i)_yy = n (E_i)_xy and E_i x-hat = e_basis[i].
double context_projector_residual(const SubconstituentContext& ctx,
                                  const std::vector<Eigen::MatrixXd>& E);

}  // namespace drg
