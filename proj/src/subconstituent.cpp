#include "drg/subconstituent.hpp"

#include <cmath>

#include "drg/errors.hpp"

namespace drg {

SubconstituentContext build_context(const DistanceMatrices& dm,
                                    const SpectralData& s, int x) {
  if (x < 0 || x >= dm.n)
    throw InputError("base vertex " + std::to_string(x) + " out of range");
  SubconstituentContext ctx;
  ctx.x = x;
  ctx.n = dm.n;
  ctx.d = dm.d;
  ctx.dist_from_x = dm.dist[x];

  const int d = dm.d;
  ctx.estar.assign(d + 1, Eigen::VectorXd::Zero(dm.n));
  for (int y = 0; y < dm.n; ++y) ctx.estar[ctx.dist_from_x[y]](y) = 1.0;

  ctx.astar.assign(d + 1, Eigen::VectorXd::Zero(dm.n));
  ctx.astar[0] = Eigen::VectorXd::Ones(dm.n);  // n (E_0)_xy = 1
  for (int i = 1; i <= d; ++i) {
    const auto ds = dual_eigenvalues(s, i);
    for (int y = 0; y < dm.n; ++y)
      ctx.astar[i](y) = ds.theta_star[ctx.dist_from_x[y]];
  }

  ctx.a_basis = ctx.estar;  // A_i x-hat is the distance-i sphere indicator
  ctx.e_basis.assign(d + 1, Eigen::VectorXd::Zero(dm.n));
  for (int i = 0; i <= d; ++i)
    ctx.e_basis[i] = ctx.astar[i] / static_cast<double>(dm.n);
  return ctx;
}

double hadamard_action_residual(const SubconstituentContext& ctx,
                                const Eigen::MatrixXd& Ej, int j,
                                const Eigen::VectorXd& v) {
  if (j < 0 || j > ctx.d)
    throw InputError("idempotent index out of range");
  const Eigen::VectorXd lhs = ctx.astar[j].cwiseProduct(v);
  const Eigen::VectorXd rhs =
      static_cast<double>(ctx.n) * Ej.col(ctx.x).cwiseProduct(v);
  return max_abs(Eigen::VectorXd(lhs - rhs));
}

double triple_product_residual(const SubconstituentContext& ctx,
                               const std::vector<Eigen::MatrixXd>& E,
                               const KreinTensor& kt, int h, int i, int j) {
  const Eigen::VectorXd xhat_j = E[j].col(ctx.x);
  const Eigen::VectorXd lhs = E[h] * ctx.astar[i].cwiseProduct(xhat_j);
  const Eigen::VectorXd rhs = kt.q(h, i, j) * E[h].col(ctx.x);
  return max_abs(Eigen::VectorXd(lhs - rhs));
}

double span_collinearity_residual(const SubconstituentContext& ctx,
                                  const std::vector<Eigen::MatrixXd>& E,
                                  int h, int i, int j) {
  const Eigen::VectorXd v =
      E[h] * ctx.astar[i].cwiseProduct(Eigen::VectorXd(E[j].col(ctx.x)));
  const Eigen::VectorXd w = E[h].col(ctx.x);
  const double lambda = v.dot(w) / w.dot(w);
  return max_abs(Eigen::VectorXd(v - lambda * w)) / std::max(1.0, max_abs(v));
}

std::vector<VanishingViolation> vanishing_checks(
    const SubconstituentContext& ctx, const DistanceMatrices& dm,
    const IntersectionNumbers& num, const std::vector<Eigen::MatrixXd>& E,
    const KreinTensor& kt, double tol) {
  std::vector<VanishingViolation> out;
  const int d = ctx.d;

  // E*_h A_i E*_j is integral: its support is the set of pairs (y,z) with
  // dist(x,y) = h, dist(y,z) = i, dist(x,z) = j.
  for (int h = 0; h <= d; ++h)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) {
        long long entries = 0;
        for (int y = 0; y < dm.n && entries == 0; ++y) {
          if (ctx.dist_from_x[y] != h) continue;
          for (int z = 0; z < dm.n; ++z)
            if (ctx.dist_from_x[z] == j && dm.dist[y][z] == i) {
              entries = 1;
              break;
            }
        }
        if ((entries == 0) != (num.p(h, i, j) == 0))
          out.push_back({h, i, j, false, static_cast<double>(entries)});
      }

  for (int i = 0; i <= d; ++i) {
    const Eigen::MatrixXd Astar_i = ctx.astar[i].asDiagonal();
    const double op_scale =
        std::max(1.0, max_abs(Eigen::VectorXd(ctx.astar[i])));
    for (int h = 0; h <= d; ++h) {
      const Eigen::MatrixXd left = E[h] * Astar_i;
      for (int j = 0; j <= d; ++j) {
        const double norm = max_abs(Eigen::MatrixXd(left * E[j]));
        if ((norm < tol * op_scale) != kt.is_zero(h, i, j))
          out.push_back({h, i, j, true, norm});
      }
    }
  }
  return out;
}

namespace {

std::pair<double, double> commutator_parts(const SubconstituentContext& ctx,
                                           const DistanceMatrices& dm, int j,
                                           const std::optional<TTRWitness>& w) {
  if (!w)
    throw MissingWitnessError(
        "commutator residual requires a recurrence witness");
  const Eigen::VectorXd& ds = ctx.astar.at(j);
  const Eigen::MatrixXd A = dm.A[1].cast<double>();

  // With A* diagonal, left/right multiplications are row/column scalings.
  const Eigen::MatrixXd DA = ds.asDiagonal() * A;    // A* A
  const Eigen::MatrixXd AD = A * ds.asDiagonal();    // A A*
  const Eigen::MatrixXd M = ds.asDiagonal() * DA     // A* A* A
                            - w->beta * (DA * ds.asDiagonal())
                            + AD * ds.asDiagonal()   // A A* A*
                            - w->gamma_star * (AD + DA) - w->delta_star * A;
  const Eigen::MatrixXd C = ds.asDiagonal() * M - M * ds.asDiagonal();
  return {max_abs(C), max_abs(M) * max_abs(Eigen::VectorXd(ds))};
}

}  // namespace

double commutator_residual(const SubconstituentContext& ctx,
                           const DistanceMatrices& dm, int j,
                           const std::optional<TTRWitness>& w) {
  return commutator_parts(ctx, dm, j, w).first;
}

double commutator_relative_residual(const SubconstituentContext& ctx,
                                    const DistanceMatrices& dm, int j,
                                    const std::optional<TTRWitness>& w) {
  const auto [residual, scale] = commutator_parts(ctx, dm, j, w);
  return residual / std::max(1.0, scale);
}

double context_projector_residual(const SubconstituentContext& ctx,
                                  const std::vector<Eigen::MatrixXd>& E) {
  double res = 0;
  for (int i = 0; i <= ctx.d; ++i) {
    const Eigen::VectorXd col =
        static_cast<double>(ctx.n) * E[i].col(ctx.x);
    res = std::max(res, max_abs(Eigen::VectorXd(ctx.astar[i] - col)));
    res = std::max(
        res, max_abs(Eigen::VectorXd(ctx.e_basis[i] - E[i].col(ctx.x))));
  }
  return res;
}

}  // namespace drg
