#include "thresh/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "thresh/errors.hpp"

namespace thresh {

SpectralProfile normalized_spectrum(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) throw PreconditionError("spectrum of the empty graph");
  if (g.min_degree() == 0) throw PreconditionError("normalized spectrum needs every degree >= 1");

  std::vector<double> inv_sqrt_deg(n);
  for (NodeId v = 0; v < n; ++v) inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));

  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : g.neighbors(v)) m(v, u) = inv_sqrt_deg[v] * inv_sqrt_deg[u];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InvariantViolation("eigensolver did not converge");

  SpectralProfile profile;
  const auto& values = solver.eigenvalues();  // ascending
  profile.eigenvalues.assign(values.data(), values.data() + dim);
  std::reverse(profile.eigenvalues.begin(), profile.eigenvalues.end());

  // Backward error of the QR iteration is a modest multiple of eps * ||M||,
  // with ||M||_2 = 1.
  profile.tolerance = 64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(std::max<std::size_t>(n, 16));
  profile.gamma = gamma(g);

  profile.lambda2 = profile.eigenvalues[1];
  profile.lambda_n = profile.eigenvalues.back();
  profile.sigma = std::max(std::abs(profile.lambda2), std::abs(profile.lambda_n));
  profile.disconnected = profile.lambda2 >= 1.0 - 1e-9;
  if (profile.disconnected) profile.sigma = 1.0;
  return profile;
}

double sigma(const Graph& g) { return normalized_spectrum(g).sigma; }

double gamma(const Graph& g) {
  if (g.max_degree() == 0) throw PreconditionError("gamma needs at least one edge");
  return static_cast<double>(g.min_degree()) / static_cast<double>(g.max_degree());
}

}  // namespace thresh
