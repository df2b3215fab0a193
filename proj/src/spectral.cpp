#include <Eigen/Dense>
#include <cmath>

#include "hyperline/error.hpp"
#include "hyperline/metrics.hpp"

#include "metrics_common.hpp"

namespace hyperline {

namespace {

// Component subgraph in local contiguous indices.
struct Subgraph {
  std::vector<std::vector<std::uint32_t>> adjacency;
  std::vector<double> inv_sqrt_degree;
};

Subgraph extract_component(const detail::GraphView& view, const ComponentLabeling& labeling,
                           NodeId component_label) {
  std::vector<std::uint32_t> local(view.size(), UINT32_MAX);
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < view.size(); ++i) {
    if (labeling.labels[i] == component_label) {
      local[i] = static_cast<std::uint32_t>(members.size());
      members.push_back(i);
    }
  }
  if (members.size() < 2)
    throw std::invalid_argument("algebraic_connectivity: component needs >= 2 nodes");

  Subgraph sub;
  sub.adjacency.resize(members.size());
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::uint32_t j : view.adjacent(members[a])) sub.adjacency[a].push_back(local[j]);

  sub.inv_sqrt_degree.resize(members.size());
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (sub.adjacency[a].empty())
      throw std::invalid_argument("algebraic_connectivity: component is not connected");
    sub.inv_sqrt_degree[a] = 1.0 / std::sqrt(static_cast<double>(sub.adjacency[a].size()));
  }
  return sub;
}

// y = Lhat x with Lhat = I - D^{-1/2} A D^{-1/2}.
void apply_normalized_laplacian(const Subgraph& sub, const std::vector<double>& x,
                                std::vector<double>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    double acc = 0.0;
    for (std::uint32_t j : sub.adjacency[i]) acc += sub.inv_sqrt_degree[j] * x[j];
    y[i] = x[i] - sub.inv_sqrt_degree[i] * acc;
  }
}

double residual_norm(const Subgraph& sub, const std::vector<double>& x, double lambda) {
  std::vector<double> lx(x.size());
  apply_normalized_laplacian(sub, x, lx);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double r = lx[i] - lambda * x[i];
    acc += r * r;
  }
  return std::sqrt(acc);
}

SpectralResult dense_lambda2(const Subgraph& sub) {
  const auto n = static_cast<Eigen::Index>(sub.adjacency.size());
  Eigen::MatrixXd lhat = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (std::uint32_t j : sub.adjacency[i])
      lhat(i, j) -= sub.inv_sqrt_degree[i] * sub.inv_sqrt_degree[j];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lhat);
  SpectralResult result;
  result.lambda2 = solver.eigenvalues()(1);
  Eigen::VectorXd v = solver.eigenvectors().col(1);
  std::vector<double> x(v.data(), v.data() + v.size());
  result.residual = residual_norm(sub, x, result.lambda2);
  result.iterations = 0;
  return result;
}

// Power iteration on M = 2.5 I - Lhat (spectrum in [0.5, 2.5], top eigenpair
// is the trivial D^{1/2} 1), deflating the trivial eigenvector so the
// iterate converges to the pair carrying lambda2.
SpectralResult iterative_lambda2(const Subgraph& sub, double tol, std::size_t iteration_cap) {
  const std::size_t n = sub.adjacency.size();
  constexpr double kShift = 2.5;

  std::vector<double> trivial(n);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    trivial[i] = 1.0 / sub.inv_sqrt_degree[i];  // sqrt(deg)
    norm += trivial[i] * trivial[i];
  }
  norm = std::sqrt(norm);
  for (double& t : trivial) t /= norm;

  // Deterministic start vector, projected away from the trivial direction.
  std::vector<double> x(n), y(n);
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < n; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    x[i] = static_cast<double>((state >> 11) & 0xffffff) / double(0xffffff) - 0.5;
  }

  auto orthonormalize = [&](std::vector<double>& v) {
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += v[i] * trivial[i];
    for (std::size_t i = 0; i < n; ++i) v[i] -= dot * trivial[i];
    double nn = 0.0;
    for (double t : v) nn += t * t;
    nn = std::sqrt(nn);
    if (nn < 1e-300) throw ConvergenceError("spectral: degenerate iterate", 1.0, 0);
    for (double& t : v) t /= nn;
  };
  orthonormalize(x);

  SpectralResult result;
  double best_residual = std::numeric_limits<double>::infinity();
  for (std::size_t iter = 1; iter <= iteration_cap; ++iter) {
    apply_normalized_laplacian(sub, x, y);
    for (std::size_t i = 0; i < n; ++i) y[i] = kShift * x[i] - y[i];  // y = M x
    x.swap(y);
    orthonormalize(x);

    // One further application gives the Rayleigh quotient of the fresh
    // iterate and its residual together.
    apply_normalized_laplacian(sub, x, y);
    double lambda2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda2 += x[i] * y[i];
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = y[i] - lambda2 * x[i];
      res += r * r;
    }
    res = std::sqrt(res);

    if (res < best_residual) best_residual = res;
    if (res <= tol) {
      result.lambda2 = lambda2;
      result.iterations = iter;
      result.residual = res;
      return result;
    }
  }
  throw ConvergenceError("algebraic_connectivity: no convergence within iteration cap",
                         best_residual, iteration_cap);
}

}  // namespace

SpectralResult algebraic_connectivity(const LineGraph& g, const ComponentLabeling& labeling,
                                      NodeId component_label, double tol) {
  detail::GraphView view(g);
  if (labeling.labels.size() != view.size())
    throw std::invalid_argument("algebraic_connectivity: labeling does not match graph");
  Subgraph sub = extract_component(view, labeling, component_label);
  if (sub.adjacency.size() <= kSpectralDenseLimit) return dense_lambda2(sub);
  return iterative_lambda2(sub, tol, kSpectralIterationCap);
}

}  // namespace hyperline
