#include <cmath>

#include "hyperline/error.hpp"
#include "hyperline/metrics.hpp"

#include "metrics_common.hpp"

namespace hyperline {

CentralityVector pagerank(const LineGraph& g, double damping, double tol,
                          std::size_t max_iterations) {
  if (!(damping > 0.0 && damping < 1.0))
    throw std::invalid_argument("pagerank: damping must be in (0, 1)");
  detail::GraphView view(g);
  const std::size_t k = view.size();

  CentralityVector out;
  out.normalized = true;
  if (k == 0) return out;

  // Fixed point of x = (1-d)/k + d * P x where P is the random-walk matrix
  // with zero columns at isolated nodes: their mass is not redistributed, so
  // they settle at teleport-only weight. The final vector is rescaled to a
  // unit sum.
  std::vector<double> x(k, 1.0 / static_cast<double>(k)), next(k);
  const double teleport = (1.0 - damping) / static_cast<double>(k);

  std::size_t iter = 0;
  double residual = 0.0;
  for (iter = 1; iter <= max_iterations; ++iter) {
    for (std::size_t i = 0; i < k; ++i) {
      double acc = 0.0;
      for (std::uint32_t j : view.adjacent(i))
        acc += x[j] / static_cast<double>(view.degree(j));
      next[i] = teleport + damping * acc;
    }
    residual = 0.0;
    for (std::size_t i = 0; i < k; ++i) residual += std::abs(next[i] - x[i]);
    x.swap(next);
    if (residual < tol) break;
  }
  if (iter > max_iterations)
    throw ConvergenceError("pagerank: no convergence within iteration cap", residual,
                           max_iterations);

  double sum = 0.0;
  for (double v : x) sum += v;
  for (double& v : x) v /= sum;
  out.values = std::move(x);
  return out;
}

}  // namespace hyperline
