#include <thread>

#include "hyperline/metrics.hpp"

#include "metrics_common.hpp"

namespace hyperline {

namespace {

// One Brandes source sweep: BFS counts shortest paths, then dependencies are
// accumulated walking the BFS order backwards.
struct BrandesWorkspace {
  std::vector<std::int32_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<std::uint32_t> order;

  explicit BrandesWorkspace(std::size_t n) : dist(n), sigma(n), delta(n) { order.reserve(n); }

  void run(const detail::GraphView& view, std::uint32_t source, std::vector<double>& acc) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();

    dist[source] = 0;
    sigma[source] = 1.0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::uint32_t u = order[head];
      for (std::uint32_t v : view.adjacent(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          order.push_back(v);
        }
        if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
      }
    }

    for (std::size_t k = order.size(); k-- > 1;) {  // skip the source itself
      std::uint32_t w = order[k];
      for (std::uint32_t v : view.adjacent(w))
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      acc[w] += delta[w];
    }
  }
};

}  // namespace

CentralityVector s_betweenness(const LineGraph& g, bool normalized, unsigned workers) {
  if (workers == 0) throw std::invalid_argument("s_betweenness: workers must be >= 1");
  detail::GraphView view(g);
  const std::size_t k = view.size();

  std::vector<std::vector<double>> partial(workers, std::vector<double>(k, 0.0));
  auto run_sources = [&](unsigned w) {
    BrandesWorkspace ws(k);
    for (std::uint32_t source = w; source < k; source += workers)
      ws.run(view, source, partial[w]);
  };
  if (workers == 1) {
    run_sources(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_sources, w);
    pool.clear();  // join
  }

  CentralityVector out;
  out.normalized = normalized;
  out.values.assign(k, 0.0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < k; ++i) out.values[i] += p[i];

  // Brandes sums ordered pairs; unordered-pair scores are half that.
  for (double& x : out.values) x *= 0.5;
  if (normalized) {
    const double kd = static_cast<double>(k);
    const double denom = k >= 3 ? 0.5 * (kd - 1.0) * (kd - 2.0) : 1.0;
    for (double& x : out.values) x /= denom;
  }
  return out;
}

}  // namespace hyperline
