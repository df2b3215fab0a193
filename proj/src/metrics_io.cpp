#include <algorithm>
#include <ostream>

#include "hyperline/metrics.hpp"

namespace hyperline {

namespace {

std::int64_t resolve(const LineGraph& g, std::size_t index, std::span<const std::int64_t> labels) {
  NodeId original = g.original_of(g.nodes[index]);
  return labels.empty() ? static_cast<std::int64_t>(original) : labels[original];
}

}  // namespace

void write_metric_tsv(std::ostream& out, const LineGraph& g, std::span<const double> values,
                      std::span<const std::int64_t> labels) {
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out << resolve(g, i, labels) << "\t" << values[i] << "\n";
}

void write_components_tsv(std::ostream& out, const LineGraph& g, const ComponentLabeling& labeling,
                          std::span<const std::int64_t> labels) {
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    // The label is a node ID; report it in the same space as the node column.
    std::size_t label_index =
        std::lower_bound(g.nodes.begin(), g.nodes.end(), labeling.labels[i]) - g.nodes.begin();
    out << resolve(g, i, labels) << "\t" << resolve(g, label_index, labels) << "\n";
  }
}

}  // namespace hyperline
