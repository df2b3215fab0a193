#include "hyperline/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "hyperline/error.hpp"

namespace hyperline {

namespace {

void check_labels(std::vector<Label>& labels, std::size_t count, const char* what) {
  if (labels.empty()) {
    labels.resize(count);
    std::iota(labels.begin(), labels.end(), Label{0});
  } else if (labels.size() != count) {
    throw std::invalid_argument(std::string("Hypergraph: ") + what + " label count mismatch");
  }
}

}  // namespace

Hypergraph Hypergraph::from_incidences(VertexId n, EdgeId m,
                                       std::vector<std::pair<EdgeId, VertexId>> pairs,
                                       std::vector<Label> edge_labels,
                                       std::vector<Label> vertex_labels) {
  for (const auto& [e, v] : pairs) {
    if (e >= m) throw std::invalid_argument("Hypergraph: edge id out of range");
    if (v >= n) throw std::invalid_argument("Hypergraph: vertex id out of range");
  }
  std::sort(pairs.begin(), pairs.end());
  auto dup = std::adjacent_find(pairs.begin(), pairs.end());
  if (dup != pairs.end()) {
    throw std::invalid_argument("Hypergraph: duplicate incidence (edge " +
                                std::to_string(dup->first) + ", vertex " +
                                std::to_string(dup->second) + ")");
  }

  Hypergraph h;
  check_labels(edge_labels, m, "edge");
  check_labels(vertex_labels, n, "vertex");
  h.edge_labels_ = std::move(edge_labels);
  h.vertex_labels_ = std::move(vertex_labels);

  h.edge_offsets_.assign(m + 1, 0);
  h.vertex_offsets_.assign(n + 1, 0);
  for (const auto& [e, v] : pairs) {
    ++h.edge_offsets_[e + 1];
    ++h.vertex_offsets_[v + 1];
  }
  std::partial_sum(h.edge_offsets_.begin(), h.edge_offsets_.end(), h.edge_offsets_.begin());
  std::partial_sum(h.vertex_offsets_.begin(), h.vertex_offsets_.end(), h.vertex_offsets_.begin());

  h.edge_members_.resize(pairs.size());
  h.vertex_edges_.resize(pairs.size());
  // pairs are sorted by (edge, vertex): edge rows fill in order, already sorted.
  std::vector<std::size_t> cursor(h.vertex_offsets_.begin(), h.vertex_offsets_.end() - 1);
  std::size_t k = 0;
  for (const auto& [e, v] : pairs) {
    h.edge_members_[k++] = v;
    h.vertex_edges_[cursor[v]++] = e;
  }
  return h;
}

Hypergraph Hypergraph::from_edge_lists(VertexId n, std::vector<std::vector<VertexId>> edges,
                                       std::vector<Label> edge_labels,
                                       std::vector<Label> vertex_labels) {
  std::vector<std::pair<EdgeId, VertexId>> pairs;
  std::size_t nnz = 0;
  for (const auto& e : edges) nnz += e.size();
  pairs.reserve(nnz);
  for (EdgeId e = 0; e < edges.size(); ++e)
    for (VertexId v : edges[e]) pairs.emplace_back(e, v);
  return from_incidences(n, static_cast<EdgeId>(edges.size()), std::move(pairs),
                         std::move(edge_labels), std::move(vertex_labels));
}

std::vector<VertexId> Hypergraph::isolated_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < num_vertices(); ++v)
    if (vertex_degree(v) == 0) out.push_back(v);
  return out;
}

std::vector<EdgeId> Hypergraph::empty_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < num_edges(); ++e)
    if (edge_size(e) == 0) out.push_back(e);
  return out;
}

// ---------------------------------------------------------------------------
// Loading

namespace {

struct LineReader {
  explicit LineReader(std::istream& is) : in(is) {}

  std::istream& in;
  std::size_t line_no = 0;
  std::string line;

  bool next() {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return true;
    }
    return false;
  }
};

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

// Parses whitespace-separated non-negative integers; returns how many of
// `out_count` fields were found, throwing on garbage.
template <class T>
std::size_t parse_fields(const std::string& s, std::size_t line_no, T* out, std::size_t out_count) {
  const char* p = s.data();
  const char* end = s.data() + s.size();
  std::size_t found = 0;
  while (true) {
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (p == end) break;
    if (found == out_count)
      throw ParseError("line " + std::to_string(line_no) + ": trailing data '" +
                           std::string(p, end) + "'",
                       line_no);
    T value{};
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || (next < end && !std::isspace(static_cast<unsigned char>(*next))))
      throw ParseError("line " + std::to_string(line_no) + ": malformed integer field in '" + s + "'",
                       line_no);
    out[found++] = value;
    p = next;
  }
  return found;
}

Hypergraph load_tsv_pairs(std::istream& in) {
  LineReader reader(in);
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  while (reader.next()) {
    if (is_blank(reader.line) || reader.line[0] == '#') continue;
    std::int64_t fields[2];
    std::size_t got = parse_fields(reader.line, reader.line_no, fields, 2);
    if (got != 2)
      throw ParseError("line " + std::to_string(reader.line_no) + ": expected <edge> <vertex>",
                       reader.line_no);
    if (fields[0] < 0 || fields[1] < 0)
      throw ParseError("line " + std::to_string(reader.line_no) + ": negative id", reader.line_no);
    raw.emplace_back(fields[0], fields[1]);
  }

  // Compact external IDs to contiguous internal IDs in ascending external order.
  std::vector<Label> edge_ids, vertex_ids;
  edge_ids.reserve(raw.size());
  vertex_ids.reserve(raw.size());
  for (const auto& [e, v] : raw) {
    edge_ids.push_back(e);
    vertex_ids.push_back(v);
  }
  auto compact = [](std::vector<Label>& ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  };
  compact(edge_ids);
  compact(vertex_ids);
  auto index_of = [](const std::vector<Label>& ids, Label x) {
    return static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  };

  std::vector<std::pair<EdgeId, VertexId>> pairs;
  pairs.reserve(raw.size());
  for (const auto& [e, v] : raw)
    pairs.emplace_back(index_of(edge_ids, e), index_of(vertex_ids, v));

  std::sort(pairs.begin(), pairs.end());
  auto dup = std::adjacent_find(pairs.begin(), pairs.end());
  if (dup != pairs.end()) {
    throw ParseError("duplicate incidence: edge " + std::to_string(edge_ids[dup->first]) +
                     ", vertex " + std::to_string(vertex_ids[dup->second]));
  }
  const auto n = static_cast<VertexId>(vertex_ids.size());
  const auto m = static_cast<EdgeId>(edge_ids.size());
  return Hypergraph::from_incidences(n, m, std::move(pairs), std::move(edge_ids),
                                     std::move(vertex_ids));
}

Hypergraph load_matrix_market(std::istream& in) {
  LineReader reader(in);
  if (!reader.next()) throw ParseError("matrix market: empty stream", 0);

  std::istringstream banner(reader.line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
  };
  if (tag != "%%MatrixMarket" || lower(object) != "matrix")
    throw ParseError("line 1: not a MatrixMarket matrix banner", 1);
  if (lower(format) != "coordinate")
    throw ParseError("line 1: only coordinate format supported", 1);
  field = lower(field);
  if (field != "pattern" && field != "integer")
    throw ParseError("line 1: field must be pattern or integer, got '" + field + "'", 1);
  if (lower(symmetry) != "general")
    throw ParseError("line 1: only general symmetry supported", 1);
  const bool has_value = field == "integer";

  // Skip comments to the size line.
  std::size_t dims[3];
  while (true) {
    if (!reader.next()) throw ParseError("matrix market: missing size line", reader.line_no);
    if (reader.line.empty() || reader.line[0] == '%') continue;
    if (parse_fields(reader.line, reader.line_no, dims, 3) != 3)
      throw ParseError("line " + std::to_string(reader.line_no) + ": expected '<rows> <cols> <nnz>'",
                       reader.line_no);
    break;
  }
  const std::size_t n = dims[0], m = dims[1], nnz = dims[2];

  std::vector<std::pair<EdgeId, VertexId>> pairs;
  pairs.reserve(nnz);
  std::size_t seen = 0;
  while (seen < nnz) {
    if (!reader.next())
      throw ParseError("matrix market: expected " + std::to_string(nnz) + " entries, got " +
                           std::to_string(seen),
                       reader.line_no);
    if (reader.line.empty() || reader.line[0] == '%') continue;
    std::int64_t f[3];
    std::size_t want = has_value ? 3u : 2u;
    if (parse_fields(reader.line, reader.line_no, f, want) != want)
      throw ParseError("line " + std::to_string(reader.line_no) + ": expected " +
                           std::to_string(want) + " fields",
                       reader.line_no);
    std::int64_t row = f[0], col = f[1];
    if (row < 1 || static_cast<std::size_t>(row) > n || col < 1 ||
        static_cast<std::size_t>(col) > m)
      throw ParseError("line " + std::to_string(reader.line_no) + ": index out of declared bounds",
                       reader.line_no);
    if (has_value && f[2] == 0)
      throw ParseError("line " + std::to_string(reader.line_no) +
                           ": explicit zero entry in Boolean incidence matrix",
                       reader.line_no);
    pairs.emplace_back(static_cast<EdgeId>(col - 1), static_cast<VertexId>(row - 1));
    ++seen;
  }

  std::sort(pairs.begin(), pairs.end());
  auto dup = std::adjacent_find(pairs.begin(), pairs.end());
  if (dup != pairs.end()) {
    throw ParseError("duplicate incidence: edge " + std::to_string(dup->first + 1) + ", vertex " +
                     std::to_string(dup->second + 1));
  }

  std::vector<Label> edge_labels(m), vertex_labels(n);
  std::iota(edge_labels.begin(), edge_labels.end(), Label{1});
  std::iota(vertex_labels.begin(), vertex_labels.end(), Label{1});
  return Hypergraph::from_incidences(static_cast<VertexId>(n), static_cast<EdgeId>(m),
                                     std::move(pairs), std::move(edge_labels),
                                     std::move(vertex_labels));
}

}  // namespace

Hypergraph load_hypergraph(std::istream& in, InputFormat format) {
  switch (format) {
    case InputFormat::TsvPairs:
      return load_tsv_pairs(in);
    case InputFormat::MatrixMarket:
      return load_matrix_market(in);
  }
  throw std::invalid_argument("load_hypergraph: unknown format");
}

Hypergraph load_hypergraph_file(const std::string& path, InputFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_hypergraph(in, format);
}

void write_tsv_pairs(std::ostream& out, const Hypergraph& h) {
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    for (VertexId v : h.edge_members(e))
      out << h.edge_label(e) << "\t" << h.vertex_label(v) << "\n";
}

// ---------------------------------------------------------------------------
// Preprocessing

RemoveIsolatedResult remove_isolated(const Hypergraph& h) {
  std::vector<EdgeId> keep_edges;
  std::vector<VertexId> keep_vertices;
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (h.edge_size(e) > 0) keep_edges.push_back(e);
  for (VertexId v = 0; v < h.num_vertices(); ++v)
    if (h.vertex_degree(v) > 0) keep_vertices.push_back(v);

  std::vector<VertexId> vertex_new(h.num_vertices());
  for (std::size_t i = 0; i < keep_vertices.size(); ++i) vertex_new[keep_vertices[i]] = static_cast<VertexId>(i);

  std::vector<std::pair<EdgeId, VertexId>> pairs;
  pairs.reserve(h.num_incidences());
  std::vector<Label> edge_labels, vertex_labels;
  edge_labels.reserve(keep_edges.size());
  vertex_labels.reserve(keep_vertices.size());
  for (std::size_t i = 0; i < keep_edges.size(); ++i) {
    for (VertexId v : h.edge_members(keep_edges[i]))
      pairs.emplace_back(static_cast<EdgeId>(i), vertex_new[v]);
    edge_labels.push_back(h.edge_label(keep_edges[i]));
  }
  for (VertexId v : keep_vertices) vertex_labels.push_back(h.vertex_label(v));

  RemoveIsolatedResult out{
      Hypergraph::from_incidences(static_cast<VertexId>(keep_vertices.size()),
                                  static_cast<EdgeId>(keep_edges.size()), std::move(pairs),
                                  std::move(edge_labels), std::move(vertex_labels)),
      IdMap(std::move(keep_vertices)), IdMap(std::move(keep_edges))};
  return out;
}

std::vector<EdgeId> RelabelOrder::inverse() const {
  std::vector<EdgeId> inv(permutation.size());
  for (EdgeId old_id = 0; old_id < permutation.size(); ++old_id) inv[permutation[old_id]] = old_id;
  return inv;
}

RelabelResult relabel_by_degree(const Hypergraph& h, RelabelVariant variant) {
  const EdgeId m = h.num_edges();
  std::vector<EdgeId> order(m);  // order[new_id] = old_id
  std::iota(order.begin(), order.end(), EdgeId{0});
  if (variant == RelabelVariant::AscendingByDegree) {
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId a, EdgeId b) { return h.edge_size(a) < h.edge_size(b); });
  } else if (variant == RelabelVariant::DescendingByDegree) {
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId a, EdgeId b) { return h.edge_size(a) > h.edge_size(b); });
  }

  std::vector<EdgeId> perm(m);  // old -> new
  for (EdgeId new_id = 0; new_id < m; ++new_id) perm[order[new_id]] = new_id;

  std::vector<std::pair<EdgeId, VertexId>> pairs;
  pairs.reserve(h.num_incidences());
  std::vector<Label> edge_labels(m);
  for (EdgeId new_id = 0; new_id < m; ++new_id) {
    EdgeId old_id = order[new_id];
    edge_labels[new_id] = h.edge_label(old_id);
    for (VertexId v : h.edge_members(old_id)) pairs.emplace_back(new_id, v);
  }

  RelabelResult out{
      Hypergraph::from_incidences(h.num_vertices(), m, std::move(pairs), std::move(edge_labels),
                                  {h.vertex_labels().begin(), h.vertex_labels().end()}),
      RelabelOrder{variant, std::move(perm)}};
  return out;
}

Hypergraph dual(const Hypergraph& h) {
  Hypergraph d;
  d.edge_offsets_ = h.vertex_offsets_;
  d.edge_members_ = h.vertex_edges_;
  d.vertex_offsets_ = h.edge_offsets_;
  d.vertex_edges_ = h.edge_members_;
  d.edge_labels_ = h.vertex_labels_;
  d.vertex_labels_ = h.edge_labels_;
  return d;
}

// ---------------------------------------------------------------------------
// Query algebra

namespace {

// Intersection size of k sorted lists by iterative pairwise merge.
template <class Get>
std::uint32_t sorted_multi_intersection(std::span<const std::uint32_t> ids, Get get) {
  std::vector<std::uint32_t> acc(get(ids[0]).begin(), get(ids[0]).end());
  std::vector<std::uint32_t> next;
  for (std::size_t i = 1; i < ids.size() && !acc.empty(); ++i) {
    auto other = get(ids[i]);
    next.clear();
    std::set_intersection(acc.begin(), acc.end(), other.begin(), other.end(),
                          std::back_inserter(next));
    acc.swap(next);
  }
  return static_cast<std::uint32_t>(acc.size());
}

}  // namespace

std::uint32_t inc(const Hypergraph& h, std::span<const EdgeId> edge_set) {
  if (edge_set.empty()) throw std::invalid_argument("inc: empty edge set");
  for (EdgeId e : edge_set)
    if (e >= h.num_edges()) throw std::invalid_argument("inc: edge id out of range");
  return sorted_multi_intersection(edge_set, [&](EdgeId e) { return h.edge_members(e); });
}

std::uint32_t adj(const Hypergraph& h, std::span<const VertexId> vertex_set) {
  if (vertex_set.empty()) throw std::invalid_argument("adj: empty vertex set");
  for (VertexId v : vertex_set)
    if (v >= h.num_vertices()) throw std::invalid_argument("adj: vertex id out of range");
  return sorted_multi_intersection(vertex_set, [&](VertexId v) { return h.vertex_edges(v); });
}

// ---------------------------------------------------------------------------
// Toplexes

namespace {

// a subset-of b for sorted lists.
bool is_subset(std::span<const VertexId> a, std::span<const VertexId> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<EdgeId> toplexes(const Hypergraph& h) {
  const EdgeId m = h.num_edges();
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), EdgeId{0});
  // Size-descending, ID-ascending: a duplicate set is met lowest-ID first, so
  // later copies test as subsets and drop out.
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return h.edge_size(a) > h.edge_size(b); });

  std::vector<EdgeId> maximal;
  for (EdgeId e : order) {
    bool contained = false;
    for (EdgeId f : maximal) {
      if (h.edge_size(f) < h.edge_size(e)) break;  // remaining candidates are smaller
      if (is_subset(h.edge_members(e), h.edge_members(f))) {
        contained = true;
        break;
      }
    }
    if (!contained) maximal.push_back(e);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

RestrictResult restrict_edges(const Hypergraph& h, std::span<const EdgeId> keep) {
  std::vector<std::pair<EdgeId, VertexId>> pairs;
  std::vector<Label> edge_labels;
  edge_labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("restrict_edges: keep list must be strictly ascending");
    if (keep[i] >= h.num_edges()) throw std::invalid_argument("restrict_edges: id out of range");
    for (VertexId v : h.edge_members(keep[i])) pairs.emplace_back(static_cast<EdgeId>(i), v);
    edge_labels.push_back(h.edge_label(keep[i]));
  }
  RestrictResult out{
      Hypergraph::from_incidences(h.num_vertices(), static_cast<EdgeId>(keep.size()),
                                  std::move(pairs), std::move(edge_labels),
                                  {h.vertex_labels().begin(), h.vertex_labels().end()}),
      IdMap({keep.begin(), keep.end()})};
  return out;
}

}  // namespace hyperline
