#include "chorn/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chorn {

namespace {

const std::set<int> kEmptySet;

}  // namespace

Graph::Graph(std::vector<int> vertices,
             const std::vector<std::pair<int, int>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw std::invalid_argument("duplicate vertex label");
  }
  vertices_ = std::move(vertices);
  for (int v : vertices_) adj_[v];  // materialize empty neighbor sets
  for (const auto& [u, v] : edges) {
    if (u == v) {
      throw std::invalid_argument("loop edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    }
    if (!has_vertex(u) || !has_vertex(v)) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) +
                                  ") uses an unknown vertex label");
    }
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
}

bool Graph::has_vertex(int v) const { return adj_.count(v) != 0; }

bool Graph::has_edge(int u, int v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

const std::set<int>& Graph::neighbors(int v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
  }
  return it->second;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> result;
  for (const auto& [u, nbrs] : adj_) {
    for (int v : nbrs) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<int> vertices(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) vertices[static_cast<size_t>(i)] = i + 1;
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range 1.." +
                                  std::to_string(n));
    }
  }
  return Graph(std::move(vertices), edges);
}

Graph family_graph(FamilyKind kind, int n) {
  std::vector<std::pair<int, int>> edges;
  switch (kind) {
    case FamilyKind::Path:
      if (n < 1) throw std::invalid_argument("Path requires n >= 1");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case FamilyKind::Cycle:
      if (n < 3) throw std::invalid_argument("Cycle requires n >= 3");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n, 1);
      break;
    case FamilyKind::Star:
      if (n < 1) throw std::invalid_argument("Star requires n >= 1");
      for (int i = 2; i <= n; ++i) edges.emplace_back(1, i);
      break;
    case FamilyKind::Complete:
      if (n < 1) throw std::invalid_argument("Complete requires n >= 1");
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
      break;
    default:
      throw std::invalid_argument("family_graph: not a finite family kind");
  }
  return build_graph(n, edges);
}

Graph materialize(const GraphFamily& family, const std::vector<int>& window) {
  std::set<int> s(window.begin(), window.end());
  switch (family.kind) {
    case FamilyKind::Explicit:
      return window.empty() ? family.explicit_graph
                            : induced_subgraph(family.explicit_graph, s);
    case FamilyKind::PathInfinite: {
      if (window.empty()) {
        throw std::invalid_argument("infinite family requires a finite window");
      }
      std::vector<std::pair<int, int>> edges;
      for (int v : s) {
        if (s.count(v + 1)) edges.emplace_back(v, v + 1);
      }
      return Graph(window, edges);
    }
    case FamilyKind::StarInfinite: {
      if (window.empty()) {
        throw std::invalid_argument("infinite family requires a finite window");
      }
      std::vector<std::pair<int, int>> edges;
      if (s.count(1)) {
        for (int v : s) {
          if (v != 1) edges.emplace_back(1, v);
        }
      }
      return Graph(window, edges);
    }
    default: {
      Graph g = family_graph(family.kind, family.size);
      return window.empty() ? g : induced_subgraph(g, s);
    }
  }
}

Graph induced_subgraph(const Graph& g, const std::set<int>& s) {
  for (int v : s) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("unknown vertex " + std::to_string(v) +
                                  " in induced subgraph");
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (s.count(u) && s.count(v)) edges.emplace_back(u, v);
  }
  return Graph(std::vector<int>(s.begin(), s.end()), edges);
}

JoinGraph join_graph(const Graph& g, const ExponentVector& m) {
  for (int v : m.support()) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("supp(m) contains unknown vertex " +
                                  std::to_string(v));
    }
  }
  JoinGraph result;
  std::map<int, std::vector<int>> block;  // original vertex -> new labels
  int next = 1;
  for (const auto& [v, mult] : m.entries()) {
    for (int c = 1; c <= mult; ++c) {
      block[v].push_back(next);
      result.origin.emplace_back(v, c);
      ++next;
    }
  }
  std::vector<int> vertices(static_cast<size_t>(next - 1));
  for (int i = 1; i < next; ++i) vertices[static_cast<size_t>(i - 1)] = i;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [v, labels] : block) {
    for (size_t a = 0; a < labels.size(); ++a)
      for (size_t b = a + 1; b < labels.size(); ++b)
        edges.emplace_back(labels[a], labels[b]);
  }
  for (const auto& [u, labels_u] : block) {
    for (const auto& [v, labels_v] : block) {
      if (u < v && g.has_edge(u, v)) {
        for (int a : labels_u)
          for (int b : labels_v) edges.emplace_back(a, b);
      }
    }
  }
  result.graph = Graph(std::move(vertices), edges);
  return result;
}

std::optional<PeoViolation> check_peo(const Graph& g,
                                      const std::vector<int>& order) {
  std::set<int> seen(order.begin(), order.end());
  if (order.size() != static_cast<size_t>(g.vertex_count()) ||
      seen.size() != order.size() ||
      !std::all_of(order.begin(), order.end(),
                   [&](int v) { return g.has_vertex(v); })) {
    throw std::invalid_argument("order is not a permutation of the vertices");
  }
  std::set<int> earlier;
  for (int v : order) {
    std::vector<int> enbrs;
    for (int u : g.neighbors(v)) {
      if (earlier.count(u)) enbrs.push_back(u);
    }
    for (size_t i = 0; i < enbrs.size(); ++i) {
      for (size_t j = i + 1; j < enbrs.size(); ++j) {
        if (!g.has_edge(enbrs[i], enbrs[j])) {
          return PeoViolation{v, {enbrs[i], enbrs[j]}};
        }
      }
    }
    earlier.insert(v);
  }
  return std::nullopt;
}

bool verify_peo(const Graph& g, const std::vector<int>& order) {
  return !check_peo(g, order).has_value();
}

std::optional<PEOrdering> find_peo(const Graph& g) {
  // Maximum-cardinality search. With the "earlier neighbors form a clique"
  // convention the MCS visiting order itself is the candidate PEO.
  std::map<int, int> weight;
  for (int v : g.vertices()) weight[v] = 0;
  std::set<int> remaining(g.vertices().begin(), g.vertices().end());
  std::vector<int> order;
  while (!remaining.empty()) {
    int best = 0;
    int best_weight = -1;
    for (int v : remaining) {  // ascending: lowest label wins ties
      if (weight[v] > best_weight) {
        best = v;
        best_weight = weight[v];
      }
    }
    order.push_back(best);
    remaining.erase(best);
    for (int u : g.neighbors(best)) {
      if (remaining.count(u)) ++weight[u];
    }
  }
  if (check_peo(g, order).has_value()) {
    return std::nullopt;  // MCS yields a PEO iff the graph is chordal
  }
  PEOrdering peo;
  peo.order = order;
  std::set<int> earlier;
  for (int v : order) {
    std::set<int> enbrs;
    for (int u : g.neighbors(v)) {
      if (earlier.count(u)) enbrs.insert(u);
    }
    peo.earlier_neighbors[v] = std::move(enbrs);
    earlier.insert(v);
  }
  return peo;
}

namespace {

// Does `s` induce a cycle in g? (connected, |s| edges, every degree 2)
bool induces_cycle(const Graph& g, const std::vector<int>& s) {
  std::set<int> in(s.begin(), s.end());
  int edge_count = 0;
  for (int v : s) {
    int deg = 0;
    for (int u : g.neighbors(v)) {
      if (in.count(u)) ++deg;
    }
    if (deg != 2) return false;
    edge_count += deg;
  }
  if (edge_count != 2 * static_cast<int>(s.size())) return false;
  // degrees all 2 and |edges| == |s|; connectivity distinguishes one cycle
  // from a disjoint union of cycles
  std::set<int> visited;
  std::vector<int> stack{s[0]};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!visited.insert(v).second) continue;
    for (int u : g.neighbors(v)) {
      if (in.count(u) && !visited.count(u)) stack.push_back(u);
    }
  }
  return visited.size() == s.size();
}

}  // namespace

bool is_chordal_bruteforce(const Graph& g) {
  const auto& vs = g.vertices();
  int n = g.vertex_count();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (__builtin_popcountl(mask) < 4) continue;
    std::vector<int> subset;
    for (int i = 0; i < n; ++i) {
      if (mask & (1ul << i)) subset.push_back(vs[static_cast<size_t>(i)]);
    }
    if (induces_cycle(g, subset)) return false;
  }
  return true;
}

GraphFamily parse_graph_spec(const std::string& spec) {
  GraphFamily family;
  if (spec == "Pinf") {
    family.kind = FamilyKind::PathInfinite;
    return family;
  }
  if (spec == "Sinf") {
    family.kind = FamilyKind::StarInfinite;
    return family;
  }
  if (spec.rfind("file:", 0) == 0) {
    std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    int n = 0;
    if (!(in >> n)) throw std::invalid_argument("graph file: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    int u = 0, v = 0;
    while (in >> u >> v) edges.emplace_back(u, v);
    family.kind = FamilyKind::Explicit;
    family.explicit_graph = build_graph(n, edges);
    family.size = n;
    return family;
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos || colon + 1 >= spec.size()) {
    throw std::invalid_argument("bad graph spec '" + spec +
                                "' (expected P:n, C:n, S:n, K:n, Pinf, Sinf, "
                                "or file:<path>)");
  }
  std::string head = spec.substr(0, colon);
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad size in graph spec '" + spec + "'");
  }
  if (head == "P") family.kind = FamilyKind::Path;
  else if (head == "C") family.kind = FamilyKind::Cycle;
  else if (head == "S") family.kind = FamilyKind::Star;
  else if (head == "K") family.kind = FamilyKind::Complete;
  else throw std::invalid_argument("unknown family '" + head + "'");
  family.size = n;
  family_graph(family.kind, n);  // validate size now
  return family;
}

std::string family_to_string(const GraphFamily& family) {
  switch (family.kind) {
    case FamilyKind::Path: return "P:" + std::to_string(family.size);
    case FamilyKind::Cycle: return "C:" + std::to_string(family.size);
    case FamilyKind::Star: return "S:" + std::to_string(family.size);
    case FamilyKind::Complete: return "K:" + std::to_string(family.size);
    case FamilyKind::PathInfinite: return "Pinf";
    case FamilyKind::StarInfinite: return "Sinf";
    case FamilyKind::Explicit: {
      std::ostringstream out;
      out << "explicit(n=" << family.explicit_graph.vertex_count()
          << ",m=" << family.explicit_graph.edge_count() << ")";
      return out.str();
    }
  }
  return "?";
}

}  // namespace chorn
