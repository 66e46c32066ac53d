#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chorn/exponent.hpp"

namespace chorn {

// Finite simple graph with labeled vertices. No loops, no multi-edges,
// symmetric adjacency.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<int> vertices, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<int>& vertices() const { return vertices_; }
  bool has_vertex(int v) const;
  bool has_edge(int u, int v) const;
  const std::set<int>& neighbors(int v) const;
  // Deduplicated, each edge once as (min, max), sorted.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

 private:
  std::vector<int> vertices_;  // sorted ascending
  std::map<int, std::set<int>> adj_;
};

// Vertices labeled 1..n. Rejects out-of-range labels and loop edges.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

enum class FamilyKind {
  Path,
  Cycle,
  Star,
  Complete,
  PathInfinite,
  StarInfinite,
  Explicit,
};

// A graph family; infinite kinds are only ever materialized on a finite
// vertex window (induced subgraph of the conceptual infinite graph).
struct GraphFamily {
  FamilyKind kind = FamilyKind::Explicit;
  int size = 0;          // for finite kinds
  Graph explicit_graph;  // for Explicit

  bool is_infinite() const {
    return kind == FamilyKind::PathInfinite || kind == FamilyKind::StarInfinite;
  }
};

// Labeled as in the usual figures: paths/cycles consecutively, star center 1.
// Cycle requires n >= 3; others n >= 1.
Graph family_graph(FamilyKind kind, int n);

// Materializes a family on a finite window. Finite kinds ignore the window
// when it is empty and return the full graph; infinite kinds require one.
Graph materialize(const GraphFamily& family, const std::vector<int>& window);

Graph induced_subgraph(const Graph& g, const std::set<int>& s);

// Blow-up: vertex i becomes a clique of size m_i; cliques of adjacent
// vertices are completely joined. New labels are 1..M assigned in
// (original vertex, copy index) order; `origin[new_label - 1]` records that
// pair.
struct JoinGraph {
  Graph graph;
  std::vector<std::pair<int, int>> origin;
};
JoinGraph join_graph(const Graph& g, const ExponentVector& m);

// Perfect elimination ordering: every vertex's earlier neighbors form a
// clique.
struct PEOrdering {
  std::vector<int> order;  // position = rank
  std::map<int, std::set<int>> earlier_neighbors;
};

struct PeoViolation {
  int vertex = 0;                       // first vertex (in order) violating
  std::pair<int, int> nonadjacent{0, 0};  // an earlier non-adjacent pair
};

// nullopt means the ordering is a valid PEO. Throws if `order` is not a
// permutation of the vertices.
std::optional<PeoViolation> check_peo(const Graph& g,
                                      const std::vector<int>& order);
bool verify_peo(const Graph& g, const std::vector<int>& order);

// Maximum-cardinality search (lowest label tie-break), verified before
// return. Absent iff the graph is not chordal.
std::optional<PEOrdering> find_peo(const Graph& g);

// Oracle: true iff no vertex subset induces a cycle C_k, k >= 4. Intended
// for small graphs only.
bool is_chordal_bruteforce(const Graph& g);

// CLI graph mini-language: "P:n", "C:n", "S:n", "K:n", "Pinf", "Sinf",
// "file:<path>" (first line vertex count, then "u v" per edge, 1-indexed).
GraphFamily parse_graph_spec(const std::string& spec);
std::string family_to_string(const GraphFamily& family);

}  // namespace chorn
