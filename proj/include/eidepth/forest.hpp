#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eidepth {

/// Simple undirected graph on vertices 1..num_vertices. Isolated vertices are
/// kept: each one contributes an ambient ring variable. Construction rejects
/// self-loops, duplicate edges and out-of-range indices; acyclicity is a
/// separate check applied where a forest is actually required.
struct Forest {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted, unique

  static Forest from_edge_list(const std::vector<std::pair<int, int>>& pairs,
                               int num_vertices);

  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v) - 1].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v) - 1]; }
  bool is_leaf(int v) const { return degree(v) == 1; }
  bool is_isolated(int v) const { return degree(v) == 0; }

 private:
  std::vector<std::vector<int>> adj_;
};

Forest path_graph(int n);

/// Uniformly random labeled tree on n vertices (Pruefer decoding),
/// deterministic per seed.
Forest random_tree(int n, std::uint64_t seed);

bool is_acyclic(const Forest& f);

/// All connected components, including singletons, each sorted ascending.
std::vector<std::vector<int>> components(const Forest& f);

/// Max distance between two vertices of the given component (double BFS).
/// Throws if the vertex set is not connected in f.
int diameter(const Forest& f, const std::vector<int>& component);

/// Vertices of the component that are not leaves and whose neighborhood has
/// at most one non-leaf (leaf/non-leaf judged in the whole graph).
std::vector<int> near_leaves(const Forest& f, const std::vector<int>& component);

struct ForestStats {
  std::vector<std::vector<int>> components;  // only components with >= 2 vertices
  int p = 0;                                 // count of those components
  std::vector<int> diameters;                // one per component, same order
  std::optional<int> d;                      // max diameter; absent when p == 0
  std::optional<int> q;                      // near-leaf count of the chosen max-diameter component
  std::vector<int> isolated_vertices;
};

/// Component/diameter/near-leaf statistics of a forest. Ties on the maximal
/// diameter resolve to the component containing the smallest vertex index.
/// Throws if f has a cycle.
ForestStats stats(const Forest& f);

struct Bipartition {
  bool bipartite = false;
  std::vector<int> color;      // 0/1 per vertex when bipartite
  std::vector<int> odd_cycle;  // witness cycle when not
};

Bipartition bipartition(const Forest& f);

struct DiameterPath {
  std::vector<int> path;        // realizes the diameter, endpoints first/last
  int leaf_end = 0;             // the first path vertex; a leaf when d >= 1
  int y = 0;                    // its unique neighbor on the path
  std::vector<int> y_neighbors;
};

/// A path realizing the diameter of a tree with d >= 1, plus the neighbor set
/// of the leaf endpoint's unique neighbor. Checks that on both ends of the
/// path the inner neighbor has at most one non-leaf neighbor.
DiameterPath maximal_diameter_path(const Forest& f);

/// Text format: "n <numVertices>" then one "u v" pair per line; '#' comments.
Forest parse_edge_list(std::istream& in);
Forest parse_edge_list_file(const std::string& path);
std::string format_edge_list(const Forest& f);

/// Short stable hash of the canonical edge list, for report rows.
std::string graph_hash(const Forest& f);

}  // namespace eidepth
