#include "eidepth/forest.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eidepth {

Forest Forest::from_edge_list(const std::vector<std::pair<int, int>>& pairs,
                              int num_vertices) {
  if (num_vertices < 1)
    throw std::invalid_argument("from_edge_list: need at least one vertex");
  Forest f;
  f.num_vertices = num_vertices;
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : pairs) {
    if (u < 1 || u > num_vertices || v < 1 || v > num_vertices)
      throw std::invalid_argument("from_edge_list: vertex index out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("from_edge_list: self-loop at vertex " +
                                  std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("from_edge_list: duplicate edge (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
  }
  f.edges.assign(seen.begin(), seen.end());
  f.adj_.assign(static_cast<size_t>(num_vertices), {});
  for (auto [u, v] : f.edges) {
    f.adj_[static_cast<size_t>(u) - 1].push_back(v);
    f.adj_[static_cast<size_t>(v) - 1].push_back(u);
  }
  for (auto& nb : f.adj_) std::sort(nb.begin(), nb.end());
  return f;
}

Forest path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return Forest::from_edge_list(e, n);
}

Forest random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  if (n == 1) return Forest::from_edge_list({}, 1);
  if (n == 2) return Forest::from_edge_list({{1, 2}}, 2);
  std::mt19937_64 rng(seed);
  std::vector<int> pruefer(static_cast<size_t>(n) - 2);
  for (int& p : pruefer) p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  std::vector<int> deg(static_cast<size_t>(n) + 1, 1);
  for (int p : pruefer) ++deg[static_cast<size_t>(p)];
  std::vector<std::pair<int, int>> edges;
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
  for (int p : pruefer) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, p});
    if (--deg[static_cast<size_t>(p)] == 1) leaves.insert(p);
  }
  int u = *leaves.begin(), v = *std::next(leaves.begin());
  edges.push_back({u, v});
  return Forest::from_edge_list(edges, n);
}

bool is_acyclic(const Forest& f) {
  // a graph is a forest iff every component has |E| = |V| - 1
  std::vector<int> comp_id(static_cast<size_t>(f.num_vertices), -1);
  int ncomp = 0;
  for (int s = 1; s <= f.num_vertices; ++s) {
    if (comp_id[static_cast<size_t>(s) - 1] >= 0) continue;
    std::deque<int> bfs{s};
    comp_id[static_cast<size_t>(s) - 1] = ncomp;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop_front();
      for (int w : f.neighbors(u))
        if (comp_id[static_cast<size_t>(w) - 1] < 0) {
          comp_id[static_cast<size_t>(w) - 1] = ncomp;
          bfs.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<int> verts(static_cast<size_t>(ncomp), 0), eds(static_cast<size_t>(ncomp), 0);
  for (int v = 1; v <= f.num_vertices; ++v) ++verts[static_cast<size_t>(comp_id[static_cast<size_t>(v) - 1])];
  for (auto [u, v] : f.edges) ++eds[static_cast<size_t>(comp_id[static_cast<size_t>(u) - 1])];
  for (int c = 0; c < ncomp; ++c)
    if (eds[static_cast<size_t>(c)] != verts[static_cast<size_t>(c)] - 1) return false;
  return true;
}

std::vector<std::vector<int>> components(const Forest& f) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<size_t>(f.num_vertices), false);
  for (int s = 1; s <= f.num_vertices; ++s) {
    if (seen[static_cast<size_t>(s) - 1]) continue;
    std::vector<int> comp;
    std::deque<int> bfs{s};
    seen[static_cast<size_t>(s) - 1] = true;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop_front();
      comp.push_back(u);
      for (int w : f.neighbors(u))
        if (!seen[static_cast<size_t>(w) - 1]) {
          seen[static_cast<size_t>(w) - 1] = true;
          bfs.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// BFS distances from s, restricted to the given vertex set (-1 = unreached).
std::vector<int> bfs_distances(const Forest& f, int s, const std::set<int>& allowed) {
  std::vector<int> dist(static_cast<size_t>(f.num_vertices) + 1, -1);
  std::deque<int> bfs{s};
  dist[static_cast<size_t>(s)] = 0;
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop_front();
    for (int w : f.neighbors(u)) {
      if (!allowed.count(w) || dist[static_cast<size_t>(w)] >= 0) continue;
      dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
      bfs.push_back(w);
    }
  }
  return dist;
}

}  // namespace

int diameter(const Forest& f, const std::vector<int>& component) {
  if (component.empty()) throw std::invalid_argument("diameter: empty component");
  std::set<int> allowed(component.begin(), component.end());
  auto d0 = bfs_distances(f, component.front(), allowed);
  int far = component.front();
  for (int v : component) {
    if (d0[static_cast<size_t>(v)] < 0)
      throw std::invalid_argument("diameter: vertex set is not connected");
    if (d0[static_cast<size_t>(v)] > d0[static_cast<size_t>(far)]) far = v;
  }
  auto d1 = bfs_distances(f, far, allowed);
  int best = 0;
  for (int v : component) best = std::max(best, d1[static_cast<size_t>(v)]);
  return best;
}

std::vector<int> near_leaves(const Forest& f, const std::vector<int>& component) {
  std::vector<int> out;
  for (int v : component) {
    if (f.degree(v) <= 1) continue;
    int non_leaf_neighbors = 0;
    for (int w : f.neighbors(v))
      if (!f.is_leaf(w)) ++non_leaf_neighbors;
    if (non_leaf_neighbors <= 1) out.push_back(v);
  }
  return out;
}

ForestStats stats(const Forest& f) {
  if (!is_acyclic(f)) throw std::invalid_argument("stats: graph has a cycle");
  ForestStats s;
  for (auto& comp : components(f)) {
    if (comp.size() == 1) {
      s.isolated_vertices.push_back(comp.front());
      continue;
    }
    s.diameters.push_back(diameter(f, comp));
    s.components.push_back(comp);
  }
  s.p = static_cast<int>(s.components.size());
  if (s.p == 0) return s;
  s.d = *std::max_element(s.diameters.begin(), s.diameters.end());
  // components() yields components ordered by smallest vertex, so the first
  // one realizing d is the required tie-break choice
  for (size_t i = 0; i < s.components.size(); ++i)
    if (s.diameters[i] == *s.d) {
      s.q = static_cast<int>(near_leaves(f, s.components[i]).size());
      break;
    }
  return s;
}

Bipartition bipartition(const Forest& f) {
  Bipartition b;
  b.color.assign(static_cast<size_t>(f.num_vertices) + 1, -1);
  std::vector<int> parent(static_cast<size_t>(f.num_vertices) + 1, 0);
  for (int s = 1; s <= f.num_vertices; ++s) {
    if (b.color[static_cast<size_t>(s)] >= 0) continue;
    b.color[static_cast<size_t>(s)] = 0;
    std::deque<int> bfs{s};
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop_front();
      for (int w : f.neighbors(u)) {
        if (b.color[static_cast<size_t>(w)] < 0) {
          b.color[static_cast<size_t>(w)] = 1 - b.color[static_cast<size_t>(u)];
          parent[static_cast<size_t>(w)] = u;
          bfs.push_back(w);
        } else if (b.color[static_cast<size_t>(w)] == b.color[static_cast<size_t>(u)]) {
          // odd cycle: climb to the common ancestor of u and w
          std::vector<int> pu{u}, pw{w};
          while (pu.back() != 0) pu.push_back(parent[static_cast<size_t>(pu.back())]);
          while (pw.back() != 0) pw.push_back(parent[static_cast<size_t>(pw.back())]);
          std::set<int> on_pu(pu.begin(), pu.end());
          int meet = 0;
          for (int x : pw)
            if (on_pu.count(x)) {
              meet = x;
              break;
            }
          b.bipartite = false;
          for (int x : pu) {
            b.odd_cycle.push_back(x);
            if (x == meet) break;
          }
          std::vector<int> tail;
          for (int x : pw) {
            if (x == meet) break;
            tail.push_back(x);
          }
          std::reverse(tail.begin(), tail.end());
          b.odd_cycle.insert(b.odd_cycle.end(), tail.begin(), tail.end());
          return b;
        }
      }
    }
  }
  b.bipartite = true;
  b.color.erase(b.color.begin());  // drop the unused 0 slot
  return b;
}

DiameterPath maximal_diameter_path(const Forest& f) {
  if (!is_acyclic(f) || components(f).size() != 1)
    throw std::invalid_argument("maximal_diameter_path: not a tree");
  if (f.edges.empty())
    throw std::invalid_argument("maximal_diameter_path: tree has diameter 0");
  std::vector<int> all(static_cast<size_t>(f.num_vertices));
  for (int v = 1; v <= f.num_vertices; ++v) all[static_cast<size_t>(v) - 1] = v;
  std::set<int> allowed(all.begin(), all.end());
  auto d0 = bfs_distances(f, 1, allowed);
  int a = 1;
  for (int v = 1; v <= f.num_vertices; ++v)
    if (d0[static_cast<size_t>(v)] > d0[static_cast<size_t>(a)]) a = v;
  auto d1 = bfs_distances(f, a, allowed);
  int bvert = a;
  for (int v = 1; v <= f.num_vertices; ++v)
    if (d1[static_cast<size_t>(v)] > d1[static_cast<size_t>(bvert)]) bvert = v;
  // walk back from bvert to a along decreasing distance
  DiameterPath res;
  int cur = bvert;
  res.path.push_back(cur);
  while (cur != a) {
    for (int w : f.neighbors(cur))
      if (d1[static_cast<size_t>(w)] == d1[static_cast<size_t>(cur)] - 1) {
        cur = w;
        break;
      }
    res.path.push_back(cur);
  }
  std::reverse(res.path.begin(), res.path.end());  // now a ... bvert
  res.leaf_end = res.path.front();
  res.y = res.path[1];
  res.y_neighbors = f.neighbors(res.y);
  auto non_leaves_in = [&](int v) {
    int c = 0;
    for (int w : f.neighbors(v))
      if (!f.is_leaf(w)) ++c;
    return c;
  };
  const int second_to_last = res.path[res.path.size() - 2];
  if (non_leaves_in(res.y) > 1 || non_leaves_in(second_to_last) > 1)
    throw std::logic_error("maximal_diameter_path: inner neighbor of a diameter "
                           "endpoint has more than one non-leaf neighbor");
  return res;
}

Forest parse_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> pairs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      if (!(ls >> tag)) continue;  // blank/comment line before header
      int count;
      if (tag != "n" || !(ls >> count) || count < 1)
        throw std::invalid_argument("parse_edge_list: expected header 'n <numVertices>' at line " +
                                    std::to_string(lineno));
      n = count;
      continue;
    }
    int u, v;
    if (!(ls >> u)) continue;
    if (!(ls >> v))
      throw std::invalid_argument("parse_edge_list: expected 'u v' at line " +
                                  std::to_string(lineno));
    pairs.push_back({u, v});
  }
  if (n < 0) throw std::invalid_argument("parse_edge_list: missing 'n <numVertices>' header");
  return Forest::from_edge_list(pairs, n);
}

Forest parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return parse_edge_list(in);
}

std::string format_edge_list(const Forest& f) {
  std::ostringstream out;
  out << "n " << f.num_vertices << "\n";
  for (auto [u, v] : f.edges) out << u << " " << v << "\n";
  return out.str();
}

std::string graph_hash(const Forest& f) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(f.num_vertices));
  for (auto [u, v] : f.edges) mix((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v));
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace eidepth
