#include "eidepth/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "eidepth/exact_linalg.hpp"

namespace eidepth {

SimplicialComplex SimplicialComplex::from_facets(int nv, std::vector<std::uint32_t> masks) {
  if (nv < 0 || nv > 31)
    throw std::invalid_argument("SimplicialComplex: vertex count out of range");
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint32_t> maximal;
  for (size_t i = 0; i < masks.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < masks.size() && !dominated; ++j)
      if (j != i && (masks[i] & masks[j]) == masks[i] && masks[i] != masks[j])
        dominated = true;
    // equal masks were deduplicated, so strict containment is the only case
    if (!dominated) maximal.push_back(masks[i]);
  }
  return {nv, std::move(maximal)};
}

int SimplicialComplex::dim() const {
  if (is_void()) return -2;
  int d = -1;
  for (auto f : facets) d = std::max(d, std::popcount(f) - 1);
  return d;
}

std::vector<std::vector<std::uint32_t>> SimplicialComplex::faces_by_dim() const {
  if (is_void()) return {};
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::vector<std::uint32_t>> by_dim(static_cast<size_t>(dim()) + 2);
  for (auto facet : facets) {
    // enumerate all subsets of the facet mask
    std::uint32_t sub = facet;
    while (true) {
      if (seen.insert(sub).second)
        by_dim[static_cast<size_t>(std::popcount(sub))].push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  for (auto& level : by_dim) std::sort(level.begin(), level.end());
  return by_dim;
}

SimplicialComplex SimplicialComplex::cone() const {
  if (num_vertices >= 31)
    throw std::invalid_argument("cone: vertex limit reached");
  const std::uint32_t apex = 1u << num_vertices;
  if (is_void()) return {num_vertices + 1, {apex}};
  std::vector<std::uint32_t> masks;
  for (auto f : facets) masks.push_back(f | apex);
  return from_facets(num_vertices + 1, std::move(masks));
}

std::map<int, long> reduced_betti_numbers(const SimplicialComplex& c, const FieldSpec& k) {
  std::map<int, long> homology;
  if (c.is_void()) return homology;

  // by_dim[j] holds the faces with j vertices (dimension j-1)
  const auto by_dim = c.faces_by_dim();
  const int top = static_cast<int>(by_dim.size()) - 1;

  // ranks[j] = rank of the boundary map (faces with j vertices) -> (j-1)
  std::vector<int> ranks(static_cast<size_t>(top) + 2, 0);
  for (int j = 1; j <= top; ++j) {
    const auto& sources = by_dim[static_cast<size_t>(j)];
    const auto& targets = by_dim[static_cast<size_t>(j) - 1];
    if (sources.empty() || targets.empty()) continue;
    std::unordered_map<std::uint32_t, int> target_index;
    for (size_t i = 0; i < targets.size(); ++i)
      target_index[targets[i]] = static_cast<int>(i);
    IntMatrix d(static_cast<int>(targets.size()), static_cast<int>(sources.size()));
    for (size_t col = 0; col < sources.size(); ++col) {
      const std::uint32_t face = sources[col];
      int sign = 1;
      for (std::uint32_t bits = face; bits != 0; bits &= bits - 1) {
        const std::uint32_t vertex_bit = bits & (~bits + 1);
        d.at(target_index.at(face ^ vertex_bit), static_cast<int>(col)) = sign;
        sign = -sign;
      }
    }
    ranks[static_cast<size_t>(j)] = rank(d, k);
  }

  long euler_faces = 0, euler_homology = 0;
  for (int j = 0; j <= top; ++j) {
    const long fj = static_cast<long>(by_dim[static_cast<size_t>(j)].size());
    const long hj = fj - ranks[static_cast<size_t>(j)] - ranks[static_cast<size_t>(j) + 1];
    const int parity_sign = (j % 2 == 0) ? 1 : -1;
    euler_faces += parity_sign * fj;
    euler_homology += parity_sign * hj;
    homology[j - 1] = hj;
  }
  if (euler_faces != euler_homology)
    throw std::logic_error("reduced_betti_numbers: Euler-Poincare identity failed");
  return homology;
}

}  // namespace eidepth
