#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "eidepth/field.hpp"

namespace eidepth {

/// A simplicial complex on ambient vertices 0..num_vertices-1, stored as its
/// facets (bitmask per facet). Downward closure is generated on demand.
///
/// Two degenerate values are distinct: the void complex (no faces at all,
/// empty facet list) and the irrelevant complex {emptyset} (single facet 0).
struct SimplicialComplex {
  int num_vertices = 0;
  std::vector<std::uint32_t> facets;

  static SimplicialComplex void_complex(int nv) { return {nv, {}}; }
  static SimplicialComplex irrelevant(int nv) { return {nv, {0}}; }

  /// Keeps only inclusion-maximal masks.
  static SimplicialComplex from_facets(int nv, std::vector<std::uint32_t> masks);

  bool is_void() const { return facets.empty(); }

  /// -1 for {emptyset}; the max facet dimension otherwise. Void: -2.
  int dim() const;

  /// All faces grouped by dimension: index k holds the dimension k-1 faces,
  /// so index 0 is the empty face. Empty for the void complex.
  std::vector<std::vector<std::uint32_t>> faces_by_dim() const;

  /// Cone over the complex with a fresh apex vertex (used in tests).
  SimplicialComplex cone() const;
};

/// Dimensions of reduced homology over k in every degree from -1 to dim,
/// as a map degree -> dimension (degrees outside the range are absent, the
/// void complex yields an empty map). Checks the Euler-Poincare identity.
std::map<int, long> reduced_betti_numbers(const SimplicialComplex& c, const FieldSpec& k);

}  // namespace eidepth
