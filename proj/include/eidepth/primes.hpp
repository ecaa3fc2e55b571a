#pragma once

#include <map>
#include <set>
#include <vector>

#include "eidepth/forest.hpp"
#include "eidepth/ideal.hpp"

namespace eidepth {

/// A monomial prime ideal: the variables generating it (1-based, sorted).
struct MonomialPrime {
  std::vector<int> variables;
  bool operator==(const MonomialPrime&) const = default;
  auto operator<=>(const MonomialPrime&) const = default;
};

/// An irreducible monomial ideal (x_i^{a_i} : i in support).
struct IrreducibleComponent {
  std::map<int, int> pure_powers;  // variable (1-based) -> exponent >= 1
  bool operator==(const IrreducibleComponent&) const = default;
  auto operator<=>(const IrreducibleComponent&) const = default;
};

MonomialIdeal component_ideal(const PolyContext& ctx, const IrreducibleComponent& c);

/// Irredundant irreducible decomposition of a proper nonzero monomial ideal
/// (recursive splitting on a mixed-support generator, then irredundancy
/// filtering by exact intersection).
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// Ass(R/I): the radicals (supports) of the irredundant irreducible components.
std::set<MonomialPrime> associated_primes(const MonomialIdeal& ideal);

/// Min(R/I) for squarefree I: the minimal transversals of the generator
/// supports (= minimal vertex covers when I is an edge ideal).
std::set<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);

/// All inclusion-minimal vertex covers (exact enumeration; n <= 24).
std::vector<std::vector<int>> minimal_vertex_covers(const Forest& g);

/// height(I(G)) = minimum vertex cover size; unmixed iff all minimal covers
/// share that size.
std::pair<int, bool> height_and_unmixed(const Forest& g);

/// True iff Ass(R/I^t) = Min(R/I) for 1 <= t <= max_power (G bipartite).
bool is_normally_torsion_free_up_to(const Forest& g, int max_power);

/// "x2,x4" style rendering for report rows.
std::string to_string(const MonomialPrime& p, const PolyContext& ctx);

}  // namespace eidepth
