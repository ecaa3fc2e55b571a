#pragma once

#include <vector>

#include "eidepth/forest.hpp"
#include "eidepth/monomial.hpp"

namespace eidepth {

/// A monomial ideal, stored as its unique minimal generating set in canonical
/// order. The empty set is the zero ideal; {1} is the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(PolyContext ctx) : ctx_(std::move(ctx)) {}

  /// Minimalizes (drops every generator divisible by another) and sorts.
  static MonomialIdeal from_generators(PolyContext ctx, std::vector<Monomial> gens);

  const PolyContext& context() const { return ctx_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;

  /// Membership: m is in the ideal iff some generator divides it.
  bool contains(const Monomial& m) const;
  /// Ideal containment (other is a subset of this).
  bool contains(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  PolyContext ctx_;
  std::vector<Monomial> gens_;
};

/// The edge ideal I(G): one squarefree degree-2 generator x_u x_v per edge.
MonomialIdeal edge_ideal(const Forest& g);
MonomialIdeal edge_ideal(const Forest& g, const PolyContext& ctx);

/// I^t with the minimal generating set, computed one factor at a time with
/// intermediate minimalization. power(I, 1) = I; t < 1 is rejected.
MonomialIdeal power(const MonomialIdeal& ideal, int t);

/// (I : m) = ({ g / gcd(g, m) }), minimalized. m must be a monomial != 0.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);

/// (I, x_v), minimalized. v is 1-based.
MonomialIdeal add_variable_gen(const MonomialIdeal& ideal, int v);

/// Setting x_v = 0: drops every generator divisible by x_v. For an edge ideal
/// this is the edge ideal of the deletion minor G \ x_v.
MonomialIdeal delete_variable(const MonomialIdeal& ideal, int v);

/// Intersection via pairwise lcms, minimalized.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Equality as ideals = equality of canonical minimal generating sets.
/// Throws on context mismatch.
bool equal_ideals(const MonomialIdeal& a, const MonomialIdeal& b);

/// For a leaf x with unique neighbor y: does (I^t : xy) = I^{t-1} hold
/// (t >= 2)? Both sides computed independently. Throws if x is not a leaf.
bool check_leaf_colon_identity(const Forest& tree, int leaf, int t);

/// For squarefree I, monomial M, variable y not dividing M and
/// K = delete_variable(I, y): does ((I^t : M), y) = ((K^t : M), y) hold?
/// Throws if y divides M or I is not squarefree.
bool check_rhs_identity(const MonomialIdeal& ideal, const Monomial& m, int y, int t);

/// Generators rendered as "x1*x2, x2*x3"; "(0)" / "(1)" for zero and unit.
std::string to_string(const MonomialIdeal& ideal);

}  // namespace eidepth
