#include "eidepth/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace eidepth {

namespace {

struct ExpHash {
  size_t operator()(const std::vector<int>& e) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int v : e) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};

std::vector<Monomial> minimalize_gens(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), monomial_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : out)
      if (kept.divides(g)) {  // kept has smaller or equal degree
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

void require_same_context(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.context() == b.context()))
    throw std::invalid_argument("ideal operation across different polynomial rings");
}

}  // namespace

MonomialIdeal MonomialIdeal::from_generators(PolyContext ctx, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.num_vars() != ctx.num_vars)
      throw std::invalid_argument("generator does not live in the given ring");
  MonomialIdeal ideal(std::move(ctx));
  ideal.gens_ = minimalize_gens(std::move(gens));
  return ideal;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_context(*this, other);
  for (const auto& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

MonomialIdeal edge_ideal(const Forest& g) {
  return edge_ideal(g, PolyContext(g.num_vertices));
}

MonomialIdeal edge_ideal(const Forest& g, const PolyContext& ctx) {
  if (ctx.num_vars < g.num_vertices)
    throw std::invalid_argument("edge_ideal: ring has fewer variables than vertices");
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges)
    gens.push_back(Monomial::variable(ctx.num_vars, u) * Monomial::variable(ctx.num_vars, v));
  return MonomialIdeal::from_generators(ctx, std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int t) {
  if (t < 1) throw std::invalid_argument("power: exponent must be >= 1");
  if (t == 1 || ideal.is_zero()) return ideal;
  MonomialIdeal cur = ideal;
  for (int step = 1; step < t; ++step) {
    std::unordered_set<std::vector<int>, ExpHash> seen;
    std::vector<Monomial> prods;
    prods.reserve(cur.gens().size() * ideal.gens().size());
    for (const auto& a : cur.gens())
      for (const auto& b : ideal.gens()) {
        Monomial p = a * b;
        if (seen.insert(p.exp).second) prods.push_back(std::move(p));
      }
    cur = MonomialIdeal::from_generators(ideal.context(), std::move(prods));
  }
  return cur;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.num_vars() != ideal.context().num_vars)
    throw std::invalid_argument("colon: monomial from a different ring");
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) gens.push_back(quotient_by_gcd(g, m));
  return MonomialIdeal::from_generators(ideal.context(), std::move(gens));
}

MonomialIdeal add_variable_gen(const MonomialIdeal& ideal, int v) {
  auto gens = ideal.gens();
  gens.push_back(Monomial::variable(ideal.context().num_vars, v));
  return MonomialIdeal::from_generators(ideal.context(), std::move(gens));
}

MonomialIdeal delete_variable(const MonomialIdeal& ideal, int v) {
  if (v < 1 || v > ideal.context().num_vars)
    throw std::invalid_argument("delete_variable: variable out of range");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens())
    if (g.exp[static_cast<size_t>(v) - 1] == 0) gens.push_back(g);
  return MonomialIdeal::from_generators(ideal.context(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& ga : a.gens())
    for (const auto& gb : b.gens()) gens.push_back(lcm(ga, gb));
  return MonomialIdeal::from_generators(a.context(), std::move(gens));
}

bool equal_ideals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  return a.gens() == b.gens();
}

bool check_leaf_colon_identity(const Forest& tree, int leaf, int t) {
  if (t < 2) throw std::invalid_argument("check_leaf_colon_identity: t must be >= 2");
  if (!tree.is_leaf(leaf))
    throw std::invalid_argument("check_leaf_colon_identity: vertex " +
                                std::to_string(leaf) + " is not a leaf");
  const int y = tree.neighbors(leaf).front();
  const MonomialIdeal ideal = edge_ideal(tree);
  const Monomial xy = Monomial::variable(tree.num_vertices, leaf) *
                      Monomial::variable(tree.num_vertices, y);
  return equal_ideals(colon(power(ideal, t), xy), power(ideal, t - 1));
}

bool check_rhs_identity(const MonomialIdeal& ideal, const Monomial& m, int y, int t) {
  if (!ideal.is_squarefree())
    throw std::invalid_argument("check_rhs_identity: ideal is not squarefree");
  if (y < 1 || y > ideal.context().num_vars)
    throw std::invalid_argument("check_rhs_identity: variable out of range");
  if (m.exp[static_cast<size_t>(y) - 1] > 0)
    throw std::invalid_argument("check_rhs_identity: y divides M");
  if (t < 1) throw std::invalid_argument("check_rhs_identity: t must be >= 1");
  const MonomialIdeal minor = delete_variable(ideal, y);
  const MonomialIdeal lhs = add_variable_gen(colon(power(ideal, t), m), y);
  const MonomialIdeal rhs = add_variable_gen(colon(power(minor, t), m), y);
  return equal_ideals(lhs, rhs);
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string s;
  for (const auto& g : ideal.gens()) {
    if (!s.empty()) s += ", ";
    s += to_string(g, ideal.context());
  }
  return s;
}

}  // namespace eidepth
