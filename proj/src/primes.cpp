#include "eidepth/primes.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace eidepth {

MonomialIdeal component_ideal(const PolyContext& ctx, const IrreducibleComponent& c) {
  std::vector<Monomial> gens;
  for (auto [v, e] : c.pure_powers) gens.push_back(Monomial::variable(ctx.num_vars, v, e));
  return MonomialIdeal::from_generators(ctx, std::move(gens));
}

namespace {

std::string gens_key(const MonomialIdeal& ideal) {
  std::string key;
  for (const auto& g : ideal.gens()) {
    for (int e : g.exp) {
      key += static_cast<char>(e & 0xff);
      key += static_cast<char>((e >> 8) & 0xff);
    }
    key += '|';
  }
  return key;
}

// Splits on a mixed-support generator until every branch is irreducible.
// Correctness: for coprime u, v one has (G, uv) = (G, u) cap (G, v).
void decompose_rec(const MonomialIdeal& ideal,
                   std::unordered_map<std::string, std::vector<IrreducibleComponent>>& memo,
                   std::vector<IrreducibleComponent>& out) {
  const std::string key = gens_key(ideal);
  auto hit = memo.find(key);
  if (hit != memo.end()) {
    out.insert(out.end(), hit->second.begin(), hit->second.end());
    return;
  }

  const Monomial* mixed = nullptr;
  for (const auto& g : ideal.gens())
    if (g.support().size() >= 2) {
      mixed = &g;
      break;
    }

  std::vector<IrreducibleComponent> local;
  if (!mixed) {
    IrreducibleComponent c;
    for (const auto& g : ideal.gens()) {
      const auto supp = g.support();
      c.pure_powers[supp.front()] = g.exp[static_cast<size_t>(supp.front()) - 1];
    }
    local.push_back(std::move(c));
  } else {
    const int v = mixed->support().front();
    const int a = mixed->exp[static_cast<size_t>(v) - 1];
    Monomial rest = *mixed;
    rest.exp[static_cast<size_t>(v) - 1] = 0;

    auto with = [&](const Monomial& extra) {
      auto gens = ideal.gens();
      gens.push_back(extra);
      return MonomialIdeal::from_generators(ideal.context(), std::move(gens));
    };
    decompose_rec(with(Monomial::variable(ideal.context().num_vars, v, a)), memo, local);
    decompose_rec(with(rest), memo, local);
  }

  std::sort(local.begin(), local.end());
  local.erase(std::unique(local.begin(), local.end()), local.end());
  memo[key] = local;
  out.insert(out.end(), local.begin(), local.end());
}

// Q contains Q' iff supp(Q') is inside supp(Q) with exponents <= those of Q'.
bool component_contains(const IrreducibleComponent& q, const IrreducibleComponent& q_prime) {
  for (auto [v, e] : q_prime.pure_powers) {
    auto it = q.pure_powers.find(v);
    if (it == q.pure_powers.end() || it->second > e) return false;
  }
  return true;
}

MonomialIdeal intersect_components(const PolyContext& ctx,
                                   const std::vector<IrreducibleComponent>& comps,
                                   size_t skip) {
  MonomialIdeal acc(ctx);
  bool first = true;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (i == skip) continue;
    const MonomialIdeal c = component_ideal(ctx, comps[i]);
    acc = first ? c : intersect(acc, c);
    first = false;
  }
  return acc;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("irreducible_decomposition: ideal must be proper and nonzero");

  std::unordered_map<std::string, std::vector<IrreducibleComponent>> memo;
  std::vector<IrreducibleComponent> comps;
  decompose_rec(ideal, memo, comps);
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

  // drop any component containing another one: its intersection is unchanged
  std::vector<IrreducibleComponent> filtered;
  for (size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < comps.size() && !redundant; ++j)
      if (i != j && component_contains(comps[i], comps[j]) && !(comps[i] == comps[j]))
        redundant = true;
    if (!redundant) filtered.push_back(comps[i]);
  }

  // full irredundancy: a component may still be implied by several others
  for (size_t i = 0; i < filtered.size();) {
    if (filtered.size() > 1 &&
        equal_ideals(intersect_components(ideal.context(), filtered, i), ideal)) {
      filtered.erase(filtered.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return filtered;
}

std::set<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  std::set<MonomialPrime> primes;
  for (const auto& c : irreducible_decomposition(ideal)) {
    MonomialPrime p;
    for (auto [v, e] : c.pure_powers) p.variables.push_back(v);
    primes.insert(std::move(p));
  }
  return primes;
}

namespace {

// All minimal transversals of the given supports. Branching on the first
// uncovered support with a forbidden set makes every transversal appear once.
void transversals_rec(const std::vector<std::vector<int>>& supports,
                      std::vector<int>& chosen, std::set<int>& chosen_set,
                      std::set<int> forbidden, std::vector<std::vector<int>>& out) {
  const std::vector<int>* uncovered = nullptr;
  for (const auto& s : supports) {
    bool hit = false;
    for (int v : s)
      if (chosen_set.count(v)) {
        hit = true;
        break;
      }
    if (!hit) {
      uncovered = &s;
      break;
    }
  }
  if (!uncovered) {
    auto cover = chosen;
    std::sort(cover.begin(), cover.end());
    out.push_back(std::move(cover));
    return;
  }
  std::set<int> local_forbidden = forbidden;
  for (int v : *uncovered) {
    if (local_forbidden.count(v)) continue;
    chosen.push_back(v);
    chosen_set.insert(v);
    transversals_rec(supports, chosen, chosen_set, local_forbidden, out);
    chosen_set.erase(v);
    chosen.pop_back();
    local_forbidden.insert(v);
  }
}

std::vector<std::vector<int>> minimal_transversals(const std::vector<std::vector<int>>& supports) {
  std::vector<std::vector<int>> all;
  std::vector<int> chosen;
  std::set<int> chosen_set;
  transversals_rec(supports, chosen, chosen_set, {}, all);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  // the branching can emit non-minimal covers; keep the inclusion-minimal ones
  std::vector<std::vector<int>> minimal;
  for (size_t i = 0; i < all.size(); ++i) {
    bool has_subset = false;
    for (size_t j = 0; j < all.size() && !has_subset; ++j)
      if (i != j && std::includes(all[i].begin(), all[i].end(), all[j].begin(), all[j].end()) &&
          all[i] != all[j])
        has_subset = true;
    if (!has_subset) minimal.push_back(all[i]);
  }
  return minimal;
}

}  // namespace

std::set<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw std::invalid_argument("minimal_primes: ideal is not squarefree");
  if (ideal.is_unit()) throw std::invalid_argument("minimal_primes: unit ideal");
  std::set<MonomialPrime> primes;
  if (ideal.is_zero()) return primes;
  std::vector<std::vector<int>> supports;
  for (const auto& g : ideal.gens()) supports.push_back(g.support());
  for (auto& t : minimal_transversals(supports)) primes.insert(MonomialPrime{std::move(t)});
  return primes;
}

std::vector<std::vector<int>> minimal_vertex_covers(const Forest& g) {
  if (g.num_vertices > 24)
    throw std::invalid_argument("minimal_vertex_covers: exact enumeration capped at 24 vertices");
  std::vector<std::vector<int>> supports;
  for (auto [u, v] : g.edges) supports.push_back({u, v});
  return minimal_transversals(supports);
}

std::pair<int, bool> height_and_unmixed(const Forest& g) {
  const auto covers = minimal_vertex_covers(g);
  if (covers.empty() || (covers.size() == 1 && covers.front().empty()))
    return {0, true};  // edgeless graph
  size_t smallest = covers.front().size(), largest = covers.front().size();
  for (const auto& c : covers) {
    smallest = std::min(smallest, c.size());
    largest = std::max(largest, c.size());
  }
  return {static_cast<int>(smallest), smallest == largest};
}

bool is_normally_torsion_free_up_to(const Forest& g, int max_power) {
  if (max_power < 1)
    throw std::invalid_argument("is_normally_torsion_free_up_to: max_power must be >= 1");
  const MonomialIdeal ideal = edge_ideal(g);
  if (ideal.is_zero())
    throw std::invalid_argument("is_normally_torsion_free_up_to: graph has no edges");
  const std::set<MonomialPrime> minimal = minimal_primes(ideal);
  for (int t = 1; t <= max_power; ++t)
    if (associated_primes(power(ideal, t)) != minimal) return false;
  return true;
}

std::string to_string(const MonomialPrime& p, const PolyContext& ctx) {
  std::string s;
  for (int v : p.variables) {
    if (!s.empty()) s += ",";
    s += ctx.var_name(v);
  }
  return s.empty() ? "(0)" : s;
}

}  // namespace eidepth
