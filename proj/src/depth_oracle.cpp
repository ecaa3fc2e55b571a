#include "eidepth/depth_oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "eidepth/exact_linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eidepth {

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, dim] : entries)
    if (dim > 0) pd = std::max(pd, key.first);
  return pd;
}

std::vector<long> BettiTable::totals() const {
  std::vector<long> t(static_cast<size_t>(projective_dimension()) + 1, 0);
  for (const auto& [key, dim] : entries) t[static_cast<size_t>(key.first)] += dim;
  return t;
}

Multidegree BettiTable::witness_degree() const {
  const int pd = projective_dimension();
  // entries are sorted by (i, b) with b lexicographic, so the first hit wins
  auto it = entries.lower_bound({pd, {}});
  if (it == entries.end() || it->first.first != pd)
    throw std::logic_error("BettiTable: no entry in top homological degree");
  return it->first.second;
}

std::string BettiTable::to_tsv() const {
  std::ostringstream out;
  out << "# i\tmultidegree\tdim\n";
  for (const auto& [key, dim] : entries) {
    out << key.first << '\t';
    for (size_t i = 0; i < key.second.size(); ++i) {
      if (i) out << ',';
      out << key.second[i];
    }
    out << '\t' << dim << '\n';
  }
  return out.str();
}

namespace {

// Exponent vectors packed into byte strings: hashable, compact, and SSO-sized
// for every ring this tool targets.
std::string pack(const std::vector<int>& e) {
  std::string s(e.size(), '\0');
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > 255)
      throw std::invalid_argument("candidate_degrees: exponent out of byte range");
    s[i] = static_cast<char>(e[i]);
  }
  return s;
}

Multidegree unpack(const std::string& s) {
  Multidegree e(s.size());
  for (size_t i = 0; i < s.size(); ++i)
    e[i] = static_cast<unsigned char>(s[i]);
  return e;
}

void require_oracle_input(const MonomialIdeal& ideal) {
  if (ideal.is_unit())
    throw std::invalid_argument("depth oracle: the unit ideal has no quotient to measure");
}

}  // namespace

std::vector<Multidegree> candidate_degrees(const MonomialIdeal& ideal, long long budget) {
  require_oracle_input(ideal);
  if (ideal.is_zero())
    throw std::invalid_argument("candidate_degrees: zero ideal has no candidate lattice");

  std::vector<std::string> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) gens.push_back(pack(g.exp));

  // join-closure: joining against single generators reaches every subset lcm
  std::unordered_set<std::string> closure(gens.begin(), gens.end());
  std::deque<std::string> work(gens.begin(), gens.end());
  const size_t n = static_cast<size_t>(ideal.context().num_vars);
  while (!work.empty()) {
    const std::string v = std::move(work.front());
    work.pop_front();
    for (const auto& g : gens) {
      std::string j(n, '\0');
      for (size_t i = 0; i < n; ++i)
        j[i] = static_cast<char>(std::max(static_cast<unsigned char>(v[i]),
                                          static_cast<unsigned char>(g[i])));
      if (closure.insert(j).second) {
        if (static_cast<long long>(closure.size()) > budget) throw BudgetExceeded(budget);
        work.push_back(std::move(j));
      }
    }
  }

  std::vector<Multidegree> out;
  out.reserve(closure.size());
  for (const auto& s : closure) out.push_back(unpack(s));
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Multidegree& b) {
  const int n = ideal.context().num_vars;
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("upper_koszul_complex: multidegree length mismatch");
  if (n > 31) throw std::invalid_argument("upper_koszul_complex: too many variables");
  std::vector<std::uint32_t> facets;
  for (const auto& g : ideal.gens()) {
    std::uint32_t mask = 0;
    bool divides = true;
    for (int i = 0; i < n && divides; ++i) {
      const int gi = g.exp[static_cast<size_t>(i)];
      if (gi > b[static_cast<size_t>(i)])
        divides = false;
      else if (gi < b[static_cast<size_t>(i)])
        mask |= 1u << i;
    }
    if (divides) facets.push_back(mask);
  }
  if (facets.empty()) return SimplicialComplex::void_complex(n);
  return SimplicialComplex::from_facets(n, std::move(facets));
}

namespace {

// Betti contributions of one candidate degree, appended to `into`:
// beta_{i+2,b}(R/I) = dim H~_i of the upper Koszul complex at b.
void betti_rows_at(const MonomialIdeal& ideal, const Multidegree& b, const FieldSpec& k,
                   std::map<std::pair<int, Multidegree>, long>& into) {
  const SimplicialComplex complex = upper_koszul_complex(ideal, b);
  if (complex.is_void()) return;
  // a common vertex of all facets cones the complex: no reduced homology
  std::uint32_t apex = ~0u;
  for (auto f : complex.facets) apex &= f;
  if (apex != 0) return;
  for (const auto& [degree, dim] : reduced_betti_numbers(complex, k))
    if (dim > 0) into[{degree + 2, b}] = dim;
}

BettiTable betti_common(const MonomialIdeal& ideal, const FieldSpec& k,
                        const OracleOptions& options, bool parallel) {
  require_oracle_input(ideal);
  if (ideal.is_zero())
    throw std::invalid_argument("multigraded_betti: zero ideal (use depth_of_quotient)");

  const auto candidates = candidate_degrees(ideal, options.candidate_budget);
  BettiTable table;
  table.num_vars = ideal.context().num_vars;
  table.field = k;

  if (!parallel) {
    for (const auto& b : candidates) betti_rows_at(ideal, b, k, table.entries);
  } else {
#pragma omp parallel
    {
      std::map<std::pair<int, Multidegree>, long> local;
#pragma omp for schedule(dynamic, 32)
      for (long idx = 0; idx < static_cast<long>(candidates.size()); ++idx)
        betti_rows_at(ideal, candidates[static_cast<size_t>(idx)], k, local);
#pragma omp critical
      table.entries.merge(local);
    }
  }

  table.entries[{0, Multidegree(static_cast<size_t>(table.num_vars), 0)}] = 1;
  return table;
}

}  // namespace

BettiTable multigraded_betti(const MonomialIdeal& ideal, const FieldSpec& k,
                             const OracleOptions& options) {
  return betti_common(ideal, k, options, options.parallel);
}

BettiTable multigraded_betti_serial(const MonomialIdeal& ideal, const FieldSpec& k,
                                    const OracleOptions& options) {
  return betti_common(ideal, k, options, false);
}

BettiTable taylor_betti(const MonomialIdeal& ideal, const FieldSpec& k) {
  require_oracle_input(ideal);
  const int r = ideal.num_gens();
  if (r > 14)
    throw std::invalid_argument("taylor_betti: more than 14 minimal generators");
  const int n = ideal.context().num_vars;

  BettiTable table;
  table.num_vars = n;
  table.field = k;

  // lcm of every generator subset, built incrementally over the subset lattice
  const std::uint32_t subsets = 1u << r;
  std::vector<Multidegree> subset_lcm(subsets, Multidegree(static_cast<size_t>(n), 0));
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const int g = std::countr_zero(low);
    subset_lcm[s] = subset_lcm[s ^ low];
    const auto& gen = ideal.gens()[static_cast<size_t>(g)].exp;
    for (int i = 0; i < n; ++i)
      subset_lcm[s][static_cast<size_t>(i)] =
          std::max(subset_lcm[s][static_cast<size_t>(i)], gen[static_cast<size_t>(i)]);
  }

  std::map<Multidegree, std::vector<std::uint32_t>> strand;
  for (std::uint32_t s = 0; s < subsets; ++s) strand[subset_lcm[s]].push_back(s);

  for (const auto& [b, members] : strand) {
    // group the strand's subsets by cardinality
    std::map<int, std::vector<std::uint32_t>> by_size;
    for (auto s : members) by_size[std::popcount(s)].push_back(s);
    std::map<int, int> ranks;  // boundary rank from size i to size i-1
    for (const auto& [size, sources] : by_size) {
      if (size == 0) continue;
      auto target_level = by_size.find(size - 1);
      if (target_level == by_size.end()) continue;
      std::map<std::uint32_t, int> target_index;
      for (size_t i = 0; i < target_level->second.size(); ++i)
        target_index[target_level->second[i]] = static_cast<int>(i);
      IntMatrix d(static_cast<int>(target_level->second.size()),
                  static_cast<int>(sources.size()));
      for (size_t col = 0; col < sources.size(); ++col) {
        const std::uint32_t s = sources[col];
        int sign = 1;
        for (std::uint32_t bits = s; bits != 0; bits &= bits - 1) {
          const std::uint32_t low = bits & (~bits + 1);
          const std::uint32_t sub = s ^ low;
          if (subset_lcm[sub] == b) {  // dropping this generator keeps the lcm
            auto it = target_index.find(sub);
            if (it != target_index.end())
              d.at(it->second, static_cast<int>(col)) = sign;
          }
          sign = -sign;
        }
      }
      ranks[size] = rank(d, k);
    }
    for (const auto& [size, faces] : by_size) {
      long h = static_cast<long>(faces.size());
      auto rank_here = ranks.find(size);
      if (rank_here != ranks.end()) h -= rank_here->second;
      auto rank_above = ranks.find(size + 1);
      if (rank_above != ranks.end()) h -= rank_above->second;
      if (h > 0) table.entries[{size, b}] = h;
    }
  }
  return table;
}

DepthResult depth_of_quotient(const MonomialIdeal& ideal, const FieldSpec& k,
                              const OracleOptions& options) {
  require_oracle_input(ideal);
  const int n = ideal.context().num_vars;
  if (ideal.is_zero())
    return {n, 0, k, Multidegree(static_cast<size_t>(n), 0)};
  const BettiTable table = multigraded_betti(ideal, k, options);
  const int pd = table.projective_dimension();
  DepthResult result{n - pd, pd, k, table.witness_degree()};
  if (result.depth + result.projective_dimension != n || result.depth < 0)
    throw std::logic_error("depth_of_quotient: Auslander-Buchsbaum bookkeeping failed");
  return result;
}

DepthResult depth_of_power(const Forest& g, int t, const FieldSpec& k,
                           const OracleOptions& options) {
  if (t < 1) throw std::invalid_argument("depth_of_power: t must be >= 1");
  return depth_of_quotient(power(edge_ideal(g), t), k, options);
}

}  // namespace eidepth
