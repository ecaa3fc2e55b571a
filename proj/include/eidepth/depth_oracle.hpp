#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eidepth/field.hpp"
#include "eidepth/forest.hpp"
#include "eidepth/ideal.hpp"
#include "eidepth/simplicial.hpp"

namespace eidepth {

using Multidegree = std::vector<int>;

/// Raised when an instance would exceed the configured candidate-degree cap.
/// Callers treat this as a first-class outcome, never a silent skip.
struct BudgetExceeded : std::runtime_error {
  long long budget;
  explicit BudgetExceeded(long long b)
      : std::runtime_error("candidate-degree budget exceeded (cap " +
                           std::to_string(b) + ")"),
        budget(b) {}
};

struct OracleOptions {
  long long candidate_budget = 2'000'000;
  bool parallel = true;  // OpenMP over candidate multidegrees
};

/// Multigraded Betti numbers of R/I: entries (i, b) -> dim_k Tor_i(R/I, k)_b,
/// only nonzero entries stored. beta_{0,0} = 1 always.
struct BettiTable {
  int num_vars = 0;
  FieldSpec field;
  std::map<std::pair<int, Multidegree>, long> entries;

  int projective_dimension() const;
  /// Total Betti numbers by homological degree, index 0..pd.
  std::vector<long> totals() const;
  /// Lexicographically smallest multidegree with a nonzero entry in the top
  /// homological degree.
  Multidegree witness_degree() const;
  /// One "i <TAB> b1,...,bn <TAB> dim" line per entry.
  std::string to_tsv() const;

  bool operator==(const BettiTable&) const = default;
};

struct DepthResult {
  int depth = 0;
  int projective_dimension = 0;
  FieldSpec field;
  Multidegree witness_degree;
};

/// Join (componentwise-max) closure of the minimal generator exponents; every
/// nonzero Betti multidegree of I lies in it. Throws BudgetExceeded past the cap.
std::vector<Multidegree> candidate_degrees(const MonomialIdeal& ideal,
                                           long long budget = OracleOptions{}.candidate_budget);

/// The simplicial complex on support(b) whose faces are the squarefree tau
/// with x^(b-tau) in I. Its facets are supp(b - g) over generators g dividing
/// x^b, which is how it is built.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Multidegree& b);

/// beta_{i+1,b}(R/I) = dim H~_{i-1}(upper Koszul complex at b), one homology
/// computation per candidate degree, OpenMP-parallel.
BettiTable multigraded_betti(const MonomialIdeal& ideal, const FieldSpec& k,
                             const OracleOptions& options = {});

/// Serial reference implementation of multigraded_betti; kept for testing and
/// benchmarking the parallel kernel against.
BettiTable multigraded_betti_serial(const MonomialIdeal& ideal, const FieldSpec& k,
                                    const OracleOptions& options = {});

/// Cross-oracle: Betti numbers from the Taylor complex (chain groups indexed
/// by generator subsets, boundary entries +-1 exactly when dropping the
/// element keeps the lcm). Capped at 14 generators.
BettiTable taylor_betti(const MonomialIdeal& ideal, const FieldSpec& k);

/// depth(R/I) = numVars - pd(R/I). The zero ideal gives depth = numVars;
/// the unit ideal is rejected.
DepthResult depth_of_quotient(const MonomialIdeal& ideal, const FieldSpec& k,
                              const OracleOptions& options = {});

/// depth(R/I(G)^t).
DepthResult depth_of_power(const Forest& g, int t, const FieldSpec& k,
                           const OracleOptions& options = {});

}  // namespace eidepth
