#include "eidepth/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace eidepth {

int ceil_div3(long long a) {
  long long q = a / 3;
  if (a % 3 != 0 && a > 0) ++q;
  return static_cast<int>(q);
}

int path_depth_exact(int n) {
  if (n < 1) throw std::invalid_argument("path_depth_exact: n must be >= 1");
  return ceil_div3(n);
}

int path_power_lb(int n, int t) {
  if (n < 2) throw std::invalid_argument("path_power_lb: n must be >= 2");
  if (t < 1) throw std::invalid_argument("path_power_lb: t must be >= 1");
  return std::max(ceil_div3(n - t + 1), 1);
}

int tree_diameter_lb(int d) {
  if (d < 0) throw std::invalid_argument("tree_diameter_lb: d must be >= 0");
  return ceil_div3(d + 1);
}

int tree_near_leaf_lb(int d, int q) {
  if (d < 1) throw std::invalid_argument("tree_near_leaf_lb: d must be >= 1");
  if (q < 0) throw std::invalid_argument("tree_near_leaf_lb: q must be >= 0");
  return std::max(ceil_div3(d + q - 1), 1);
}

int forest_lb(int d, int p, int t) {
  if (p < 1) throw std::invalid_argument("forest_lb: needs at least one component");
  if (t < 1) throw std::invalid_argument("forest_lb: t must be >= 1");
  return std::max(ceil_div3(d - t + 2) + p - 1, p);
}

int forest_bonus_lb(int d, int p, int q, int t) {
  if (p < 1) throw std::invalid_argument("forest_bonus_lb: needs at least one component");
  if (t < 1) throw std::invalid_argument("forest_bonus_lb: t must be >= 1");
  return std::max(ceil_div3(d - t + q) + p - 1, p);
}

int stabilized_depth(int p) {
  if (p < 0) throw std::invalid_argument("stabilized_depth: p must be >= 0");
  return p;
}

int analytic_spread_forest(int n, int p) {
  if (p < 0 || n < p) throw std::invalid_argument("analytic_spread_forest: bad (n, p)");
  return n - p;
}

int stabilization_onset_lb(int d, int q) {
  return std::max(d - 1, d + q - 3);
}

BoundValues evaluate_bounds(const BoundInput& in) {
  BoundValues v;
  v.tree_lb = forest_lb(in.d, 1, in.t);
  v.forest_lb = forest_lb(in.d, in.p, in.t);
  v.bonus_lb = forest_bonus_lb(in.d, in.p, in.q, in.t);
  v.bipartite_lb = in.p;
  v.stabilized = stabilized_depth(in.p) + in.isolated;
  v.onset_lb = stabilization_onset_lb(in.d, in.q);
  return v;
}

}  // namespace eidepth
