#pragma once

namespace eidepth {

/// ceil(a/3) exactly, for any sign of a.
int ceil_div3(long long a);

/// depth(R/I(P_n)) = ceil(n/3), exact for paths.
int path_depth_exact(int n);

/// depth(R/I(P_n)^t) >= max{ceil((n-t+1)/3), 1}.
int path_power_lb(int n, int t);

/// depth(R/I(G)) >= ceil((d+1)/3) for a tree of diameter d.
int tree_diameter_lb(int d);

/// depth(R/I(G)) >= ceil((d+q-1)/3) for a tree with q near leaves,
/// clamped below by 1 (degenerate small-diameter inputs can push the
/// raw formula to 0).
int tree_near_leaf_lb(int d, int q);

/// depth(R/I^t) >= max{ceil((d-t+2)/3) + p - 1, p} for a forest with p
/// components of maximal diameter d. Rejects p < 1.
int forest_lb(int d, int p, int t);

/// The near-leaf strengthening: max{ceil((d-t+q)/3) + p - 1, p}.
int forest_bonus_lb(int d, int p, int q, int t);

/// Eventual depth of a forest of p trees: p (one per component).
int stabilized_depth(int p);

/// Analytic spread of the edge ideal of a forest: n - p.
int analytic_spread_forest(int n, int p);

/// Smallest power where the best bound first permits depth 1:
/// max(d-1, d+q-3).
int stabilization_onset_lb(int d, int q);

/// Everything the bound formulas consume, collected per (graph, t).
struct BoundInput {
  int n = 0;         // total vertices (ambient variables)
  int d = 0;         // max component diameter
  int p = 0;         // components with >= 2 vertices
  int q = 0;         // near leaves of the chosen max-diameter component
  int t = 1;         // power
  int isolated = 0;  // isolated vertex count
};

/// All closed-form bounds evaluated on one input (p >= 1).
struct BoundValues {
  int tree_lb = 0;    // single-component form of the forest bound
  int forest_lb = 0;
  int bonus_lb = 0;
  int bipartite_lb = 0;  // p
  int stabilized = 0;    // p + isolated
  int onset_lb = 0;
};

BoundValues evaluate_bounds(const BoundInput& in);

}  // namespace eidepth
