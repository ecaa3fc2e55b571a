#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace eidepth {

/// The ambient polynomial ring: a fixed number of variables, optionally with
/// custom names. Ideals remember their context and refuse to mix.
struct PolyContext {
  int num_vars = 0;
  std::vector<std::string> var_names;  // empty = default x1..xn

  PolyContext() = default;
  explicit PolyContext(int n) : num_vars(n) {
    if (n < 1) throw std::invalid_argument("PolyContext: need at least one variable");
  }
  PolyContext(int n, std::vector<std::string> names)
      : num_vars(n), var_names(std::move(names)) {
    if (n < 1) throw std::invalid_argument("PolyContext: need at least one variable");
    if (!var_names.empty() && static_cast<int>(var_names.size()) != n)
      throw std::invalid_argument("PolyContext: name count mismatch");
  }

  std::string var_name(int v) const {  // v is 1-based
    if (var_names.empty()) return "x" + std::to_string(v);
    return var_names[static_cast<size_t>(v) - 1];
  }

  bool operator==(const PolyContext&) const = default;
};

/// A monomial as an exponent vector; the zero vector denotes 1.
struct Monomial {
  std::vector<int> exp;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exp(std::move(e)) {
    for (int v : exp)
      if (v < 0) throw std::invalid_argument("Monomial: negative exponent");
  }

  static Monomial one(int num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }

  /// x_v in an n-variable ring (v is 1-based).
  static Monomial variable(int num_vars, int v, int power = 1) {
    if (v < 1 || v > num_vars) throw std::invalid_argument("Monomial: variable out of range");
    std::vector<int> e(num_vars, 0);
    e[static_cast<size_t>(v) - 1] = power;
    return Monomial(std::move(e));
  }

  int num_vars() const { return static_cast<int>(exp.size()); }
  int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < exp.size(); ++i)
      if (exp[i] > m.exp[i]) return false;
    return true;
  }

  std::vector<int> support() const {  // 1-based variable indices
    std::vector<int> s;
    for (size_t i = 0; i < exp.size(); ++i)
      if (exp[i] > 0) s.push_back(static_cast<int>(i) + 1);
    return s;
  }

  bool is_squarefree() const {
    return std::all_of(exp.begin(), exp.end(), [](int e) { return e <= 1; });
  }

  bool operator==(const Monomial&) const = default;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += b.exp[i];
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = std::max(r.exp[i], b.exp[i]);
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = std::min(r.exp[i], b.exp[i]);
  return r;
}

/// g / gcd(g, m): the generator image under colon by m.
inline Monomial quotient_by_gcd(const Monomial& g, const Monomial& m) {
  Monomial r = g;
  for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] -= std::min(r.exp[i], m.exp[i]);
  return r;
}

/// Canonical order: degree first, then earlier-variable-heavy monomials
/// first (lexicographically larger exponent vector), so x1*x2 precedes x2*x3.
inline bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exp > b.exp;
}

/// Canonical text form, e.g. "x1^2*x3"; "1" for the unit monomial.
inline std::string to_string(const Monomial& m, const PolyContext& ctx) {
  std::string s;
  for (int i = 0; i < m.num_vars(); ++i) {
    if (m.exp[static_cast<size_t>(i)] == 0) continue;
    if (!s.empty()) s += '*';
    s += ctx.var_name(i + 1);
    if (m.exp[static_cast<size_t>(i)] > 1)
      s += "^" + std::to_string(m.exp[static_cast<size_t>(i)]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace eidepth
