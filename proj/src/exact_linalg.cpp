#include "eidepth/exact_linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace eidepth {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

struct Int64Overflow {};

// Fraction-free elimination generic over the entry type. Pivoting is free:
// after step k every remaining entry is a (k+1)x(k+1) minor of the input, so
// the division by the previous pivot is always exact.
template <typename T, typename Update>
int bareiss_rank(std::vector<T> m, int rows, int cols, Update update) {
  auto at = [&](int i, int j) -> T& { return m[static_cast<size_t>(i) * cols + j]; };
  int r = 0;
  T prev = T(1);
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (at(i, c) != T(0)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    const T pivot = at(r, c);
    for (int i = r + 1; i < rows; ++i) {
      const T head = at(i, c);
      for (int j = c + 1; j < cols; ++j)
        at(i, j) = update(at(i, j), pivot, at(r, j), head, prev);
      at(i, c) = T(0);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

int rank_rationals_int64(const IntMatrix& m) {
  auto update = [](long long x, long long pivot, long long rowj, long long head,
                   long long prev) -> long long {
    __int128 v = (__int128)x * pivot - (__int128)head * rowj;
    v /= prev;  // exact by the Sylvester identity
    if (v > INT64_MAX || v < INT64_MIN) throw Int64Overflow{};
    return static_cast<long long>(v);
  };
  return bareiss_rank<long long>(m.a, m.rows, m.cols, update);
}

int rank_rationals_bigint(const IntMatrix& m) {
  using boost::multiprecision::cpp_int;
  std::vector<cpp_int> a(m.a.begin(), m.a.end());
  auto update = [](const cpp_int& x, const cpp_int& pivot, const cpp_int& rowj,
                   const cpp_int& head, const cpp_int& prev) -> cpp_int {
    return (x * pivot - head * rowj) / prev;
  };
  return bareiss_rank<cpp_int>(std::move(a), m.rows, m.cols, update);
}

int rank_modp(const IntMatrix& m, long p) {
  std::vector<long long> a(m.a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    long long v = m.a[i] % p;
    a[i] = v < 0 ? v + p : v;
  }
  auto at = [&](int i, int j) -> long long& {
    return a[static_cast<size_t>(i) * m.cols + j];
  };
  auto inv_mod = [p](long long x) {
    // p is prime, x != 0 mod p
    long long result = 1, base = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < m.cols; ++j) std::swap(at(piv, j), at(r, j));
    const long long inv = inv_mod(at(r, c));
    for (int j = c; j < m.cols; ++j) at(r, j) = at(r, j) * inv % p;
    for (int i = r + 1; i < m.rows; ++i) {
      const long long f = at(i, c);
      if (f == 0) continue;
      for (int j = c; j < m.cols; ++j) {
        at(i, j) = (at(i, j) - f * at(r, j)) % p;
        if (at(i, j) < 0) at(i, j) += p;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank(const IntMatrix& m, const FieldSpec& k) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (!k.is_rationals()) return rank_modp(m, k.characteristic);
  try {
    return rank_rationals_int64(m);
  } catch (const Int64Overflow&) {
    return rank_rationals_bigint(m);
  }
}

}  // namespace eidepth
