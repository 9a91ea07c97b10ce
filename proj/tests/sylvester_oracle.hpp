#pragma once

// Test-only oracle: the resultant as the determinant of the Sylvester
// matrix, computed by fraction-free Bareiss elimination. Deliberately a
// different algorithm from the subresultant PRS in the library.

#include <vector>

#include "unitysieve/dense_poly.hpp"

namespace usv::oracle {

inline bool entry_is_zero(const mpz_class& x) { return x == 0; }
template <class C>
bool entry_is_zero(const DensePoly<C>& p) {
  return p.is_zero();
}

template <class C>
C sylvester_resultant(const DensePoly<C>& f, const DensePoly<C>& g) {
  if (f.is_zero() || g.is_zero()) return C(0);
  int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return C(1);
  if (m == 0) return pow_coeff(f.coeff(0), n);
  if (n == 0) return pow_coeff(g.coeff(0), m);
  int size = m + n;
  std::vector<std::vector<C>> a(size, std::vector<C>(size, C(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) a[i][i + j] = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) a[n + i][i + j] = g.coeff(n - j);
  int sign = 1;
  C prev = C(1);
  for (int k = 0; k + 1 < size; ++k) {
    if (entry_is_zero(a[k][k])) {
      int piv = -1;
      for (int i = k + 1; i < size; ++i)
        if (!entry_is_zero(a[i][k])) {
          piv = i;
          break;
        }
      if (piv < 0) return C(0);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j)
        a[i][j] = exact_div_coeff(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = C(0);
    }
    prev = a[k][k];
  }
  C det = a[size - 1][size - 1];
  return sign < 0 ? C(0) - det : det;
}

}  // namespace usv::oracle
