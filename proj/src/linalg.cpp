#include "lglab/linalg.hpp"

#include <algorithm>

namespace lglab {

std::vector<std::size_t> echelon_fraction_free(IntMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      if (best == rows || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) < 0) best = i;
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    const Integer& p = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      Integer f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        Integer v = p * a[i][j];
        if (f != 0) v -= f * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      for (std::size_t j = 0; j < c; ++j) a[i][j] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Integer>> nullspace(const IntMatrix& input) {
  std::vector<std::vector<Integer>> basis;
  if (input.empty()) return basis;
  std::size_t cols = input[0].size();
  IntMatrix a = input;
  auto pivots = echelon_fraction_free(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, 0);
    x[f] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      std::size_t c = pivots[k];
      Rational s = 0;
      for (std::size_t j = c + 1; j < cols; ++j)
        if (x[j] != 0 && a[k][j] != 0) s += Rational(a[k][j]) * x[j];
      x[c] = -s / Rational(a[k][c]);
    }
    Integer l = 1, g = 0;
    for (auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> z;
    for (auto& v : x) {
      Rational w = v * Rational(l);
      z.push_back(w.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    for (auto& v : z) v /= g;
    basis.push_back(std::move(z));
  }
  return basis;
}

IntMatrix integer_rows(const Matrix& a) {
  IntMatrix out;
  for (const auto& row : a) {
    Integer l = 1;
    for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> z;
    for (const auto& v : row) z.push_back(Rational(v * Rational(l)).get_num());
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<std::vector<Integer>> nullspace(const Matrix& a) { return nullspace(integer_rows(a)); }

std::size_t rank(const Matrix& a) {
  IntMatrix m = integer_rows(a);
  return echelon_fraction_free(m).size();
}

Rational determinant(Matrix a) {
  std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& input) {
  std::size_t n = input.size();
  Matrix a = input;
  Matrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational d = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= d;
      inv[c][j] *= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace lglab
