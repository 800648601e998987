#include "wcd/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace wcd {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  e_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.front().size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

namespace {

bool is_prime_trial_division(const mpz_class& p) {
  if (p < 2) return false;
  if (p == 2) return true;
  if (mpz_even_p(p.get_mpz_t())) return false;
  for (mpz_class d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t field_prime(const FieldSpec& f) { return f.characteristic().get_ui(); }

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

std::vector<std::vector<std::uint64_t>> reduce_mod_p(const IntMatrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> g(static_cast<std::size_t>(m.rows()),
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          mpz_fdiv_ui(m.at(i, j).get_mpz_t(), static_cast<unsigned long>(p));
  return g;
}

// Reduced row echelon form in place; returns the pivot column of each
// pivot row (in order).
std::vector<int> rref_mod_p(std::vector<std::vector<std::uint64_t>>& g, std::uint64_t p) {
  const int rows = static_cast<int>(g.size());
  const int cols = rows ? static_cast<int>(g.front().size()) : 0;
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (g[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(g[static_cast<std::size_t>(r)], g[static_cast<std::size_t>(pr)]);
    const std::uint64_t inv = mod_inverse(g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], p);
    for (int j = c; j < cols; ++j)
      g[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
          g[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint64_t f = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) {
        const std::uint64_t sub = f * g[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] % p;
        g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            (g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + p - sub) % p;
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

// Fraction-free Bareiss elimination; intermediate entries stay integral
// and bounded by minors of the input.
int rank_bareiss(IntMatrix a) {
  const int m = a.rows(), n = a.cols();
  int r = 0;
  mpz_class prev = 1;
  while (r < m && r < n) {
    int pr = -1, pc = -1;
    for (int c = r; c < n && pr < 0; ++c)
      for (int i = r; i < m; ++i)
        if (a.at(i, c) != 0) {
          pr = i;
          pc = c;
          break;
        }
    if (pr < 0) break;
    a.swap_rows(r, pr);
    a.swap_cols(r, pc);
    const mpz_class piv = a.at(r, r);
    for (int i = r + 1; i < m; ++i) {
      for (int j = r + 1; j < n; ++j) {
        mpz_class t = a.at(i, j) * piv - a.at(i, r) * a.at(r, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, r) = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

// Quotient rounded to the nearest integer, so |a - q d| <= |d| / 2.
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& d) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  if (2 * abs(r) > abs(d)) q += ((r < 0) == (d < 0)) ? 1 : -1;
  return q;
}

// Smith normal form reduction: pivot on the globally minimal nonzero entry
// (ties by row then column), sweep its row and column with nearest-quotient
// reductions, and re-pick the pivot whenever a remainder survives — the
// minimum at least halves between sweeps, which also keeps entry growth in
// check. Once a pivot divides everything that is left, it is final.
std::vector<mpz_class> snf_diagonal(IntMatrix a) {
  const int m = a.rows(), n = a.cols();
  std::vector<mpz_class> diag;
  for (int t = 0; t < m && t < n; ++t) {
    while (true) {
      int pr = -1, pc = -1;
      mpz_class best;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j) {
          if (a.at(i, j) == 0) continue;
          mpz_class v = abs(a.at(i, j));
          if (pr < 0 || v < best) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) return diag;  // submatrix is all zero
      a.swap_rows(t, pr);
      a.swap_cols(t, pc);
      const mpz_class d = a.at(t, t);

      bool cleared = true;
      for (int i = t + 1; i < m; ++i) {
        if (a.at(i, t) == 0) continue;
        const mpz_class q = nearest_quotient(a.at(i, t), d);
        if (q != 0)
          for (int j = t; j < n; ++j) a.at(i, j) -= q * a.at(t, j);
        if (a.at(i, t) != 0) cleared = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (a.at(t, j) == 0) continue;
        const mpz_class q = nearest_quotient(a.at(t, j), d);
        if (q != 0)
          for (int i = t; i < m; ++i) a.at(i, j) -= q * a.at(i, t);
        if (a.at(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      bool divides_rest = true;
      for (int i = t + 1; i < m && divides_rest; ++i)
        for (int j = t + 1; j < n && divides_rest; ++j)
          if (a.at(i, j) % d != 0) {
            // Fold the offending row into row t; the next sweep leaves a
            // remainder below |d| and the pivot shrinks toward the gcd.
            for (int k = t; k < n; ++k) a.at(t, k) += a.at(i, k);
            divides_rest = false;
          }
      if (divides_rest) break;
    }
    diag.push_back(abs(a.at(t, t)));
  }
  return diag;
}

// RREF over the rationals with exact mpq arithmetic.
std::vector<int> rref_rational(std::vector<std::vector<mpq_class>>& g) {
  const int rows = static_cast<int>(g.size());
  const int cols = rows ? static_cast<int>(g.front().size()) : 0;
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (g[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(g[static_cast<std::size_t>(r)], g[static_cast<std::size_t>(pr)]);
    const mpq_class inv = 1 / g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (int j = c; j < cols; ++j) g[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const mpq_class f = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j)
        g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * g[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

// Scale a rational vector to a primitive integer vector with positive
// leading entry.
std::vector<mpz_class> to_primitive(const std::vector<mpq_class>& v) {
  mpz_class denom_lcm = 1;
  for (const mpq_class& q : v)
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> out(v.size());
  mpz_class content = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpq_class scaled = v[i] * denom_lcm;
    out[i] = scaled.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content > 1)
    for (mpz_class& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  for (const mpz_class& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (mpz_class& y : out) y = -y;
    break;
  }
  return out;
}

}  // namespace

FieldSpec FieldSpec::gf(const mpz_class& p) {
  if (p >= (mpz_class{1} << 32))
    throw std::invalid_argument("characteristic " + p.get_str() + " exceeds the 2^32 kernel limit");
  if (!is_prime_trial_division(p))
    throw std::invalid_argument("characteristic " + p.get_str() + " is not prime");
  return FieldSpec(p);
}

int rank(const IntMatrix& m, const FieldSpec& f) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (f.is_rationals()) return rank_bareiss(m);
  const std::uint64_t p = field_prime(f);
  auto g = reduce_mod_p(m, p);
  return static_cast<int>(rref_mod_p(g, p).size());
}

InvariantFactors invariant_factors(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  return {snf_diagonal(m)};
}

std::vector<std::vector<mpz_class>> nullspace_basis(const IntMatrix& m, const FieldSpec& f) {
  const int n = m.cols();
  std::vector<std::vector<mpz_class>> basis;

  if (f.is_rationals()) {
    std::vector<std::vector<mpq_class>> g(static_cast<std::size_t>(m.rows()),
                                          std::vector<mpq_class>(static_cast<std::size_t>(n)));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < n; ++j) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    const std::vector<int> pivots = rref_rational(g);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int free = 0; free < n; ++free) {
      if (is_pivot[static_cast<std::size_t>(free)]) continue;
      std::vector<mpq_class> x(static_cast<std::size_t>(n), 0);
      x[static_cast<std::size_t>(free)] = 1;
      for (std::size_t k = 0; k < pivots.size(); ++k)
        x[static_cast<std::size_t>(pivots[k])] = -g[k][static_cast<std::size_t>(free)];
      basis.push_back(to_primitive(x));
    }
    return basis;
  }

  const std::uint64_t p = field_prime(f);
  auto g = reduce_mod_p(m, p);
  const std::vector<int> pivots = rref_mod_p(g, p);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<mpz_class> x(static_cast<std::size_t>(n), 0);
    x[static_cast<std::size_t>(free)] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const std::uint64_t entry = g[k][static_cast<std::size_t>(free)];
      x[static_cast<std::size_t>(pivots[k])] = static_cast<unsigned long>((p - entry) % p);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<mpz_class> distinct_prime_factors(const mpz_class& n) {
  mpz_class m = abs(n);
  std::vector<mpz_class> out;
  if (m <= 1) return out;
  auto strip = [&m, &out](const mpz_class& d) {
    if (m % d != 0) return;
    out.push_back(d);
    while (m % d == 0) mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
  };
  strip(2);
  for (mpz_class d = 3; d * d <= m; d += 2) {
    strip(d);
    // Large residuals are prime in practice; check so the loop short-circuits.
    if (m > 1 && mpz_probab_prime_p(m.get_mpz_t(), 40)) break;
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace wcd
