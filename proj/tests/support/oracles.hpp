// Reference implementations the tests trust instead of the library:
// word-map polynomials, rational solving for lattice membership and
// order, cofactor determinants, and a Smith form via minor gcds.  All
// deliberately naive.

#pragma once

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "lcstorsion/bigint.hpp"
#include "lcstorsion/freering.hpp"

namespace testsupport {

using lcs::BigInt;
using lcs::Var;

// ---------------------------------------------------------------------------
// Word-map polynomials.
// ---------------------------------------------------------------------------

using Word = std::vector<Var>;
using WordPoly = std::map<Word, BigInt>;

inline WordPoly wp_unit() { return {{Word{}, BigInt(1)}}; }

inline WordPoly wp_var(Var v) { return {{Word{v}, BigInt(1)}}; }

inline WordPoly wp_word(Word w, BigInt c = BigInt(1)) {
  WordPoly p;
  if (!c.is_zero()) p.emplace(std::move(w), std::move(c));
  return p;
}

inline WordPoly wp_add(const WordPoly& a, const WordPoly& b) {
  WordPoly out = a;
  for (const auto& [w, c] : b) {
    BigInt& slot = out[w];
    slot += c;
    if (slot.is_zero()) out.erase(w);
  }
  return out;
}

inline WordPoly wp_scale(const WordPoly& a, const BigInt& c) {
  WordPoly out;
  if (c.is_zero()) return out;
  for (const auto& [w, k] : a) out.emplace(w, k * c);
  return out;
}

inline WordPoly wp_mul(const WordPoly& a, const WordPoly& b) {
  WordPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      BigInt& slot = out[w];
      slot += ca * cb;
      if (slot.is_zero()) out.erase(w);
    }
  return out;
}

inline WordPoly wp_commutator2(const WordPoly& a, const WordPoly& b) {
  return wp_add(wp_mul(a, b), wp_scale(wp_mul(b, a), BigInt(-1)));
}

// Left-normed [a1, a2, ..., ak].
inline WordPoly wp_commutator(const std::vector<WordPoly>& args) {
  if (args.empty()) throw std::invalid_argument("empty commutator");
  WordPoly acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) acc = wp_commutator2(acc, args[i]);
  return acc;
}

inline lcs::Poly wp_to_poly(const WordPoly& p) {
  std::vector<lcs::Poly::Term> terms;
  for (const auto& [w, c] : p) terms.emplace_back(lcs::Monomial(w), c);
  return lcs::Poly::from_terms(std::move(terms));
}

inline WordPoly poly_to_wp(const lcs::Poly& p) {
  WordPoly out;
  for (const auto& [m, c] : p.terms()) out.emplace(m.word(), c);
  return out;
}

// ---------------------------------------------------------------------------
// Exact rationals.
// ---------------------------------------------------------------------------

struct Frac {
  BigInt num = 0, den = 1;

  Frac() = default;
  Frac(BigInt n) : num(std::move(n)) {}  // NOLINT: implicit by design
  Frac(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  void normalize() {
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num.is_zero()) {
      den = 1;
      return;
    }
    BigInt g = lcs::gcd_val(lcs::abs_val(num), den);
    num /= g;
    den /= g;
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_integer() const { return den == 1; }

  Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
  Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
  Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
  Frac operator/(const Frac& o) const {
    if (o.num.is_zero()) throw std::invalid_argument("division by zero");
    return Frac(num * o.den, den * o.num);
  }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
};

// ---------------------------------------------------------------------------
// Rational membership and order in an integer lattice.
// ---------------------------------------------------------------------------

// Solves sum_i c_i rows[i] = target.  The rows must be linearly
// independent (logic_error otherwise); returns nullopt when the system
// has no rational solution.
inline std::optional<std::vector<Frac>> solve_unique(const std::vector<std::vector<BigInt>>& rows,
                                                     const std::vector<BigInt>& target) {
  const std::size_t k = rows.size();
  const std::size_t n = target.size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("row length mismatch");

  // Equations indexed by coordinate j: sum_i a[j][i] c_i = target[j].
  std::vector<std::vector<Frac>> a(n, std::vector<Frac>(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[j][i] = Frac(rows[i][j]);
    a[j][k] = Frac(target[j]);
  }

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_of(k, SIZE_MAX);
  for (std::size_t col = 0; col < k && rank < n; ++col) {
    std::size_t sel = SIZE_MAX;
    for (std::size_t r = rank; r < n; ++r)
      if (!a[r][col].is_zero()) {
        sel = r;
        break;
      }
    if (sel == SIZE_MAX) continue;
    std::swap(a[rank], a[sel]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      Frac f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c <= k; ++c) a[r][c] = a[r][c] - f * a[rank][c];
    }
    pivot_of[col] = rank;
    ++rank;
  }
  if (rank < k) throw std::logic_error("solve_unique: dependent rows");
  for (std::size_t r = rank; r < n; ++r)
    if (!a[r][k].is_zero()) return std::nullopt;

  std::vector<Frac> sol(k);
  for (std::size_t col = 0; col < k; ++col) {
    const auto& row = a[pivot_of[col]];
    sol[col] = row[k] / row[col];
  }
  return sol;
}

inline std::size_t oracle_rank(const std::vector<std::vector<BigInt>>& rows) {
  std::vector<std::vector<Frac>> a;
  for (const auto& r : rows) {
    std::vector<Frac> fr(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) fr[j] = Frac(r[j]);
    a.push_back(std::move(fr));
  }
  std::size_t rank = 0;
  const std::size_t n = a.empty() ? 0 : a[0].size();
  for (std::size_t col = 0; col < n && rank < a.size(); ++col) {
    std::size_t sel = SIZE_MAX;
    for (std::size_t r = rank; r < a.size(); ++r)
      if (!a[r][col].is_zero()) {
        sel = r;
        break;
      }
    if (sel == SIZE_MAX) continue;
    std::swap(a[rank], a[sel]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][col].is_zero()) continue;
      Frac f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline bool oracle_member(const std::vector<std::vector<BigInt>>& rows,
                          const std::vector<BigInt>& v) {
  auto sol = solve_unique(rows, v);
  if (!sol) return false;
  for (const auto& f : *sol)
    if (!f.is_integer()) return false;
  return true;
}

// Least m >= 1 with m*v in the span, as the lcm of the solution
// denominators; nullopt when v is outside the rational span.
inline std::optional<BigInt> oracle_order(const std::vector<std::vector<BigInt>>& rows,
                                          const std::vector<BigInt>& v) {
  auto sol = solve_unique(rows, v);
  if (!sol) return std::nullopt;
  BigInt m = 1;
  for (const auto& f : *sol) m = lcs::lcm_val(m, f.den);
  return m;
}

// ---------------------------------------------------------------------------
// Determinants and a Smith form by minor gcds.
// ---------------------------------------------------------------------------

inline BigInt det_cofactor(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return BigInt(1);
  if (n == 1) return m[0][0];
  BigInt acc = 0;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (!m[0][c].is_zero()) {
      std::vector<std::vector<BigInt>> sub(n - 1, std::vector<BigInt>(n - 1));
      for (std::size_t i = 1; i < n; ++i) {
        std::size_t cc = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == c) continue;
          sub[i - 1][cc++] = m[i][j];
        }
      }
      acc += BigInt(sign) * m[0][c] * det_cofactor(sub);
    }
    sign = -sign;
  }
  return acc;
}

// Fraction-free elimination; fine for the 12 x 12 transform checks.
inline BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return BigInt(1);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && m[s][k].is_zero()) ++s;
      if (s == n) return BigInt(0);
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return BigInt(sign) * m[n - 1][n - 1];
}

// gcd of all k x k minors (zero when all minors vanish).
inline BigInt minor_gcd(const std::vector<std::vector<BigInt>>& m, std::size_t k) {
  const std::size_t R = m.size(), C = m.empty() ? 0 : m[0].size();
  if (k == 0) return BigInt(1);
  if (k > R || k > C) return BigInt(0);
  std::vector<std::size_t> ri(k), ci(k);
  for (std::size_t i = 0; i < k; ++i) ri[i] = i;
  BigInt g = 0;
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) ci[i] = i;
    for (;;) {
      std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[ri[i]][ci[j]];
      g = lcs::gcd_val(g, lcs::abs_val(det_cofactor(sub)));
      // next column combination
      std::size_t i = k;
      while (i > 0 && ci[i - 1] == C - k + (i - 1)) --i;
      if (i == 0) break;
      ++ci[i - 1];
      for (std::size_t j = i; j < k; ++j) ci[j] = ci[j - 1] + 1;
    }
    std::size_t i = k;
    while (i > 0 && ri[i - 1] == R - k + (i - 1)) --i;
    if (i == 0) break;
    ++ri[i - 1];
    for (std::size_t j = i; j < k; ++j) ri[j] = ri[j - 1] + 1;
  }
  return g;
}

// Invariant factors d_1 | d_2 | ... via d_k = g_k / g_{k-1}.
inline std::vector<BigInt> snf_by_minors(const std::vector<std::vector<BigInt>>& m) {
  std::vector<BigInt> d;
  BigInt prev = 1;
  for (std::size_t k = 1;; ++k) {
    BigInt g = minor_gcd(m, k);
    if (g.is_zero()) break;
    d.push_back(g / prev);
    prev = g;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Deterministic randomness.
// ---------------------------------------------------------------------------

struct Rng {
  std::mt19937 g;
  explicit Rng(std::uint32_t seed) : g(seed) {}

  std::uint32_t pick(std::uint32_t lo, std::uint32_t hi) {
    return lo + static_cast<std::uint32_t>(g() % (hi - lo + 1));
  }

  BigInt coeff(int lo, int hi) {
    return BigInt(static_cast<int>(pick(0, static_cast<std::uint32_t>(hi - lo))) + lo);
  }

  Word word(std::uint32_t max_len, Var max_var) {
    Word w(pick(0, max_len));
    for (auto& v : w) v = static_cast<Var>(pick(1, max_var));
    return w;
  }

  // Sum of up to `terms` random monomials.
  lcs::Poly poly(std::uint32_t terms, std::uint32_t max_len, Var max_var, int coeff_bound) {
    std::vector<lcs::Poly::Term> ts;
    std::uint32_t n = pick(1, terms);
    for (std::uint32_t i = 0; i < n; ++i)
      ts.emplace_back(lcs::Monomial(word(max_len, max_var)),
                      coeff(-coeff_bound, coeff_bound));
    return lcs::Poly::from_terms(std::move(ts));
  }

  WordPoly word_poly(std::uint32_t terms, std::uint32_t max_len, Var max_var,
                     int coeff_bound) {
    WordPoly p;
    std::uint32_t n = pick(1, terms);
    for (std::uint32_t i = 0; i < n; ++i) {
      BigInt c = coeff(-coeff_bound, coeff_bound);
      if (c.is_zero()) continue;
      Word w = word(max_len, max_var);
      BigInt& slot = p[w];
      slot += c;
      if (slot.is_zero()) p.erase(w);
    }
    return p;
  }
};

}  // namespace testsupport
