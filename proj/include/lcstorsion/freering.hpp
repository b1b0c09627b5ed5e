#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcstorsion/bigint.hpp"

namespace lcs {

using Var = std::uint32_t;  // variable index, >= 1

// A word in the free monoid on x1, x2, ... (the empty word is the unit).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Var> word) : word_(std::move(word)) {
    for (Var v : word_)
      if (v == 0) throw std::invalid_argument("variable index must be >= 1");
  }

  static Monomial unit() { return Monomial(); }
  static Monomial var(Var i) { return Monomial(std::vector<Var>{i}); }

  const std::vector<Var>& word() const { return word_; }
  std::size_t degree() const { return word_.size(); }
  bool is_unit() const { return word_.empty(); }

  Monomial operator*(const Monomial& o) const {
    std::vector<Var> w;
    w.reserve(word_.size() + o.word_.size());
    w.insert(w.end(), word_.begin(), word_.end());
    w.insert(w.end(), o.word_.begin(), o.word_.end());
    Monomial m;
    m.word_ = std::move(w);
    return m;
  }

  bool operator==(const Monomial& o) const { return word_ == o.word_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Canonical order: degree first, then lexicographic on the index sequence.
  bool operator<(const Monomial& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
  }

  // Pure lexicographic order (a proper prefix precedes its extensions).
  static bool lex_less(const Monomial& a, const Monomial& b) {
    return a.word_ < b.word_;
  }

 private:
  std::vector<Var> word_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (Var v : m.word()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Exponent vector: sorted (variable, multiplicity) pairs, multiplicities >= 1.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<std::pair<Var, std::uint32_t>> entries)
      : e_(std::move(entries)) {
    std::sort(e_.begin(), e_.end());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i].first == 0 || e_[i].second == 0)
        throw std::invalid_argument("multidegree entries must be positive");
      if (i && e_[i].first == e_[i - 1].first)
        throw std::invalid_argument("duplicate variable in multidegree");
    }
  }

  static MultiDegree of(const Monomial& m) {
    std::map<Var, std::uint32_t> c;
    for (Var v : m.word()) ++c[v];
    MultiDegree d;
    d.e_.assign(c.begin(), c.end());
    return d;
  }

  const std::vector<std::pair<Var, std::uint32_t>>& entries() const { return e_; }

  std::uint32_t total() const {
    std::uint32_t t = 0;
    for (const auto& [v, k] : e_) t += k;
    return t;
  }

  std::uint32_t count(Var v) const {
    for (const auto& [w, k] : e_)
      if (w == v) return k;
    return 0;
  }

  bool is_multilinear() const {
    for (const auto& [v, k] : e_)
      if (k != 1) return false;
    return true;
  }

  Var max_var() const { return e_.empty() ? 0 : e_.back().first; }

  MultiDegree operator+(const MultiDegree& o) const {
    std::map<Var, std::uint32_t> c;
    for (const auto& [v, k] : e_) c[v] += k;
    for (const auto& [v, k] : o.e_) c[v] += k;
    MultiDegree d;
    d.e_.assign(c.begin(), c.end());
    return d;
  }

  // All letters with multiplicity, ascending.
  std::vector<Var> letters() const {
    std::vector<Var> out;
    out.reserve(total());
    for (const auto& [v, k] : e_)
      for (std::uint32_t i = 0; i < k; ++i) out.push_back(v);
    return out;
  }

  bool operator==(const MultiDegree& o) const { return e_ == o.e_; }
  bool operator!=(const MultiDegree& o) const { return !(*this == o); }
  bool operator<(const MultiDegree& o) const { return e_ < o.e_; }

  std::string to_string() const {
    if (e_.empty()) return "unit";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, k] : e_) {
      if (!first) os << ',';
      first = false;
      os << v << ':' << k;
    }
    return os.str();
  }

 private:
  std::vector<std::pair<Var, std::uint32_t>> e_;
};

// Element of the free unitary associative ring on x1, x2, ... over Z.
// Terms are kept sorted in the canonical monomial order with nonzero
// coefficients, so equal polynomials compare equal elementwise.
class Poly {
 public:
  using Term = std::pair<Monomial, BigInt>;

  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly unit() { return monomial(Monomial::unit()); }
  static Poly variable(Var i) { return monomial(Monomial::var(i)); }
  static Poly constant(BigInt c) { return monomial(Monomial::unit(), std::move(c)); }

  static Poly monomial(Monomial m, BigInt c = BigInt(1)) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
  }

  static Poly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Poly p;
    for (auto& [m, c] : terms) {
      if (c.is_zero()) continue;
      if (!p.terms_.empty() && p.terms_.back().first == m)
        p.terms_.back().second += c;
      else
        p.terms_.emplace_back(std::move(m), std::move(c));
      if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Coefficient of m (zero when absent).
  BigInt coefficient(const Monomial& m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, const Monomial& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return BigInt(0);
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }

  Poly operator+(const Poly& o) const {
    Poly out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        out.terms_.push_back(o.terms_[j++]);
      } else {
        BigInt c = terms_[i].second + o.terms_[j].second;
        if (!c.is_zero()) out.terms_.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    std::map<Monomial, BigInt> acc;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
    Poly out;
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) out.terms_.emplace_back(m, std::move(c));
    return out;
  }

  Poly operator*(const BigInt& s) const {
    if (s.is_zero()) return Poly();
    Poly p = *this;
    for (auto& [m, c] : p.terms_) c *= s;
    return p;
  }

  friend Poly operator*(const BigInt& s, const Poly& p) { return p * s; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(std::uint64_t e) const {
    Poly acc = Poly::unit();
    for (std::uint64_t i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Arbitrary total order (for use as set/map keys).
  bool operator<(const Poly& o) const {
    std::size_t n = std::min(terms_.size(), o.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (terms_[i].first != o.terms_[i].first) return terms_[i].first < o.terms_[i].first;
      if (terms_[i].second != o.terms_[i].second) return terms_[i].second < o.terms_[i].second;
    }
    return terms_.size() < o.terms_.size();
  }

  // Lexicographically greatest monomial (the classical leading term for
  // homogeneous elements). Requires a nonzero polynomial.
  const Monomial& leading_monomial_lex() const {
    if (terms_.empty()) throw std::logic_error("leading monomial of zero");
    const Monomial* best = &terms_[0].first;
    for (const auto& [m, c] : terms_)
      if (Monomial::lex_less(*best, m)) best = &m;
    return *best;
  }

 private:
  std::vector<Term> terms_;
};

// Left-normed commutator [a1, a2, ..., ak] = [[a1, a2], ...], k >= 1.
inline Poly commutator(std::span<const Poly> args) {
  if (args.empty()) throw std::invalid_argument("commutator needs at least one argument");
  Poly acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) acc = acc * args[i] - args[i] * acc;
  return acc;
}

inline Poly commutator(std::initializer_list<Poly> args) {
  return commutator(std::span<const Poly>(args.begin(), args.size()));
}

inline Poly commutator(const std::vector<Poly>& args) {
  return commutator(std::span<const Poly>(args.data(), args.size()));
}

inline MultiDegree multidegree(const Monomial& m) { return MultiDegree::of(m); }

inline bool is_multihomogeneous(const Poly& p) {
  if (p.is_zero()) return true;
  MultiDegree d = MultiDegree::of(p.terms()[0].first);
  for (const auto& [m, c] : p.terms())
    if (MultiDegree::of(m) != d) return false;
  return true;
}

inline Poly project_component(const Poly& p, const MultiDegree& mu) {
  std::vector<Poly::Term> keep;
  for (const auto& t : p.terms())
    if (MultiDegree::of(t.first) == mu) keep.push_back(t);
  return Poly::from_terms(std::move(keep));
}

inline std::map<MultiDegree, Poly> split_components(const Poly& p) {
  std::map<MultiDegree, std::vector<Poly::Term>> buckets;
  for (const auto& t : p.terms()) buckets[MultiDegree::of(t.first)].push_back(t);
  std::map<MultiDegree, Poly> out;
  for (auto& [mu, terms] : buckets) out.emplace(mu, Poly::from_terms(std::move(terms)));
  return out;
}

// Ring endomorphism sending each variable through sigma; variables absent
// from sigma map to themselves.
inline Poly substitute(const Poly& p, const std::map<Var, Poly>& sigma) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Poly prod = Poly::constant(c);
    for (Var v : m.word()) {
      auto it = sigma.find(v);
      prod = (it == sigma.end()) ? prod * Poly::variable(v) : prod * it->second;
    }
    out += prod;
  }
  return out;
}

// Endomorphism sending x_i to 1 and fixing every other variable.
inline Poly substitute_unit(const Poly& p, Var i) {
  std::vector<Poly::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Var> w;
    w.reserve(m.word().size());
    for (Var v : m.word())
      if (v != i) w.push_back(v);
    terms.emplace_back(Monomial(std::move(w)), c);
  }
  return Poly::from_terms(std::move(terms));
}

// Endomorphism fixing x_i for i <= max_var and sending x_i to 0 for i > max_var.
inline Poly truncate_variables(const Poly& p, Var max_var) {
  std::vector<Poly::Term> keep;
  for (const auto& [m, c] : p.terms()) {
    bool alive = true;
    for (Var v : m.word())
      if (v > max_var) {
        alive = false;
        break;
      }
    if (alive) keep.emplace_back(m, c);
  }
  return Poly::from_terms(std::move(keep));
}

// Canonical text rendering: terms in canonical monomial order, " + "/" - "
// separators, coefficients of magnitude 1 elided except on the unit monomial.
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (m.is_unit()) {
      os << mag.str();
    } else {
      bool wrote = false;
      if (mag != 1) {
        os << mag.str();
        wrote = true;
      }
      for (Var v : m.word()) {
        if (wrote) os << '*';
        os << 'x' << v;
        wrote = true;
      }
    }
  }
  return os.str();
}

}  // namespace lcs
