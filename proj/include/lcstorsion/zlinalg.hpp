#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcstorsion/bigint.hpp"

namespace lcs {

using Row = std::vector<BigInt>;

// Dense matrix over Z. Row-major storage.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(std::size_t cols, const std::vector<Row>& rows) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row width mismatch");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Row row(std::size_t r) const {
    return Row(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  std::vector<Row> row_list() const {
    std::vector<Row> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  bool is_zero_row(std::size_t r) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(r, j).is_zero()) return false;
    return true;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const BigInt& x = at(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const BigInt& y = o.at(k, j);
          if (!y.is_zero()) out.at(i, j) += x * y;
        }
      }
    return out;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  // Text format: first line "rows cols", then one line per row.
  std::string to_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) os << ' ';
        os << at(r, c).str();
      }
      os << '\n';
    }
    return os.str();
  }

  static IntMatrix parse_text(const std::string& text) {
    std::istringstream is(text);
    long long rows = -1, cols = -1;
    if (!(is >> rows >> cols) || rows < 0 || cols < 0)
      throw std::invalid_argument("matrix text: expected leading \"rows cols\"");
    IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (long long r = 0; r < rows; ++r)
      for (long long c = 0; c < cols; ++c) {
        std::string tok;
        if (!(is >> tok)) throw std::invalid_argument("matrix text: too few entries");
        try {
          m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = BigInt(tok);
        } catch (const std::exception&) {
          throw std::invalid_argument("matrix text: bad integer \"" + tok + "\"");
        }
      }
    std::string extra;
    if (is >> extra) throw std::invalid_argument("matrix text: trailing data");
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

namespace detail {

inline std::size_t first_nonzero(const Row& v, std::size_t from, std::size_t limit) {
  for (std::size_t j = from; j < limit; ++j)
    if (!v[j].is_zero()) return j;
  return limit;
}

// v += c * w, touching columns [from, v.size()).
inline void axpy(Row& v, const BigInt& c, const Row& w, std::size_t from) {
  for (std::size_t k = from; k < v.size(); ++k)
    if (!w[k].is_zero()) v[k] += c * w[k];
}

// Incremental row Hermite normal form. Rows are kept in echelon order
// (strictly increasing pivot columns, positive pivots). Entries above a pivot
// are only guaranteed reduced into [0, pivot) after normalize().
//
// When `tail > 0`, each row carries `tail` extra bookkeeping columns that
// participate in every row operation but never in pivot selection; rows whose
// pivot block reduces to zero are moved to `stash`.
class HnfBuilder {
 public:
  explicit HnfBuilder(std::size_t pivot_cols, std::size_t tail = 0)
      : pcols_(pivot_cols), width_(pivot_cols + tail) {}

  std::size_t pivot_cols() const { return pcols_; }
  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  void insert(Row v) {
    if (v.size() != width_) throw std::invalid_argument("row width mismatch");
    std::size_t j = first_nonzero(v, 0, pcols_);
    std::size_t idx = 0;
    while (j < pcols_) {
      while (idx < rows_.size() && rows_[idx].pivot < j) ++idx;
      if (idx == rows_.size() || rows_[idx].pivot > j) {
        if (v[j] < 0)
          for (auto& x : v) x = -x;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx),
                     Entry{j, std::move(v)});
        normalized_ = false;
        return;
      }
      Entry& p = rows_[idx];
      const BigInt& piv = p.v[j];
      BigInt a = v[j];
      if ((a % piv).is_zero()) {
        axpy(v, -(a / piv), p.v, j);
      } else {
        ExtGcd e = ext_gcd(piv, a);
        BigInt pg = piv / e.g, ag = a / e.g;
        Row np(width_);
        for (std::size_t k = j; k < width_; ++k) np[k] = e.s * p.v[k] + e.t * v[k];
        for (std::size_t k = j; k < width_; ++k) v[k] = pg * v[k] - ag * p.v[k];
        p.v = std::move(np);
        normalized_ = false;
      }
      j = first_nonzero(v, j + 1, pcols_);
    }
    if (first_nonzero(v, pcols_, width_) < width_) stash_.push_back(std::move(v));
  }

  // Reduce entries above each pivot into [0, pivot). Idempotent; afterwards
  // the pivot block is the canonical HNF of the inserted row span.
  void normalize() {
    if (normalized_) return;
    for (std::size_t r = 1; r < rows_.size(); ++r) {
      const Entry& pr = rows_[r];
      const BigInt& piv = pr.v[pr.pivot];
      for (std::size_t q = 0; q < r; ++q) {
        BigInt f = floor_div(rows_[q].v[pr.pivot], piv);
        if (!f.is_zero()) axpy(rows_[q].v, -f, pr.v, pr.pivot);
      }
    }
    normalized_ = true;
  }

  bool contains(Row v) const {
    if (v.size() != pcols_) throw std::invalid_argument("vector width mismatch");
    std::size_t j = first_nonzero(v, 0, pcols_);
    std::size_t idx = 0;
    while (j < pcols_) {
      while (idx < rows_.size() && rows_[idx].pivot < j) ++idx;
      if (idx == rows_.size() || rows_[idx].pivot > j) return false;
      const Entry& p = rows_[idx];
      if (!(v[j] % p.v[j]).is_zero()) return false;
      axpy(v, -(v[j] / p.v[j]), p.v, j);
      j = first_nonzero(v, j + 1, pcols_);
    }
    return true;
  }

  // Coordinates of v in the current basis rows, or nullopt when v is outside.
  std::optional<Row> coordinates(Row v) const {
    if (v.size() != pcols_) throw std::invalid_argument("vector width mismatch");
    Row coef(rows_.size());
    std::size_t j = first_nonzero(v, 0, pcols_);
    std::size_t idx = 0;
    while (j < pcols_) {
      while (idx < rows_.size() && rows_[idx].pivot < j) ++idx;
      if (idx == rows_.size() || rows_[idx].pivot > j) return std::nullopt;
      const Entry& p = rows_[idx];
      if (!(v[j] % p.v[j]).is_zero()) return std::nullopt;
      BigInt c = v[j] / p.v[j];
      axpy(v, -c, p.v, j);
      coef[idx] = c;
      j = first_nonzero(v, j + 1, pcols_);
    }
    return coef;
  }

  BigInt pivot_product() const {
    BigInt p = 1;
    for (const auto& e : rows_) p *= e.v[e.pivot];
    return p;
  }

  // Pivot-block rows, normalized. With tail != 0 only the first pivot_cols
  // columns are returned.
  std::vector<Row> basis_rows() {
    normalize();
    std::vector<Row> out;
    out.reserve(rows_.size());
    for (const auto& e : rows_)
      out.emplace_back(e.v.begin(), e.v.begin() + static_cast<std::ptrdiff_t>(pcols_));
    return out;
  }

  // Full augmented rows (pivot block + tail), normalized.
  std::vector<Row> augmented_rows() {
    normalize();
    std::vector<Row> out;
    out.reserve(rows_.size());
    for (const auto& e : rows_) out.push_back(e.v);
    return out;
  }

  const std::vector<Row>& stashed() const { return stash_; }

 private:
  struct Entry {
    std::size_t pivot;
    Row v;
  };
  std::size_t pcols_, width_;
  std::vector<Entry> rows_;
  std::vector<Row> stash_;
  bool normalized_ = true;
};

}  // namespace detail

struct HnfResult {
  IntMatrix h;  // canonical row HNF, zero rows at the bottom
  IntMatrix u;  // unimodular, u * m == h
};

// Row Hermite normal form with transform.
inline HnfResult hnf(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  detail::HnfBuilder b(C, R);
  for (std::size_t i = 0; i < R; ++i) {
    Row v(C + R);
    for (std::size_t j = 0; j < C; ++j) v[j] = m.at(i, j);
    v[C + i] = 1;
    b.insert(std::move(v));
  }
  IntMatrix h(R, C), u(R, R);
  auto rows = b.augmented_rows();
  std::size_t r = 0;
  for (; r < rows.size(); ++r)
    for (std::size_t j = 0; j < C + R; ++j) {
      if (j < C)
        h.at(r, j) = rows[r][j];
      else
        u.at(r, j - C) = rows[r][j];
    }
  for (const auto& s : b.stashed()) {
    for (std::size_t j = C; j < C + R; ++j) u.at(r, j - C) = s[j];
    ++r;
  }
  return {std::move(h), std::move(u)};
}

// Basis of {z : z * m == 0}, as canonical HNF rows.
inline std::vector<Row> left_kernel_rows(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  detail::HnfBuilder b(C, R);
  for (std::size_t i = 0; i < R; ++i) {
    Row v(C + R);
    for (std::size_t j = 0; j < C; ++j) v[j] = m.at(i, j);
    v[C + i] = 1;
    b.insert(std::move(v));
  }
  detail::HnfBuilder k(R);
  for (const auto& s : b.stashed())
    k.insert(Row(s.begin() + static_cast<std::ptrdiff_t>(C), s.end()));
  return k.basis_rows();
}

// A subgroup of Z^ambient held as its canonical row HNF basis (no zero rows).
class Lattice {
 public:
  Lattice() = default;

  static Lattice zero(std::size_t ambient) {
    Lattice l;
    l.ambient_ = ambient;
    l.basis_ = IntMatrix(0, ambient);
    return l;
  }

  static Lattice full(std::size_t ambient) {
    Lattice l;
    l.ambient_ = ambient;
    l.basis_ = IntMatrix::identity(ambient);
    return l;
  }

  static Lattice from_rows(std::size_t ambient, const std::vector<Row>& rows) {
    detail::HnfBuilder b(ambient);
    for (const auto& r : rows) b.insert(r);
    return from_builder(ambient, b);
  }

  static Lattice from_matrix(const IntMatrix& m) { return from_rows(m.cols(), m.row_list()); }

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const Row& v) const {
    check_width(v);
    return builder().contains(v);
  }

  // Coordinates of v in the basis rows (integral), or nullopt.
  std::optional<Row> coordinates(const Row& v) const {
    check_width(v);
    return builder().coordinates(v);
  }

  // Least k >= 1 with k*v in the lattice; nullopt when v is outside the
  // rational span (no finite k exists).
  std::optional<BigInt> order_in_quotient(const Row& v) const {
    check_width(v);
    detail::HnfBuilder b = builder();
    BigInt before = b.pivot_product();
    b.insert(v);
    if (b.rank() != rank()) return std::nullopt;
    return before / b.pivot_product();
  }

  bool operator==(const Lattice& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Lattice& o) const { return !(*this == o); }

  // Builder seeded with the basis rows (cheap: rows are already echelon).
  detail::HnfBuilder builder() const {
    detail::HnfBuilder b(ambient_);
    for (std::size_t r = 0; r < basis_.rows(); ++r) b.insert(basis_.row(r));
    return b;
  }

  static Lattice from_builder(std::size_t ambient, detail::HnfBuilder& b) {
    Lattice l;
    l.ambient_ = ambient;
    auto rows = b.basis_rows();
    l.basis_ = IntMatrix(rows.size(), ambient);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < ambient; ++j) l.basis_.at(i, j) = std::move(rows[i][j]);
    return l;
  }

 private:
  void check_width(const Row& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector/lattice dimension mismatch");
  }
  std::size_t ambient_ = 0;
  IntMatrix basis_{0, 0};
};

inline bool lattice_equal(const Lattice& a, const Lattice& b) { return a == b; }

inline Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("lattice ambient mismatch");
  detail::HnfBuilder bld(a.ambient());
  for (std::size_t r = 0; r < a.basis().rows(); ++r) bld.insert(a.basis().row(r));
  for (std::size_t r = 0; r < b.basis().rows(); ++r) bld.insert(b.basis().row(r));
  return Lattice::from_builder(a.ambient(), bld);
}

// Exact intersection via the left kernel of the stacked bases: a kernel row
// (y, z) has y*A + z*B = 0, so y*A runs over the intersection.
inline Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("lattice ambient mismatch");
  const std::size_t ra = a.rank(), rb = b.rank(), N = a.ambient();
  IntMatrix stacked(ra + rb, N);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < N; ++j) stacked.at(i, j) = a.basis().at(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < N; ++j) stacked.at(ra + i, j) = b.basis().at(i, j);
  auto kernel = left_kernel_rows(stacked);
  std::vector<Row> gens;
  gens.reserve(kernel.size());
  for (const auto& yz : kernel) {
    Row w(N);
    for (std::size_t i = 0; i < ra; ++i)
      if (!yz[i].is_zero()) detail::axpy(w, yz[i], a.basis().row(i), 0);
    gens.push_back(std::move(w));
  }
  return Lattice::from_rows(N, gens);
}

// {z in Z^m : z * map_rows in target}; map_rows is m x target.ambient().
inline Lattice lattice_preimage(const IntMatrix& map_rows, const Lattice& target) {
  if (map_rows.cols() != target.ambient())
    throw std::invalid_argument("map/target dimension mismatch");
  const std::size_t m = map_rows.rows(), rt = target.rank(), N = target.ambient();
  IntMatrix stacked(m + rt, N);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < N; ++j) stacked.at(i, j) = map_rows.at(i, j);
  for (std::size_t i = 0; i < rt; ++i)
    for (std::size_t j = 0; j < N; ++j) stacked.at(m + i, j) = target.basis().at(i, j);
  auto kernel = left_kernel_rows(stacked);
  std::vector<Row> gens;
  gens.reserve(kernel.size());
  for (const auto& zy : kernel)
    gens.emplace_back(zy.begin(), zy.begin() + static_cast<std::ptrdiff_t>(m));
  return Lattice::from_rows(m, gens);
}

inline Row row_times_matrix(const Row& z, const IntMatrix& m) {
  if (z.size() != m.rows()) throw std::invalid_argument("row/matrix shape mismatch");
  Row out(m.cols());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out[j] += z[i] * m.at(i, j);
  }
  return out;
}

struct SnfResult {
  std::vector<BigInt> d;  // positive invariant factors, d[i] divides d[i+1]
  std::size_t rank = 0;   // == d.size()
  std::optional<IntMatrix> u, v;  // when requested: u * m * v == diag(d) padded
};

// Smith normal form by iterated gcd elimination, pivoting on the entry of
// minimal absolute value in the working submatrix.
inline SnfResult snf(IntMatrix a, bool with_transforms = false) {
  const std::size_t R = a.rows(), C = a.cols();
  IntMatrix u, v;
  if (with_transforms) {
    u = IntMatrix::identity(R);
    v = IntMatrix::identity(C);
  }
  auto row_swap = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < C; ++j) std::swap(a.at(i, j), a.at(k, j));
    if (with_transforms)
      for (std::size_t j = 0; j < R; ++j) std::swap(u.at(i, j), u.at(k, j));
  };
  auto col_swap = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < R; ++j) std::swap(a.at(j, i), a.at(j, k));
    if (with_transforms)
      for (std::size_t j = 0; j < C; ++j) std::swap(v.at(j, i), v.at(j, k));
  };
  auto row_addmul = [&](std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t j = 0; j < C; ++j)
      if (!a.at(src, j).is_zero()) a.at(dst, j) += c * a.at(src, j);
    if (with_transforms)
      for (std::size_t j = 0; j < R; ++j)
        if (!u.at(src, j).is_zero()) u.at(dst, j) += c * u.at(src, j);
  };
  auto col_addmul = [&](std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t j = 0; j < R; ++j)
      if (!a.at(j, src).is_zero()) a.at(j, dst) += c * a.at(j, src);
    if (with_transforms)
      for (std::size_t j = 0; j < C; ++j)
        if (!v.at(j, src).is_zero()) v.at(j, dst) += c * v.at(j, src);
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t j = 0; j < C; ++j) a.at(i, j) = -a.at(i, j);
    if (with_transforms)
      for (std::size_t j = 0; j < R; ++j) u.at(i, j) = -u.at(i, j);
  };

  const std::size_t n = std::min(R, C);
  std::size_t t = 0;
  for (; t < n; ++t) {
    // Pivot: minimal |entry| in the trailing submatrix.
    std::size_t pi = t, pj = t;
    BigInt best = 0;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j) {
        const BigInt& x = a.at(i, j);
        if (x.is_zero()) continue;
        BigInt ax = abs_val(x);
        if (best.is_zero() || ax < best) {
          best = ax;
          pi = i;
          pj = j;
        }
      }
    if (best.is_zero()) break;
    row_swap(t, pi);
    col_swap(t, pj);
    if (a.at(t, t) < 0) row_negate(t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a.at(i, t).is_zero()) continue;
        BigInt q = a.at(i, t) / a.at(t, t);
        if (!q.is_zero()) row_addmul(i, t, -q);
        if (!a.at(i, t).is_zero()) {
          // Remainder became the smaller pivot candidate.
          row_swap(t, i);
          if (a.at(t, t) < 0) row_negate(t);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a.at(t, j).is_zero()) continue;
        BigInt q = a.at(t, j) / a.at(t, t);
        if (!q.is_zero()) col_addmul(j, t, -q);
        if (!a.at(t, j).is_zero()) {
          col_swap(t, j);
          if (a.at(t, t) < 0) row_negate(t);
          clean = false;
        }
      }
      if (clean) {
        // Divisibility sweep: fold in any entry the pivot misses.
        for (std::size_t i = t + 1; i < R && clean; ++i)
          for (std::size_t j = t + 1; j < C && clean; ++j)
            if (!(a.at(i, j) % a.at(t, t)).is_zero()) {
              row_addmul(t, i, 1);
              clean = false;
            }
      }
    }
  }

  SnfResult res;
  for (std::size_t i = 0; i < t; ++i) res.d.push_back(a.at(i, i));
  res.rank = res.d.size();
  if (with_transforms) {
    res.u = std::move(u);
    res.v = std::move(v);
  }
  return res;
}

struct QuotientInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, divisibility chain
};

struct ContainmentError : std::runtime_error {
  ContainmentError(std::size_t row, std::string msg)
      : std::runtime_error(std::move(msg)), row_index(row) {}
  std::size_t row_index;
};

// Structure of big/small. Requires small to be contained in big; the
// violating basis row index is reported otherwise.
inline QuotientInvariants quotient_invariants(const Lattice& small, const Lattice& big) {
  if (small.ambient() != big.ambient())
    throw std::invalid_argument("lattice ambient mismatch");
  const std::size_t rs = small.rank(), rb = big.rank();
  IntMatrix coords(rs, rb);
  detail::HnfBuilder bb = big.builder();
  for (std::size_t i = 0; i < rs; ++i) {
    auto c = bb.coordinates(small.basis().row(i));
    if (!c) throw ContainmentError(i, "quotient_invariants: row " + std::to_string(i) +
                                          " of the sublattice is not contained");
    for (std::size_t j = 0; j < rb; ++j) coords.at(i, j) = std::move((*c)[j]);
  }
  SnfResult s = snf(std::move(coords));
  QuotientInvariants q;
  q.free_rank = rb - s.rank;
  for (const auto& d : s.d)
    if (d != 1) q.torsion.push_back(d);
  return q;
}

// Structure of Z^ambient / small.
inline QuotientInvariants quotient_invariants(const Lattice& small) {
  return quotient_invariants(small, Lattice::full(small.ambient()));
}

}  // namespace lcs
