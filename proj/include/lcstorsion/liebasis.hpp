// Multilinear Lie elements and the degree-5 product presentation.
//
// Two clusters of machinery live here.
//
// 1. multilinear_lie_basis(n): the (n-1)! left-normed commutators
//    [x_n, x_{i1}, ..., x_{i_{n-1}}] over permutations (i1..i_{n-1}) of
//    {1..n-1}.  Their coordinate rows in the multilinear component are
//    unimodular (SNF all ones), so they form a basis of the span of all
//    n-fold multilinear commutators.
//
// 2. The degree-5 analysis.  Inside the multilinear component on
//    {x1..x5} (dimension 120) we build:
//      - var_times_comm: the span of the 120 products x_j * [4-fold
//        commutator on the remaining variables], split into five parts;
//      - pure_brackets: the span of all 5-fold commutators together
//        with all [triple][pair] products;
//      - explicit bracket bases for those spans;
//    plus a formal presentation of the module generated by the 120
//    products [x_{t1},x_{t2},x_{t3}][x_{t4},x_{t5}] over 5-tuples t of
//    distinct variables, with relation rows coming from antisymmetry of
//    each bracket and the Jacobi identity on the triple.  The torsion
//    of that presentation (a single Z/3) maps onto the torsion of the
//    120-dimensional component modulo the T4 ideal; the verifiers below
//    check each link of that chain with exact lattice arithmetic.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcstorsion/freering.hpp"
#include "lcstorsion/ideals.hpp"
#include "lcstorsion/zlinalg.hpp"

namespace lcs {

inline std::vector<std::vector<Var>> permutations_of(Var n) {
  std::vector<Var> seed(n);
  std::iota(seed.begin(), seed.end(), Var{1});
  std::vector<std::vector<Var>> out;
  do {
    out.push_back(seed);
  } while (std::next_permutation(seed.begin(), seed.end()));
  return out;
}

inline MultiDegree multilinear_degree(Var n) {
  std::vector<std::pair<Var, std::uint32_t>> entries;
  for (Var v = 1; v <= n; ++v) entries.emplace_back(v, 1);
  return MultiDegree(std::move(entries));
}

struct LieBasisElement {
  std::vector<Var> tail;  // the permutation (i1..i_{n-1})
  Poly value;             // [x_n, x_{i1}, ..., x_{i_{n-1}}]
};

// The (n-1)! left-normed commutators [x_n, x_{i1}, ..., x_{i_{n-1}}],
// tails in lexicographic order.  n = 1 gives the single element x_1.
inline std::vector<LieBasisElement> multilinear_lie_basis(Var n) {
  if (n == 0) throw std::invalid_argument("variable count must be positive");
  std::vector<LieBasisElement> out;
  if (n == 1) {
    out.push_back({{}, Poly::variable(1)});
    return out;
  }
  for (auto& tail : permutations_of(n - 1)) {
    std::vector<Poly> args;
    args.reserve(n);
    args.push_back(Poly::variable(n));
    for (Var v : tail) args.push_back(Poly::variable(v));
    out.push_back({tail, commutator(args)});
  }
  return out;
}

struct LieBasisCheck {
  Var n = 0;
  std::size_t count = 0;
  bool count_ok = false;
  bool leading_ok = false;     // lex-leading monomial of each element is
                               // x_n x_{i1} ... x_{i_{n-1}}, all distinct
  bool unimodular_ok = false;  // SNF of the coordinate matrix is all ones
  bool ok() const { return count_ok && leading_ok && unimodular_ok; }
};

inline LieBasisCheck verify_multilinear_lie_basis(Var n) {
  LieBasisCheck res;
  res.n = n;
  auto elems = multilinear_lie_basis(n);
  res.count = elems.size();
  std::size_t expect = 1;
  for (Var k = 2; k < n; ++k) expect *= k;
  res.count_ok = (res.count == expect);

  ComponentBasis basis(multilinear_degree(n));
  std::vector<Row> rows;
  rows.reserve(elems.size());
  std::set<Monomial> leading;
  res.leading_ok = true;
  for (auto& e : elems) {
    rows.push_back(basis.coordinates(e.value));
    Monomial lead = e.value.leading_monomial_lex();
    std::vector<Var> want;
    want.push_back(n);
    for (Var v : e.tail) want.push_back(v);
    if (n > 1 && lead.word() != want) res.leading_ok = false;
    if (!leading.insert(lead).second) res.leading_ok = false;
  }
  auto d = snf(IntMatrix::from_rows(basis.dim(), rows));
  res.unimodular_ok = (d.rank == res.count);
  for (const auto& f : d.d)
    if (abs_val(f) != 1) res.unimodular_ok = false;
  return res;
}

// ---------------------------------------------------------------------------
// Degree-5 multilinear spans.
// ---------------------------------------------------------------------------

struct DegreeFiveSpans {
  std::shared_ptr<const ComponentBasis> basis;  // dimension 120

  Lattice var_times_comm;           // span of x_j * [x_{i1},...,x_{i4}]
  std::array<Lattice, 5> var_part;  // the five j-indexed sub-spans
  Lattice pure_brackets;            // span of 5-folds and [3][2] products
  Lattice five_fold;                // span of the 5-fold commutators only

  // Bracket bases: 24 + 8 + 12 elements whose rows are a basis of
  // pure_brackets, and the first block alone is a basis of five_fold.
  std::vector<Poly> basis_five_fold;
  std::vector<Poly> basis_triple_pair;
  std::vector<Poly> basis_pair_triple;
};

inline DegreeFiveSpans build_degree5_spans() {
  DegreeFiveSpans s;
  s.basis = std::make_shared<ComponentBasis>(multilinear_degree(5));
  const std::size_t dim = s.basis->dim();

  auto perms4 = permutations_of(4);

  // x_j times the 4-fold commutators on the other four variables.
  {
    detail::HnfBuilder whole(dim);
    for (Var j = 1; j <= 5; ++j) {
      detail::HnfBuilder part(dim);
      std::vector<Var> others;
      for (Var v = 1; v <= 5; ++v)
        if (v != j) others.push_back(v);
      for (auto& p : perms4) {
        std::vector<Poly> args;
        for (Var k : p) args.push_back(Poly::variable(others[k - 1]));
        Poly g = Poly::variable(j) * commutator(args);
        Row r = s.basis->coordinates(g);
        part.insert(Row(r));
        whole.insert(std::move(r));
      }
      s.var_part[j - 1] = Lattice::from_builder(dim, part);
    }
    s.var_times_comm = Lattice::from_builder(dim, whole);
  }

  auto perms5 = permutations_of(5);

  // Pure bracket products: all 5-fold commutators, then all [3][2]s.
  {
    detail::HnfBuilder fives(dim);
    detail::HnfBuilder all(dim);
    for (auto& p : perms5) {
      std::vector<Poly> args;
      for (Var v : p) args.push_back(Poly::variable(v));
      Row r = s.basis->coordinates(commutator(args));
      fives.insert(Row(r));
      all.insert(std::move(r));
    }
    for (auto& p : perms5) {
      Poly g = commutator({Poly::variable(p[0]), Poly::variable(p[1]),
                           Poly::variable(p[2])}) *
               commutator({Poly::variable(p[3]), Poly::variable(p[4])});
      all.insert(s.basis->coordinates(g));
    }
    s.five_fold = Lattice::from_builder(dim, fives);
    s.pure_brackets = Lattice::from_builder(dim, all);
  }

  // Bracket bases.
  for (auto& p : perms4) {
    std::vector<Poly> args{Poly::variable(5)};
    for (Var v : p) args.push_back(Poly::variable(v));
    s.basis_five_fold.push_back(commutator(args));
  }
  // [x_{i1},x_{i2},x_{i3}][x_5,x_{i4}] with i1 the largest of the triple.
  for (auto& p : perms4) {
    Var i1 = p[0], i2 = p[1], i3 = p[2], i4 = p[3];
    if (i1 < i2 || i1 < i3) continue;
    s.basis_triple_pair.push_back(
        commutator({Poly::variable(i1), Poly::variable(i2),
                    Poly::variable(i3)}) *
        commutator({Poly::variable(5), Poly::variable(i4)}));
  }
  // [x_{i1},x_{i2}][x_5,x_{i3},x_{i4}] with i1 > i2.
  for (auto& p : perms4) {
    Var i1 = p[0], i2 = p[1], i3 = p[2], i4 = p[3];
    if (i1 < i2) continue;
    s.basis_pair_triple.push_back(
        commutator({Poly::variable(i1), Poly::variable(i2)}) *
        commutator({Poly::variable(5), Poly::variable(i3),
                    Poly::variable(i4)}));
  }
  return s;
}

struct SpanDisjointnessCheck {
  std::size_t w1_rank = 0;            // expected 30
  std::size_t w2_rank = 0;            // expected 44
  std::size_t intersection_rank = 0;  // expected 0
  std::array<std::size_t, 5> part_ranks{};  // expected all 6
  bool parts_independent = false;     // part ranks sum to w1_rank
  bool unit_substitution_kills_w2 = false;
  bool unit_substitution_detects_part = false;
  bool ok() const {
    return intersection_rank == 0 && parts_independent &&
           unit_substitution_kills_w2 && unit_substitution_detects_part;
  }
};

// The two spans meet trivially, and the five parts of var_times_comm are
// independent.  The separating tool is the substitution x_i -> 1: it
// kills every generator of pure_brackets and every part except the one
// whose spare variable is x_i.
inline SpanDisjointnessCheck verify_span_disjointness(
    const DegreeFiveSpans& s) {
  SpanDisjointnessCheck res;
  res.w1_rank = s.var_times_comm.rank();
  res.w2_rank = s.pure_brackets.rank();
  res.intersection_rank =
      lattice_intersect(s.var_times_comm, s.pure_brackets).rank();

  std::size_t total = 0;
  for (std::size_t j = 0; j < 5; ++j) {
    res.part_ranks[j] = s.var_part[j].rank();
    total += res.part_ranks[j];
  }
  res.parts_independent = (total == res.w1_rank);

  auto perms5 = permutations_of(5);
  res.unit_substitution_kills_w2 = true;
  for (auto& p : perms5) {
    std::vector<Poly> args;
    for (Var v : p) args.push_back(Poly::variable(v));
    Poly five = commutator(args);
    Poly prod = commutator({Poly::variable(p[0]), Poly::variable(p[1]),
                            Poly::variable(p[2])}) *
                commutator({Poly::variable(p[3]), Poly::variable(p[4])});
    for (Var i = 1; i <= 5; ++i) {
      if (!substitute_unit(five, i).is_zero())
        res.unit_substitution_kills_w2 = false;
      if (!substitute_unit(prod, i).is_zero())
        res.unit_substitution_kills_w2 = false;
    }
  }

  auto perms4 = permutations_of(4);
  res.unit_substitution_detects_part = true;
  for (Var j = 1; j <= 5; ++j) {
    std::vector<Var> others;
    for (Var v = 1; v <= 5; ++v)
      if (v != j) others.push_back(v);
    for (auto& p : perms4) {
      std::vector<Poly> args;
      for (Var k : p) args.push_back(Poly::variable(others[k - 1]));
      Poly g = Poly::variable(j) * commutator(args);
      for (Var i = 1; i <= 5; ++i) {
        bool killed = substitute_unit(g, i).is_zero();
        if ((i != j) != killed) res.unit_substitution_detects_part = false;
      }
    }
  }
  return res;
}

struct BracketBasisCheck {
  std::size_t count_five_fold = 0;    // expected 24
  std::size_t count_triple_pair = 0;  // expected 8
  std::size_t count_pair_triple = 0;  // expected 12
  bool unimodular = false;  // SNF of the 44 coordinate rows is all ones
  bool spans_pure_brackets = false;
  bool five_fold_block_spans = false;  // first block alone spans five_fold
  bool pair_triple_inside = false;     // every [2][3] product lies in the span
  bool ok() const {
    return unimodular && spans_pure_brackets && five_fold_block_spans &&
           pair_triple_inside;
  }
};

inline BracketBasisCheck verify_bracket_basis(const DegreeFiveSpans& s) {
  BracketBasisCheck res;
  res.count_five_fold = s.basis_five_fold.size();
  res.count_triple_pair = s.basis_triple_pair.size();
  res.count_pair_triple = s.basis_pair_triple.size();

  // [x_{i1},x_{i2}][x_{i3},x_{i4},x_{i5}] commutes with its partner up to
  // a 5-fold commutator, hence lands in the same span.
  res.pair_triple_inside = true;
  for (auto& p : permutations_of(5)) {
    Poly g = commutator({Poly::variable(p[0]), Poly::variable(p[1])}) *
             commutator({Poly::variable(p[2]), Poly::variable(p[3]),
                         Poly::variable(p[4])});
    if (!s.pure_brackets.contains(s.basis->coordinates(g)))
      res.pair_triple_inside = false;
  }

  std::vector<Row> rows;
  for (auto& g : s.basis_five_fold) rows.push_back(s.basis->coordinates(g));
  res.five_fold_block_spans =
      lattice_equal(Lattice::from_rows(s.basis->dim(), rows), s.five_fold);
  for (auto& g : s.basis_triple_pair) rows.push_back(s.basis->coordinates(g));
  for (auto& g : s.basis_pair_triple) rows.push_back(s.basis->coordinates(g));

  const std::size_t n = rows.size();
  auto d = snf(IntMatrix::from_rows(s.basis->dim(), rows));
  res.unimodular = (d.rank == n);
  for (const auto& f : d.d)
    if (abs_val(f) != 1) res.unimodular = false;
  res.spans_pure_brackets =
      lattice_equal(Lattice::from_rows(s.basis->dim(), rows), s.pure_brackets);
  return res;
}

// ---------------------------------------------------------------------------
// The formal presentation by 120 product symbols.
// ---------------------------------------------------------------------------

// One abstract symbol h_t per 5-tuple t of distinct variables, standing
// for the product [x_{t1},x_{t2},x_{t3}][x_{t4},x_{t5}].  Relation rows:
//
//   base (antisymmetry and Jacobi, satisfied by the products themselves):
//     h_{t} + h_{t with t1,t2 swapped}
//     h_{t} + h_{t with t4,t5 swapped}
//     h_{t1 t2 t3 ..} + h_{t2 t3 t1 ..} + h_{t3 t1 t2 ..}
//
//   extra (satisfied only modulo the ideal):
//     h_{t} + h_{t with t3,t4 swapped}
//     h_{t} + h_{t with t2,t4 swapped}
struct ProductPresentation {
  std::vector<std::array<Var, 5>> tuples;  // lex order, size 120
  std::shared_ptr<const ComponentBasis> basis;
  IntMatrix product_map;  // 120 x 120, row t = coordinates of the product

  std::vector<Row> base_relation_rows;   // deduplicated
  std::vector<Row> extra_relation_rows;  // deduplicated, the swap families
  Lattice base_relations;                // span of base rows
  Lattice full_relations;                // span of base and extra rows

  std::size_t index_of(const std::array<Var, 5>& t) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    if (it == tuples.end() || *it != t)
      throw std::invalid_argument("tuple is not a permutation of 1..5");
    return static_cast<std::size_t>(it - tuples.begin());
  }
};

inline int tuple_sign(const std::array<Var, 5>& t) {
  int inv = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (t[i] > t[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

inline ProductPresentation build_product_presentation() {
  ProductPresentation pres;
  pres.basis = std::make_shared<ComponentBasis>(multilinear_degree(5));
  for (auto& p : permutations_of(5))
    pres.tuples.push_back({p[0], p[1], p[2], p[3], p[4]});
  std::sort(pres.tuples.begin(), pres.tuples.end());

  const std::size_t n = pres.tuples.size();
  pres.product_map = IntMatrix(n, pres.basis->dim());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = pres.tuples[i];
    Poly g = commutator({Poly::variable(t[0]), Poly::variable(t[1]),
                         Poly::variable(t[2])}) *
             commutator({Poly::variable(t[3]), Poly::variable(t[4])});
    Row r = pres.basis->coordinates(g);
    for (std::size_t j = 0; j < r.size(); ++j)
      pres.product_map.at(i, j) = std::move(r[j]);
  }

  auto unit_row = [&](std::size_t i) {
    Row r(n);
    r[i] = 1;
    return r;
  };
  auto swapped = [](const std::array<Var, 5>& t, int a, int b) {
    auto u = t;
    std::swap(u[a], u[b]);
    return u;
  };

  std::set<Row> base, extra;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = pres.tuples[i];
    auto pair_row = [&](std::set<Row>& dst, const std::array<Var, 5>& u) {
      Row r = unit_row(i);
      r[pres.index_of(u)] += 1;
      dst.insert(std::move(r));
    };
    pair_row(base, swapped(t, 0, 1));
    pair_row(base, swapped(t, 3, 4));
    {
      Row r = unit_row(i);
      r[pres.index_of({t[1], t[2], t[0], t[3], t[4]})] += 1;
      r[pres.index_of({t[2], t[0], t[1], t[3], t[4]})] += 1;
      base.insert(std::move(r));
    }
    pair_row(extra, swapped(t, 2, 3));
    pair_row(extra, swapped(t, 1, 3));
  }
  pres.base_relation_rows.assign(base.begin(), base.end());
  pres.extra_relation_rows.assign(extra.begin(), extra.end());

  detail::HnfBuilder b(n);
  for (const auto& r : pres.base_relation_rows) b.insert(Row(r));
  {
    detail::HnfBuilder copy(b);
    pres.base_relations = Lattice::from_builder(n, copy);
  }
  for (const auto& r : pres.extra_relation_rows) b.insert(Row(r));
  pres.full_relations = Lattice::from_builder(n, b);
  return pres;
}

struct ProductTorsionCheck {
  std::size_t base_row_count = 0;   // expected 160
  std::size_t extra_row_count = 0;  // expected 120
  std::size_t base_rank = 0;        // expected 100
  std::size_t full_rank = 0;        // expected 120: three times any symbol
                                    // is a relation, so the index is finite
  bool identity_not_in_relations = false;
  std::optional<BigInt> identity_order;  // expected 3
  bool sign_functional_ok = false;  // sum_t r_t sign(t) in 3Z for all rows
  bool ok() const {
    return identity_not_in_relations && identity_order &&
           *identity_order == 3 && sign_functional_ok;
  }
};

// The quotient by the full relation lattice contains the class of h_id
// with order exactly 3.  The certifying functional sends h_t to sign(t);
// every relation row lands in 3Z while h_id itself maps to 1.
inline ProductTorsionCheck verify_product_torsion(
    const ProductPresentation& pres) {
  ProductTorsionCheck res;
  res.base_row_count = pres.base_relation_rows.size();
  res.extra_row_count = pres.extra_relation_rows.size();
  res.base_rank = pres.base_relations.rank();
  res.full_rank = pres.full_relations.rank();

  const std::size_t n = pres.tuples.size();
  Row e(n);
  e[pres.index_of({1, 2, 3, 4, 5})] = 1;
  res.identity_not_in_relations = !pres.full_relations.contains(e);
  res.identity_order = pres.full_relations.order_in_quotient(e);

  res.sign_functional_ok = true;
  auto check_rows = [&](const std::vector<Row>& rows) {
    for (const auto& r : rows) {
      BigInt acc = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (!r[i].is_zero()) acc += r[i] * tuple_sign(pres.tuples[i]);
      if (!(acc % 3).is_zero()) res.sign_functional_ok = false;
    }
  };
  check_rows(pres.base_relation_rows);
  check_rows(pres.extra_relation_rows);
  return res;
}

struct ProductKernelCheck {
  bool base_rows_map_into_carrier = false;
  bool preimage_is_base_relations = false;
  std::size_t quotient_free_rank = 0;  // expected 20
  bool quotient_torsion_free = false;
  bool class_tuples_span = false;
  std::size_t class_count = 0;  // expected 20
  bool ok() const {
    return base_rows_map_into_carrier && preimage_is_base_relations &&
           quotient_free_rank == class_count && quotient_torsion_free &&
           class_tuples_span;
  }
};

// The evaluation map sends each symbol h_t to the coordinates of its
// product.  Modulo the carrier M = var_times_comm + five_fold, its
// kernel is exactly the base relation lattice, so the symbols modulo
// base relations present the image faithfully: a free module of rank
// 20 spanned by the classes of the tuples
//   (i1,i2,i3, 5,i4) with i1 > i2, i1 > i3        (8 tuples)
//   (5,i3,i4, i1,i2) with i1 > i2                 (12 tuples)
inline ProductKernelCheck verify_product_kernel(
    const ProductPresentation& pres, const DegreeFiveSpans& s) {
  ProductKernelCheck res;
  const std::size_t dim = pres.basis->dim();
  Lattice carrier = lattice_sum(s.var_times_comm, s.five_fold);

  res.base_rows_map_into_carrier = true;
  for (const auto& r : pres.base_relation_rows) {
    Row img = row_times_matrix(r, pres.product_map);
    if (!carrier.contains(img)) res.base_rows_map_into_carrier = false;
  }

  Lattice pre = lattice_preimage(pres.product_map, carrier);
  res.preimage_is_base_relations = lattice_equal(pre, pres.base_relations);

  Lattice everything = Lattice::zero(dim);
  {
    detail::HnfBuilder b(dim);
    for (const auto& r : carrier.basis().row_list()) b.insert(Row(r));
    for (std::size_t i = 0; i < pres.product_map.rows(); ++i)
      b.insert(pres.product_map.row(i));
    everything = Lattice::from_builder(dim, b);
  }
  auto inv = quotient_invariants(carrier, everything);
  res.quotient_free_rank = inv.free_rank;
  res.quotient_torsion_free = inv.torsion.empty();

  std::vector<std::array<Var, 5>> classes;
  for (auto& p : permutations_of(4)) {
    Var i1 = p[0], i2 = p[1], i3 = p[2], i4 = p[3];
    if (i1 > i2 && i1 > i3) classes.push_back({i1, i2, i3, 5, i4});
  }
  for (auto& p : permutations_of(4)) {
    Var i3 = p[0], i4 = p[1], i1 = p[2], i2 = p[3];
    if (i1 > i2) classes.push_back({5, i3, i4, i1, i2});
  }
  res.class_count = classes.size();

  detail::HnfBuilder b(dim);
  for (const auto& r : carrier.basis().row_list()) b.insert(Row(r));
  for (const auto& t : classes)
    b.insert(pres.product_map.row(pres.index_of(t)));
  res.class_tuples_span =
      lattice_equal(Lattice::from_builder(dim, b), everything);
  return res;
}

struct QuotientPipelineCheck {
  bool ideal_component_matches = false;  // T4 component = carrier + extra images
  bool relations_are_preimage = false;   // full relations = preimage of T4 component
  std::optional<BigInt> symbol_order;    // order of h_id mod full relations
  std::optional<BigInt> product_order;   // order of the product mod T4 component
  bool ok() const {
    return ideal_component_matches && relations_are_preimage && symbol_order &&
           product_order && *symbol_order == *product_order &&
           *product_order == 3;
  }
};

// Ties the formal presentation to the ideal: inside the 120-dimensional
// component, the T4 lattice is the carrier plus the images of the extra
// relation rows, and pulling the T4 lattice back through the evaluation
// map gives exactly the full relation lattice.  Consequently the class
// of h_id and the class of [x1,x2,x3][x4,x5] have the same order.
inline QuotientPipelineCheck verify_quotient_pipeline(
    const ProductPresentation& pres, const DegreeFiveSpans& s) {
  QuotientPipelineCheck res;
  const std::size_t dim = pres.basis->dim();
  auto comp = component_lattice(IdealSpec::tn(4), multilinear_degree(5));

  Lattice carrier = lattice_sum(s.var_times_comm, s.five_fold);
  {
    detail::HnfBuilder b(dim);
    for (const auto& r : carrier.basis().row_list()) b.insert(Row(r));
    for (const auto& r : pres.extra_relation_rows)
      b.insert(row_times_matrix(r, pres.product_map));
    res.ideal_component_matches =
        lattice_equal(Lattice::from_builder(dim, b), comp->lattice);
  }

  Lattice pre = lattice_preimage(pres.product_map, comp->lattice);
  res.relations_are_preimage = lattice_equal(pre, pres.full_relations);

  Row e(pres.tuples.size());
  e[pres.index_of({1, 2, 3, 4, 5})] = 1;
  res.symbol_order = pres.full_relations.order_in_quotient(e);
  res.product_order = comp->lattice.order_in_quotient(
      pres.product_map.row(pres.index_of({1, 2, 3, 4, 5})));
  return res;
}

}  // namespace lcs
