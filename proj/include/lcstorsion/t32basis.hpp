// The normal-form basis of the quotient by the (3,2) ideal, and the
// graded verifiers built on it.
//
// Each basis element is a nondecreasing monomial prefix times one
// bracket normal form:
//
//   monomial    (empty bracket part)
//   pair        [x_{i1}, x_{i2}]                      i1 < i2
//   triple      [x_{i1}, x_{i2}, x_{i3}]              i1 < i2, i1 <= i3
//   pair_pair   [x_{i1},x_{i2}][x_{i3},x_{i4}]        i1 < i2, i3 < i4,
//                                                     (i1,i2) <= (i3,i4)
//   chain       [x_{i1},x_{i2}]...[x_{i_{2k-1}},x_{i_{2k}}], k >= 3,
//               i1 < i2 < ... < i_{2k}
//
// The bracket part uses every letter not consumed by the prefix; bracket
// parts of degree 1 or of odd degree at least 5 do not occur.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcstorsion/freering.hpp"
#include "lcstorsion/ideals.hpp"
#include "lcstorsion/parallel.hpp"
#include "lcstorsion/zlinalg.hpp"

namespace lcs {

enum class NormalFormClass { monomial, pair, triple, pair_pair, chain };

inline const char* to_string(NormalFormClass c) {
  switch (c) {
    case NormalFormClass::monomial: return "monomial";
    case NormalFormClass::pair: return "pair";
    case NormalFormClass::triple: return "triple";
    case NormalFormClass::pair_pair: return "pair_pair";
    case NormalFormClass::chain: return "chain";
  }
  return "?";
}

struct NormalForm {
  Monomial prefix;
  NormalFormClass cls = NormalFormClass::monomial;
  std::vector<Var> indices;  // bracket entries, concatenated
  Poly value;
};

namespace detail {

inline Poly normal_form_value(const Monomial& prefix, NormalFormClass cls,
                              const std::vector<Var>& idx) {
  Poly p = Poly::monomial(prefix);
  auto bracket = [&](std::size_t from, std::size_t len) {
    std::vector<Poly> args;
    for (std::size_t i = 0; i < len; ++i)
      args.push_back(Poly::variable(idx[from + i]));
    return commutator(args);
  };
  switch (cls) {
    case NormalFormClass::monomial:
      break;
    case NormalFormClass::pair:
      p = p * bracket(0, 2);
      break;
    case NormalFormClass::triple:
      p = p * bracket(0, 3);
      break;
    case NormalFormClass::pair_pair:
      p = p * bracket(0, 2) * bracket(2, 2);
      break;
    case NormalFormClass::chain:
      for (std::size_t at = 0; at < idx.size(); at += 2) p = p * bracket(at, 2);
      break;
  }
  return p;
}

// Bracket normal forms that use exactly the letters in `letters`
// (sorted ascending, possibly with repeats).
inline void bracket_normal_forms(
    const std::vector<Var>& letters,
    std::vector<std::pair<NormalFormClass, std::vector<Var>>>& out) {
  const std::size_t d = letters.size();
  if (d == 0) {
    out.emplace_back(NormalFormClass::monomial, std::vector<Var>{});
    return;
  }
  if (d == 1) return;
  if (d == 2) {
    if (letters[0] < letters[1])
      out.emplace_back(NormalFormClass::pair, letters);
    return;
  }
  if (d == 3) {
    std::vector<Var> w = letters;
    do {
      if (w[0] < w[1] && w[0] <= w[2])
        out.emplace_back(NormalFormClass::triple, w);
    } while (std::next_permutation(w.begin(), w.end()));
    return;
  }
  if (d == 4) {
    std::vector<Var> w = letters;
    do {
      if (w[0] < w[1] && w[2] < w[3] &&
          (w[0] < w[2] || (w[0] == w[2] && w[1] <= w[3])))
        out.emplace_back(NormalFormClass::pair_pair, w);
    } while (std::next_permutation(w.begin(), w.end()));
    return;
  }
  if (d % 2 != 0) return;
  for (std::size_t i = 1; i < d; ++i)
    if (letters[i - 1] >= letters[i]) return;
  out.emplace_back(NormalFormClass::chain, letters);
}

}  // namespace detail

// All normal forms of multidegree mu, in a deterministic order: by
// class, then bracket indices, then prefix.
inline std::vector<NormalForm> enumerate_quotient_basis(const MultiDegree& mu) {
  const auto& entries = mu.entries();
  std::vector<NormalForm> out;

  // Odometer over sub-multisets taken by the bracket part.
  std::vector<std::uint32_t> take(entries.size(), 0);
  for (;;) {
    std::vector<Var> bracket_letters, prefix_letters;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      for (std::uint32_t k = 0; k < take[i]; ++k)
        bracket_letters.push_back(entries[i].first);
      for (std::uint32_t k = take[i]; k < entries[i].second; ++k)
        prefix_letters.push_back(entries[i].first);
    }
    std::vector<std::pair<NormalFormClass, std::vector<Var>>> forms;
    detail::bracket_normal_forms(bracket_letters, forms);
    Monomial prefix(prefix_letters);
    for (auto& [cls, idx] : forms) {
      NormalForm nf;
      nf.prefix = prefix;
      nf.cls = cls;
      nf.indices = idx;
      nf.value = detail::normal_form_value(prefix, cls, idx);
      out.push_back(std::move(nf));
    }

    std::size_t i = 0;
    while (i < take.size() && take[i] == entries[i].second) take[i++] = 0;
    if (i == take.size()) break;
    ++take[i];
  }

  std::sort(out.begin(), out.end(), [](const NormalForm& a, const NormalForm& b) {
    if (a.cls != b.cls) return static_cast<int>(a.cls) < static_cast<int>(b.cls);
    if (a.indices != b.indices) return a.indices < b.indices;
    return a.prefix < b.prefix;
  });
  return out;
}

// All multidegrees on variables {1..max_var} with 1 <= total <= max_degree.
inline std::vector<MultiDegree> all_multidegrees(std::uint32_t max_degree,
                                                 Var max_var) {
  std::vector<MultiDegree> out;
  std::vector<std::uint32_t> counts(max_var, 0);
  for (;;) {
    std::size_t i = 0;
    for (;;) {
      if (i == counts.size()) return out;
      std::uint32_t total = 0, below = 0;
      for (std::uint32_t c : counts) total += c;
      for (std::size_t k = 0; k < i; ++k) below += counts[k];
      if (total - below + 1 <= max_degree) {
        ++counts[i];
        for (std::size_t k = 0; k < i; ++k) counts[k] = 0;
        break;
      }
      ++i;
    }
    std::vector<std::pair<Var, std::uint32_t>> entries;
    for (std::size_t v = 0; v < counts.size(); ++v)
      if (counts[v] > 0) entries.emplace_back(static_cast<Var>(v + 1), counts[v]);
    out.emplace_back(MultiDegree(std::move(entries)));
  }
}

// ---------------------------------------------------------------------------
// Graded verifiers.
// ---------------------------------------------------------------------------

struct GradedComponentRecord {
  MultiDegree mu;
  std::size_t dim = 0;
  std::size_t ideal_rank = 0;
  std::size_t basis_count = 0;
  bool rank_additive = false;   // ideal_rank + basis_count == dim
  bool spans = false;           // ideal rows + normal-form rows span everything
  bool torsion_free = false;    // SNF of the ideal basis rows is all ones
  bool ok() const { return rank_additive && spans && torsion_free; }
};

struct GradedBasisCheck {
  std::vector<GradedComponentRecord> components;
  bool ok() const {
    for (const auto& c : components)
      if (!c.ok()) return false;
    return !components.empty();
  }
};

// In every component: the quotient by the (3,2) ideal is free on the
// classes of the normal forms.  Certified by three facts per component:
// the ideal rows have unimodular SNF (no torsion), ranks are additive,
// and ideal rows plus normal-form rows span the whole component.
inline GradedBasisCheck verify_graded_basis(std::uint32_t max_degree,
                                            Var max_var,
                                            unsigned threads = 0) {
  GradedBasisCheck res;
  auto mus = all_multidegrees(max_degree, max_var);
  res.components.resize(mus.size());
  parallel_for_index(mus.size(), threads, [&](std::size_t i) {
    GradedComponentRecord rec;
    rec.mu = mus[i];
    auto comp = component_lattice(IdealSpec::t32(), mus[i]);
    rec.dim = comp->basis->dim();
    rec.ideal_rank = comp->lattice.rank();

    auto forms = enumerate_quotient_basis(mus[i]);
    rec.basis_count = forms.size();
    rec.rank_additive = (rec.ideal_rank + rec.basis_count == rec.dim);

    detail::HnfBuilder b(rec.dim);
    for (std::size_t r = 0; r < comp->lattice.basis().rows(); ++r)
      b.insert(comp->lattice.basis().row(r));
    for (const auto& nf : forms) b.insert(comp->basis->coordinates(nf.value));
    rec.spans = lattice_equal(Lattice::from_builder(rec.dim, b),
                              Lattice::full(rec.dim));

    auto inv = quotient_invariants(comp->lattice);
    rec.torsion_free = inv.torsion.empty() && inv.free_rank == rec.dim - rec.ideal_rank;
    res.components[i] = std::move(rec);
  });
  return res;
}

struct DecompositionRecord {
  MultiDegree mu;
  std::size_t lhs_rank = 0;
  bool equal = false;
};

struct DecompositionCheck {
  std::vector<DecompositionRecord> components;
  bool ok() const {
    for (const auto& c : components)
      if (!c.equal) return false;
    return !components.empty();
  }
};

// Componentwise, the (3,2) ideal is the sum of the T4 ideal and the
// ordered-product ideal.
inline DecompositionCheck verify_ideal_decomposition(
    const std::vector<MultiDegree>& mus, unsigned threads = 0) {
  DecompositionCheck res;
  res.components.resize(mus.size());
  parallel_for_index(mus.size(), threads, [&](std::size_t i) {
    DecompositionRecord rec;
    rec.mu = mus[i];
    auto t32 = component_lattice(IdealSpec::t32(), mus[i]);
    auto t4 = component_lattice(IdealSpec::tn(4), mus[i]);
    auto i32 = component_lattice(IdealSpec::i32(), mus[i]);
    rec.lhs_rank = t32->lattice.rank();
    rec.equal = lattice_equal(t32->lattice,
                              lattice_sum(t4->lattice, i32->lattice));
    res.components[i] = std::move(rec);
  });
  return res;
}

inline DecompositionCheck verify_ideal_decomposition(std::uint32_t max_degree,
                                                     Var max_var,
                                                     unsigned threads = 0) {
  return verify_ideal_decomposition(all_multidegrees(max_degree, max_var),
                                    threads);
}

struct CollapseRecord {
  MultiDegree mu;
  bool equal = false;
  bool torsion_free = false;  // quotient by the T4 component has no torsion
};

struct SmallSupportCheck {
  std::vector<CollapseRecord> components;       // all over {1..4}
  bool contrast_differs = false;                // multilinear deg 5 differs
  std::size_t contrast_free_rank = 0;           // expected 0
  std::vector<BigInt> contrast_torsion;         // expected {3}
  bool ok() const {
    for (const auto& c : components)
      if (!c.equal || !c.torsion_free) return false;
    return !components.empty() && contrast_differs && contrast_free_rank == 0 &&
           contrast_torsion.size() == 1 && contrast_torsion[0] == 3;
  }
};

// On four or fewer variables the two ideals agree componentwise; the
// first divergence is the multilinear degree-5 component, where the
// quotient of one by the other is a single Z/3.
inline SmallSupportCheck verify_small_support_collapse(std::uint32_t max_degree,
                                                       Var max_var = 4,
                                                       unsigned threads = 0) {
  SmallSupportCheck res;
  auto mus = all_multidegrees(max_degree, max_var);
  res.components.resize(mus.size());
  parallel_for_index(mus.size(), threads, [&](std::size_t i) {
    CollapseRecord rec;
    rec.mu = mus[i];
    auto t32 = component_lattice(IdealSpec::t32(), mus[i]);
    auto t4 = component_lattice(IdealSpec::tn(4), mus[i]);
    rec.equal = lattice_equal(t32->lattice, t4->lattice);
    rec.torsion_free = quotient_invariants(t4->lattice).torsion.empty();
    res.components[i] = std::move(rec);
  });

  std::vector<std::pair<Var, std::uint32_t>> entries;
  for (Var v = 1; v <= 5; ++v) entries.emplace_back(v, 1);
  MultiDegree mu5(std::move(entries));
  auto t32 = component_lattice(IdealSpec::t32(), mu5);
  auto t4 = component_lattice(IdealSpec::tn(4), mu5);
  res.contrast_differs = !lattice_equal(t32->lattice, t4->lattice);
  auto inv = quotient_invariants(t4->lattice, t32->lattice);
  res.contrast_free_rank = inv.free_rank;
  res.contrast_torsion = inv.torsion;
  return res;
}

struct NonMembershipCheck {
  std::vector<std::string> elements;
  std::vector<bool> infinite_order;
  bool ok() const {
    for (bool b : infinite_order)
      if (!b) return false;
    return !infinite_order.empty();
  }
};

// Elements whose classes generate free summands of the quotient: no
// nonzero multiple lands in the (3,2) ideal.
inline NonMembershipCheck verify_nonmembership() {
  NonMembershipCheck res;
  auto x = [](Var i) { return Poly::variable(i); };
  std::vector<Poly> probes = {
      commutator({x(1), x(3)}) * commutator({x(2), x(3)}),
      commutator({x(1), x(2)}) * commutator({x(1), x(2)}),
      commutator({x(1), x(3)}) * commutator({x(2), x(4)}) +
          commutator({x(1), x(4)}) * commutator({x(2), x(3)}),
  };
  for (const auto& p : probes) {
    res.elements.push_back(to_string(p));
    res.infinite_order.push_back(!order_mod_ideal(p, IdealSpec::t32()).has_value());
  }
  return res;
}

}  // namespace lcs
