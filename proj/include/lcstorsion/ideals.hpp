#pragma once

#include <algorithm>
#include <array>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcstorsion/freering.hpp"
#include "lcstorsion/zlinalg.hpp"

namespace lcs {

// Symbolic descriptor of a multigraded subgroup family of the free ring:
//   tn(n)   : two-sided ideal generated by n-fold commutators
//   t32     : tn(4) plus all products [a1,a2,a3][a4,a5]
//   i32     : two-sided ideal generated by [xj1,xj2,xj3][xj4,xj5], j1<...<j5
//   gamma(n): n-th lower central series subgroup (not an ideal)
//   custom  : two-sided ideal generated by given multihomogeneous elements
class IdealSpec {
 public:
  enum class Kind { tn, t32, i32, gamma, custom };

  static IdealSpec tn(unsigned n) {
    if (n < 2) throw std::invalid_argument("tn requires n >= 2");
    return IdealSpec(Kind::tn, n, {});
  }
  static IdealSpec t32() { return IdealSpec(Kind::t32, 0, {}); }
  static IdealSpec i32() { return IdealSpec(Kind::i32, 0, {}); }
  static IdealSpec gamma(unsigned n) {
    if (n < 1) throw std::invalid_argument("gamma requires n >= 1");
    return IdealSpec(Kind::gamma, n, {});
  }
  static IdealSpec custom(std::vector<Poly> generators) {
    for (const auto& g : generators) {
      if (g.is_zero()) throw std::invalid_argument("custom generator is zero");
      if (!is_multihomogeneous(g))
        throw std::invalid_argument("custom generator is not multihomogeneous");
    }
    return IdealSpec(Kind::custom, 0, std::move(generators));
  }

  Kind kind() const { return kind_; }
  unsigned n() const { return n_; }
  const std::vector<Poly>& generators() const { return gens_; }

  // Stable identity used for caching and display.
  std::string key() const {
    switch (kind_) {
      case Kind::tn:
        return "T" + std::to_string(n_);
      case Kind::t32:
        return "T32";
      case Kind::i32:
        return "I32";
      case Kind::gamma:
        return "gamma" + std::to_string(n_);
      case Kind::custom: {
        std::ostringstream os;
        os << "custom{";
        for (const auto& g : gens_) os << to_string(g) << ';';
        os << '}';
        return os.str();
      }
    }
    return "?";
  }

  bool operator==(const IdealSpec& o) const { return key() == o.key(); }

 private:
  IdealSpec(Kind k, unsigned n, std::vector<Poly> gens)
      : kind_(k), n_(n), gens_(std::move(gens)) {}
  Kind kind_;
  unsigned n_;
  std::vector<Poly> gens_;
};

// All monomials of a multidegree in canonical order, with index lookup.
class ComponentBasis {
 public:
  explicit ComponentBasis(MultiDegree mu) : mu_(std::move(mu)) {
    std::vector<Var> letters = mu_.letters();
    do {
      monomials_.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  const MultiDegree& mu() const { return mu_; }
  std::size_t dim() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  std::optional<std::size_t> index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Coordinate row of a polynomial lying inside this component.
  Row coordinates(const Poly& p) const {
    Row v(dim());
    for (const auto& [m, c] : p.terms()) {
      auto idx = index_of(m);
      if (!idx)
        throw std::invalid_argument("polynomial has a term outside component " +
                                    mu_.to_string());
      v[*idx] = c;
    }
    return v;
  }

 private:
  MultiDegree mu_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

inline std::shared_ptr<const ComponentBasis> component_basis(const MultiDegree& mu) {
  return std::make_shared<ComponentBasis>(mu);
}

namespace detail {

// Compositions of `total` into slot sizes: `frame` middle slots of size >= 1,
// plus a possibly-empty prefix and suffix slot. Calls fn(sizes) for each, where
// sizes has frame+2 entries (prefix, middles..., suffix), in lexicographic order.
template <typename Fn>
void for_each_slotting(std::size_t total, std::size_t frame, Fn&& fn) {
  if (total < frame) return;
  std::vector<std::size_t> sizes(frame + 2, 0);
  for (std::size_t i = 1; i <= frame; ++i) sizes[i] = 1;
  std::size_t spare = total - frame;  // distributed freely over all slots
  std::vector<std::size_t> extra(frame + 2, 0);
  // Odometer over nonnegative extras summing to spare.
  for (;;) {
    std::size_t used = 0;
    for (std::size_t i = 0; i + 1 < extra.size(); ++i) used += extra[i];
    extra.back() = spare - used;
    std::vector<std::size_t> cur(frame + 2);
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = sizes[i] + extra[i];
    fn(cur);
    // Advance: find the rightmost position (excluding the dependent last slot)
    // that can still take one more.
    std::size_t i = extra.size() - 1;
    for (;;) {
      if (i == 0) return;
      --i;
      std::size_t before = 0;
      for (std::size_t k = 0; k < i; ++k) before += extra[k];
      if (before + extra[i] + 1 <= spare) {
        ++extra[i];
        for (std::size_t k = i + 1; k + 1 < extra.size(); ++k) extra[k] = 0;
        break;
      }
      extra[i] = 0;
    }
  }
}

inline Monomial segment(const std::vector<Var>& word, std::size_t from, std::size_t len) {
  return Monomial(std::vector<Var>(word.begin() + static_cast<std::ptrdiff_t>(from),
                                   word.begin() + static_cast<std::ptrdiff_t>(from + len)));
}

// m0 * [w1, ..., wk] * m1 for the slot sizes applied to `word`.
inline Poly frame_value(const std::vector<Var>& word, const std::vector<std::size_t>& sizes) {
  std::size_t at = sizes[0];
  std::vector<Poly> mids;
  mids.reserve(sizes.size() - 2);
  for (std::size_t i = 1; i + 1 < sizes.size(); ++i) {
    mids.push_back(Poly::monomial(segment(word, at, sizes[i])));
    at += sizes[i];
  }
  Poly core = commutator(mids);
  if (sizes[0] > 0) core = Poly::monomial(segment(word, 0, sizes[0])) * core;
  if (sizes.back() > 0) core = core * Poly::monomial(segment(word, at, sizes.back()));
  return core;
}

// m0 * [w1,w2,w3] * [w4,w5] * m1 for the slot sizes applied to `word`.
inline Poly product_frame_value(const std::vector<Var>& word,
                                const std::vector<std::size_t>& sizes) {
  std::size_t at = sizes[0];
  std::vector<Poly> args;
  args.reserve(5);
  for (std::size_t i = 1; i <= 5; ++i) {
    args.push_back(Poly::monomial(segment(word, at, sizes[i])));
    at += sizes[i];
  }
  Poly p = commutator({args[0], args[1], args[2]}) * commutator({args[3], args[4]});
  if (sizes[0] > 0) p = Poly::monomial(segment(word, 0, sizes[0])) * p;
  if (sizes.back() > 0) p = p * Poly::monomial(segment(word, at, sizes.back()));
  return p;
}

template <typename Fn>
void for_each_word(const MultiDegree& mu, Fn&& fn) {
  std::vector<Var> w = mu.letters();
  do {
    fn(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

// The frames T32 adds on top of the T4 frames.
template <typename Emit>
void emit_t32_products(const MultiDegree& mu, Emit&& emit) {
  const std::size_t total = mu.total();
  for_each_word(mu, [&](const std::vector<Var>& w) {
    for_each_slotting(total, 5, [&](const std::vector<std::size_t>& sizes) {
      emit(product_frame_value(w, sizes));
    });
  });
}

}  // namespace detail

// Spanning set of the component of `spec` in multidegree mu: distinct nonzero
// frame instantiations, in a deterministic enumeration order.
inline std::vector<Poly> enumerate_generators(const IdealSpec& spec, const MultiDegree& mu) {
  std::vector<Poly> out;
  std::set<Poly> seen;
  auto emit = [&](Poly p) {
    if (p.is_zero()) return;
    if (seen.insert(p).second) out.push_back(std::move(p));
  };

  const std::size_t total = mu.total();

  switch (spec.kind()) {
    case IdealSpec::Kind::tn: {
      const std::size_t n = spec.n();
      detail::for_each_word(mu, [&](const std::vector<Var>& w) {
        detail::for_each_slotting(total, n, [&](const std::vector<std::size_t>& sizes) {
          emit(detail::frame_value(w, sizes));
        });
      });
      break;
    }
    case IdealSpec::Kind::t32: {
      detail::for_each_word(mu, [&](const std::vector<Var>& w) {
        detail::for_each_slotting(total, 4, [&](const std::vector<std::size_t>& sizes) {
          emit(detail::frame_value(w, sizes));
        });
      });
      detail::emit_t32_products(mu, emit);
      break;
    }
    case IdealSpec::Kind::i32: {
      // m0 * [xj1,xj2,xj3][xj4,xj5] * m1 over strictly increasing j1..j5 drawn
      // from the support, remaining letters split across m0, m1.
      std::vector<Var> support;
      for (const auto& [v, k] : mu.entries()) support.push_back(v);
      if (support.size() < 5) break;
      std::vector<std::size_t> pick(5);
      // Iterate 5-subsets of the support in lexicographic order.
      for (std::size_t a = 0; a < support.size(); ++a)
        for (std::size_t b = a + 1; b < support.size(); ++b)
          for (std::size_t c = b + 1; c < support.size(); ++c)
            for (std::size_t d = c + 1; d < support.size(); ++d)
              for (std::size_t e = d + 1; e < support.size(); ++e) {
                Var j1 = support[a], j2 = support[b], j3 = support[c], j4 = support[d],
                    j5 = support[e];
                Poly s = commutator({Poly::variable(j1), Poly::variable(j2),
                                     Poly::variable(j3)}) *
                         commutator({Poly::variable(j4), Poly::variable(j5)});
                // Remaining letters.
                std::map<Var, std::uint32_t> rem;
                for (const auto& [v, k] : mu.entries()) rem[v] = k;
                for (Var j : {j1, j2, j3, j4, j5})
                  if (--rem[j] == 0) rem.erase(j);
                std::vector<Var> rest;
                for (const auto& [v, k] : rem)
                  for (std::uint32_t i = 0; i < k; ++i) rest.push_back(v);
                std::vector<Var> rw = rest;
                if (rw.empty()) {
                  emit(s);
                  continue;
                }
                do {
                  for (std::size_t cut = 0; cut <= rw.size(); ++cut) {
                    Poly p = s;
                    if (cut > 0) p = Poly::monomial(detail::segment(rw, 0, cut)) * p;
                    if (cut < rw.size())
                      p = p * Poly::monomial(detail::segment(rw, cut, rw.size() - cut));
                    emit(std::move(p));
                  }
                } while (std::next_permutation(rw.begin(), rw.end()));
              }
      break;
    }
    case IdealSpec::Kind::gamma: {
      const std::size_t n = spec.n();
      if (n == 1) {
        ComponentBasis basis(mu);
        for (const auto& m : basis.monomials()) emit(Poly::monomial(m));
        break;
      }
      detail::for_each_word(mu, [&](const std::vector<Var>& w) {
        // [w1, ..., wn] with every slot nonempty and no outer monomials.
        detail::for_each_slotting(total, n, [&](const std::vector<std::size_t>& sizes) {
          if (sizes[0] != 0 || sizes.back() != 0) return;
          emit(detail::frame_value(w, sizes));
        });
      });
      break;
    }
    case IdealSpec::Kind::custom: {
      for (const auto& g : spec.generators()) {
        MultiDegree gd = MultiDegree::of(g.terms()[0].first);
        // Need mu - gd >= 0 componentwise.
        std::map<Var, std::uint32_t> rem;
        bool fits = gd.total() <= total;
        for (const auto& [v, k] : mu.entries()) rem[v] = k;
        for (const auto& [v, k] : gd.entries()) {
          auto it = rem.find(v);
          if (it == rem.end() || it->second < k) {
            fits = false;
            break;
          }
          it->second -= k;
          if (it->second == 0) rem.erase(it);
        }
        if (!fits) continue;
        std::vector<Var> rest;
        for (const auto& [v, k] : rem)
          for (std::uint32_t i = 0; i < k; ++i) rest.push_back(v);
        if (rest.empty()) {
          emit(g);
          continue;
        }
        std::vector<Var> rw = rest;
        do {
          for (std::size_t cut = 0; cut <= rw.size(); ++cut) {
            Poly p = g;
            if (cut > 0) p = Poly::monomial(detail::segment(rw, 0, cut)) * p;
            if (cut < rw.size())
              p = p * Poly::monomial(detail::segment(rw, cut, rw.size() - cut));
            emit(std::move(p));
          }
        } while (std::next_permutation(rw.begin(), rw.end()));
      }
      break;
    }
  }
  return out;
}

struct ComponentLattice {
  MultiDegree mu;
  std::shared_ptr<const ComponentBasis> basis;
  Lattice lattice;
  std::size_t generator_count = 0;
};

namespace detail {

// Byte-budgeted LRU cache of component lattices keyed by (spec, mu).
class ComponentCache {
 public:
  static ComponentCache& instance() {
    static ComponentCache c;
    return c;
  }

  std::shared_ptr<const ComponentLattice> get(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return nullptr;
    order_.splice(order_.begin(), order_, it->second.pos);
    return it->second.value;
  }

  void put(const std::string& key, std::shared_ptr<const ComponentLattice> value) {
    std::size_t bytes = footprint(*value);
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.count(key)) return;
    order_.push_front(key);
    map_.emplace(key, Slot{value, order_.begin(), bytes});
    used_ += bytes;
    while (used_ > budget_ && !order_.empty()) {
      const std::string& victim = order_.back();
      if (victim == key) break;  // always keep the newest entry
      auto vit = map_.find(victim);
      used_ -= vit->second.bytes;
      map_.erase(vit);
      order_.pop_back();
    }
  }

 private:
  static std::size_t footprint(const ComponentLattice& c) {
    std::size_t cells = (c.lattice.rank() + 2) * c.lattice.ambient();
    return cells * sizeof(BigInt) + c.basis->dim() * 64;
  }
  struct Slot {
    std::shared_ptr<const ComponentLattice> value;
    std::list<std::string>::iterator pos;
    std::size_t bytes;
  };
  std::mutex mu_;
  std::unordered_map<std::string, Slot> map_;
  std::list<std::string> order_;
  std::size_t used_ = 0;
  std::size_t budget_ = std::size_t(512) << 20;
};

}  // namespace detail

// Lattice of the component of `spec` in multidegree mu, memoized per
// (spec, mu). T32 components extend the cached T4 component in place.
inline std::shared_ptr<const ComponentLattice> component_lattice(const IdealSpec& spec,
                                                                 const MultiDegree& mu) {
  std::string key = spec.key() + "@" + mu.to_string();
  auto& cache = detail::ComponentCache::instance();
  if (auto hit = cache.get(key)) return hit;

  auto basis = component_basis(mu);
  auto entry = std::make_shared<ComponentLattice>();
  entry->mu = mu;
  entry->basis = basis;

  if (spec.kind() == IdealSpec::Kind::t32) {
    // Seed with the cached T4 component and fold in only the product frames;
    // the spanned subgroup matches the full T32 frame set.
    auto t4 = component_lattice(IdealSpec::tn(4), mu);
    detail::HnfBuilder b(basis->dim());
    for (std::size_t r = 0; r < t4->lattice.basis().rows(); ++r)
      b.insert(t4->lattice.basis().row(r));
    std::set<Poly> extras;
    detail::emit_t32_products(mu, [&](Poly p) {
      if (p.is_zero()) return;
      auto [it, fresh] = extras.insert(std::move(p));
      if (fresh) b.insert(basis->coordinates(*it));
    });
    entry->lattice = Lattice::from_builder(basis->dim(), b);
    entry->generator_count = t4->generator_count + extras.size();
  } else {
    std::vector<Poly> gens = enumerate_generators(spec, mu);
    detail::HnfBuilder b(basis->dim());
    for (const auto& g : gens) b.insert(basis->coordinates(g));
    entry->lattice = Lattice::from_builder(basis->dim(), b);
    entry->generator_count = gens.size();
  }

  cache.put(key, entry);
  return entry;
}

// Membership of an arbitrary element: split into multihomogeneous parts and
// test each part against its component lattice.
inline bool ideal_member(const Poly& f, const IdealSpec& spec) {
  for (const auto& [mu, part] : split_components(f)) {
    auto comp = component_lattice(spec, mu);
    if (!comp->lattice.contains(comp->basis->coordinates(part))) return false;
  }
  return true;
}

// Least k >= 1 with k*f in the component span; nullopt when no finite k works.
inline std::optional<BigInt> order_mod_ideal(const Poly& f, const IdealSpec& spec) {
  BigInt k = 1;
  for (const auto& [mu, part] : split_components(f)) {
    auto comp = component_lattice(spec, mu);
    auto o = comp->lattice.order_in_quotient(comp->basis->coordinates(part));
    if (!o) return std::nullopt;
    k = lcm_val(k, *o);
  }
  return k;
}

// Whether [x1,x2,x3][x4,x5] - sgn(sigma) [x_s1,x_s2,x_s3][x_s4,x_s5] lies in
// T4, for sigma a permutation of {1..5}.
inline bool sign_congruence_check(const std::array<Var, 5>& sigma) {
  auto product_of = [](const std::array<Var, 5>& t) {
    return commutator({Poly::variable(t[0]), Poly::variable(t[1]), Poly::variable(t[2])}) *
           commutator({Poly::variable(t[3]), Poly::variable(t[4])});
  };
  int sign = 1;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (sigma[i] > sigma[j]) sign = -sign;
  Poly diff = product_of({1, 2, 3, 4, 5}) - BigInt(sign) * product_of(sigma);
  return ideal_member(diff, IdealSpec::tn(4));
}

}  // namespace lcs
