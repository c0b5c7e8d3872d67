#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "a1h/errors.hpp"
#include "a1h/polynomial.hpp"

namespace a1h {

/// Reduced Groebner basis of an ideal, optionally with a cofactor row per
/// element expressing it over the original (nonzero) generators.
struct ReducedBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;                 // monic, ascending leading monomials
  std::vector<std::vector<Polynomial>> cofactors;  // [element][generator]; empty if untracked
  std::vector<Polynomial> generators;               // nonzero generators the rows refer to

  bool has_cofactors() const { return !elements.empty() && !cofactors.empty(); }
  bool is_zero_ideal() const { return elements.empty(); }
  bool is_unit_ideal() const { return elements.size() == 1 && elements[0].is_one(); }
};

/// Division-algorithm output: f = sum(quotients[i] * divisors[i]) + remainder.
struct Reduction {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

namespace detail {

/// Fully reduces `f` by `divisors` (first divisor whose leading monomial
/// divides the current leading term wins). When `rows` is non-null, the
/// combination applied is mirrored onto `f_row` using the divisors' rows.
inline Polynomial reduce_full(Polynomial f, const std::vector<const Polynomial*>& divisors,
                              std::vector<Polynomial>* f_row,
                              const std::vector<const std::vector<Polynomial>*>* rows,
                              std::vector<Polynomial>* quotients = nullptr) {
  Polynomial rem(f.ring());
  std::vector<Term> rem_terms;
  while (!f.is_zero()) {
    const Term lt = f.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial& g = *divisors[i];
      const Term& glt = g.leading_term();
      if (!glt.mono.divides(lt.mono)) continue;
      const Monomial m = lt.mono / glt.mono;
      const Scalar c = lt.coeff / glt.coeff;
      f.add_scaled(g, -c, m);
      if (f_row && rows) {
        const auto& grow = *(*rows)[i];
        for (std::size_t k = 0; k < grow.size(); ++k) (*f_row)[k].add_scaled(grow[k], -c, m);
      }
      if (quotients) (*quotients)[i].add_scaled(Polynomial::constant(f.ring(), Scalar(1)), c, m);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem_terms.push_back(lt);
      f.drop_leading();
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(rem_terms));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace detail

/// Division of f by the elements of a reduced basis.
inline Reduction normal_form(const Polynomial& f, const ReducedBasis& basis) {
  if (!same_ring(f.ring(), basis.ring)) throw RingMismatch("normal_form: ring mismatch");
  std::vector<const Polynomial*> divs;
  for (const auto& g : basis.elements) divs.push_back(&g);
  Reduction r{Polynomial(f.ring()), std::vector<Polynomial>(divs.size(), Polynomial(f.ring()))};
  r.remainder = detail::reduce_full(f, divs, nullptr, nullptr, &r.quotients);
  return r;
}

/// Remainder only, by an arbitrary divisor list.
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  std::vector<const Polynomial*> divs;
  for (const auto& g : divisors) {
    if (!same_ring(f.ring(), g.ring())) throw RingMismatch("reduce: ring mismatch");
    divs.push_back(&g);
  }
  return detail::reduce_full(f, divs, nullptr, nullptr);
}

/// Buchberger's algorithm: normal selection strategy (smallest lcm of leading
/// monomials first) with the Gebauer-Moeller update, whose pruning includes
/// the coprime-leading-monomial criterion. Returns the reduced basis sorted by
/// ascending leading monomial.
inline ReducedBasis reduced_basis(const RingPtr& ring, std::span<const Polynomial> gens,
                                  bool track_cofactors) {
  ReducedBasis out;
  out.ring = ring;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch("reduced_basis: generator ring mismatch");
    if (!g.is_zero()) out.generators.push_back(g);
  }
  const std::size_t n = out.generators.size();
  if (n == 0) return out;

  const Ring& R = *ring;
  const Polynomial zero(ring);
  auto unit_row = [&](std::size_t k, const Scalar& c) {
    std::vector<Polynomial> row(n, zero);
    row[k] = Polynomial::constant(ring, c);
    return row;
  };

  std::vector<Polynomial> polys;
  std::vector<std::vector<Polynomial>> rows;
  std::vector<bool> active;
  std::vector<detail::Pair> pairs;

  auto divisor_view = [&](std::vector<const Polynomial*>& divs,
                          std::vector<const std::vector<Polynomial>*>& drows) {
    divs.clear();
    drows.clear();
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (!active[k]) continue;
      divs.push_back(&polys[k]);
      if (track_cofactors) drows.push_back(&rows[k]);
    }
  };

  // Gebauer-Moeller update with new element h.
  auto update = [&](std::size_t h) {
    const Monomial& lh = polys[h].leading_monomial();
    std::vector<detail::Pair> C;
    for (std::size_t g = 0; g < polys.size(); ++g)
      if (active[g] && g != h) C.push_back({g, h, polys[g].leading_monomial().lcm(lh)});
    std::vector<detail::Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const auto& p = C[a];
      const bool coprime = polys[p.i].leading_monomial().coprime(lh);
      bool keep = coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<detail::Pair> next;
    for (const auto& p : pairs) {
      const bool drop = lh.divides(p.lcm) &&
                        !(polys[p.i].leading_monomial().lcm(lh) == p.lcm) &&
                        !(polys[p.j].leading_monomial().lcm(lh) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const auto& p : D)
      if (!polys[p.i].leading_monomial().coprime(lh)) next.push_back(p);
    pairs = std::move(next);
    for (std::size_t g = 0; g < polys.size(); ++g)
      if (active[g] && g != h && lh.divides(polys[g].leading_monomial())) active[g] = false;
  };

  auto add = [&](Polynomial f, std::vector<Polynomial> row) {
    const Scalar inv = f.leading_coeff().inverse();
    f = f.scaled(inv);
    if (track_cofactors)
      for (auto& c : row) c = c.scaled(inv);
    polys.push_back(std::move(f));
    rows.push_back(std::move(row));
    active.push_back(true);
    update(polys.size() - 1);
  };

  std::vector<const Polynomial*> divs;
  std::vector<const std::vector<Polynomial>*> drows;
  bool unit_found = false;
  std::size_t unit_index = 0;

  // Seed with inter-reduced input: each generator reduced by those already in.
  for (std::size_t k = 0; k < n && !unit_found; ++k) {
    divisor_view(divs, drows);
    std::vector<Polynomial> row = track_cofactors ? unit_row(k, Scalar(1)) : std::vector<Polynomial>{};
    Polynomial f = detail::reduce_full(out.generators[k], divs, track_cofactors ? &row : nullptr,
                                       track_cofactors ? &drows : nullptr);
    if (f.is_zero()) continue;
    add(std::move(f), std::move(row));
    if (polys.back().is_constant()) {
      unit_found = true;
      unit_index = polys.size() - 1;
    }
  }

  while (!unit_found && !pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const int c = R.compare(pairs[k].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && (pairs[k].j < pairs[best].j ||
                               (pairs[k].j == pairs[best].j && pairs[k].i < pairs[best].i))))
        best = k;
    }
    const detail::Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    const Polynomial& fi = polys[p.i];
    const Polynomial& fj = polys[p.j];
    const Monomial mi = p.lcm / fi.leading_monomial();
    const Monomial mj = p.lcm / fj.leading_monomial();
    Polynomial s = fi.shifted(mi);
    s.add_scaled(fj, Scalar(-1), mj);
    std::vector<Polynomial> row;
    if (track_cofactors) {
      row.assign(n, zero);
      for (std::size_t k = 0; k < n; ++k) {
        row[k].add_scaled(rows[p.i][k], Scalar(1), mi);
        row[k].add_scaled(rows[p.j][k], Scalar(-1), mj);
      }
    }
    divisor_view(divs, drows);
    s = detail::reduce_full(std::move(s), divs, track_cofactors ? &row : nullptr,
                            track_cofactors ? &drows : nullptr);
    if (s.is_zero()) continue;
    add(std::move(s), std::move(row));
    if (polys.back().is_constant()) {
      unit_found = true;
      unit_index = polys.size() - 1;
    }
  }

  std::vector<std::size_t> keep;
  if (unit_found) {
    keep.push_back(unit_index);
  } else {
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) keep.push_back(k);
  }
  std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
    return R.compare(polys[a].leading_monomial(), polys[b].leading_monomial()) < 0;
  });

  // Tail-reduce each survivor by the others; leading monomials do not change.
  std::vector<Polynomial> final_polys;
  std::vector<std::vector<Polynomial>> final_rows;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    std::vector<const Polynomial*> others;
    std::vector<const std::vector<Polynomial>*> orows;
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (b == a) continue;
      others.push_back(&polys[keep[b]]);
      if (track_cofactors) orows.push_back(&rows[keep[b]]);
    }
    const Polynomial& g = polys[keep[a]];
    std::vector<Polynomial> row = track_cofactors ? rows[keep[a]] : std::vector<Polynomial>{};
    Polynomial tail = g;
    tail.add_scaled(Polynomial::term(ring, g.leading_monomial(), g.leading_coeff()), Scalar(-1),
                    Monomial{});
    Polynomial head = Polynomial::term(ring, g.leading_monomial(), g.leading_coeff());
    Polynomial reduced = detail::reduce_full(tail, others, track_cofactors ? &row : nullptr,
                                             track_cofactors ? &orows : nullptr);
    final_polys.push_back(head + reduced);
    final_rows.push_back(std::move(row));
  }
  out.elements = std::move(final_polys);
  if (track_cofactors) out.cofactors = std::move(final_rows);
  return out;
}

/// All S-polynomials of the basis reduce to zero.
inline bool satisfies_buchberger_criterion(const ReducedBasis& b) {
  const auto& G = b.elements;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const Monomial l = G[i].leading_monomial().lcm(G[j].leading_monomial());
      Polynomial s = G[i].shifted(l / G[i].leading_monomial(), G[i].leading_coeff().inverse());
      s.add_scaled(G[j], -G[j].leading_coeff().inverse(), l / G[j].leading_monomial());
      if (!reduce(s, G).is_zero()) return false;
    }
  return true;
}

/// Leading coefficients are 1 and no term of any element is divisible by the
/// leading monomial of another element.
inline bool is_reduced(const ReducedBasis& b) {
  const auto& G = b.elements;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!G[i].leading_coeff().is_one()) return false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : G[i].terms())
        if (G[j].leading_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

/// Every element equals its cofactor row dotted with the generators.
inline bool cofactors_consistent(const ReducedBasis& b) {
  if (b.elements.empty()) return true;
  if (b.cofactors.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    Polynomial acc(b.ring);
    for (std::size_t k = 0; k < b.generators.size(); ++k)
      acc += b.cofactors[i][k] * b.generators[k];
    if (!(acc == b.elements[i])) return false;
  }
  return true;
}

/// Finite generator list with a lazily computed, publication-safe Groebner
/// basis cache. Copies share the cache.
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}
  Ideal(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (!same_ring(g.ring(), ring_)) throw RingMismatch("Ideal: generator ring mismatch");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Reduced basis with cofactor rows over `generators()`.
  const ReducedBasis& basis() const {
    std::lock_guard lock(cache_->mu);
    if (!cache_->full) cache_->full = reduced_basis(ring_, gens_, /*track_cofactors=*/true);
    return *cache_->full;
  }

  /// Reduced basis elements (no cofactors unless already computed).
  const std::vector<Polynomial>& groebner() const {
    std::lock_guard lock(cache_->mu);
    if (!cache_->plain) {
      cache_->plain = cache_->full ? cache_->full->elements
                                   : reduced_basis(ring_, gens_, /*track_cofactors=*/false).elements;
    }
    return *cache_->plain;
  }

  bool is_unit() const {
    const auto& g = groebner();
    return g.size() == 1 && g[0].is_constant();
  }

 private:
  struct Cache {
    std::mutex mu;
    std::optional<ReducedBasis> full;
    std::optional<std::vector<Polynomial>> plain;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline std::string to_string(const std::vector<Polynomial>& ps) {
  std::string s = "[";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += ps[i].to_string();
  }
  return s + "]";
}

}  // namespace a1h
