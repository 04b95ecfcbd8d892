#pragma once

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "cohomlim/action.hpp"

namespace cohomlim {

/// An inhomogeneous n-cochain: a map G^n -> A stored flat, indexed in mixed
/// radix with the first argument most significant. Degree 0 is a single
/// element of A (a constant). Only defined for abelian A.
struct Cochain {
  int degree = 0;
  std::vector<int> values;

  auto operator<=>(const Cochain&) const = default;
};

using CochainSet = std::set<Cochain>;

inline long long cochain_size(const FiniteGroup& g, int degree) {
  long long s = 1;
  for (int i = 0; i < degree; ++i) s *= g.order;
  return s;
}

inline Cochain zero_cochain(const FiniteGroup& g, int degree) {
  return Cochain{degree, std::vector<int>(cochain_size(g, degree), 0)};
}

inline void require_abelian(const FiniteGroup& a) {
  if (!a.abelian()) throw validation_error("NotAbelian", "coefficients must be abelian");
}

namespace detail {

inline void decode_tuple(int index, int base, int degree, std::vector<int>& tuple) {
  tuple.resize(degree);
  for (int i = degree - 1; i >= 0; --i) {
    tuple[i] = index % base;
    index /= base;
  }
}

inline int encode_tuple(const std::vector<int>& tuple, int base) {
  int index = 0;
  for (int s : tuple) index = index * base + s;
  return index;
}

}  // namespace detail

inline Cochain add_cochains(const FiniteGroup& a, const Cochain& f, const Cochain& g) {
  Cochain out{f.degree, std::vector<int>(f.values.size())};
  for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = a.op(f.values[i], g.values[i]);
  return out;
}

inline Cochain negate_cochain(const FiniteGroup& a, const Cochain& f) {
  Cochain out{f.degree, std::vector<int>(f.values.size())};
  for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = a.inverse(f.values[i]);
  return out;
}

/// The coboundary operator taking an (n-1)-cochain to an n-cochain:
///
///   (d_n f)(s_1,...,s_n) = s_1 . f(s_2,...,s_n)
///                        + sum_{i=1}^{n-1} (-1)^i f(s_1,...,s_i s_{i+1},...,s_n)
///                        + (-1)^n f(s_1,...,s_{n-1})
///
/// Additive in f, with d_{n+1} d_n = 0.
inline Cochain differential(const GAction& act, const Cochain& f) {
  require_abelian(act.a);
  const int ng = act.g.order;
  const int n = f.degree + 1;
  Cochain out = zero_cochain(act.g, n);

  std::vector<int> tuple, sub;
  for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
    detail::decode_tuple(static_cast<int>(idx), ng, n, tuple);

    sub.assign(tuple.begin() + 1, tuple.end());
    int acc = act.apply(tuple[0], f.values[detail::encode_tuple(sub, ng)]);

    for (int i = 1; i <= n - 1; ++i) {
      sub = tuple;
      sub[i - 1] = act.g.op(tuple[i - 1], tuple[i]);
      sub.erase(sub.begin() + i);
      int term = f.values[detail::encode_tuple(sub, ng)];
      acc = act.a.op(acc, (i % 2 == 0) ? term : act.a.inverse(term));
    }

    sub.assign(tuple.begin(), tuple.end() - 1);
    int last = f.values[detail::encode_tuple(sub, ng)];
    acc = act.a.op(acc, (n % 2 == 0) ? last : act.a.inverse(last));

    out.values[idx] = acc;
  }
  return out;
}

namespace detail {

/// Odometer over all cochains of the given degree.
template <typename Fn>
void for_each_cochain(const GAction& act, int degree, const Budget& budget, Fn&& fn) {
  const long long size = cochain_size(act.g, degree);
  require_budget(checked_pow(act.a.order, size, budget.max_candidates), budget);
  Cochain f = zero_cochain(act.g, degree);
  while (true) {
    fn(f);
    std::size_t k = 0;
    while (k < f.values.size() && ++f.values[k] == act.a.order) {
      f.values[k] = 0;
      ++k;
    }
    if (k == f.values.size()) break;
  }
}

}  // namespace detail

/// Z^n = ker d_{n+1}, by enumerating all degree-n cochains.
inline CochainSet z_n(const GAction& act, int n, const Budget& budget = {}) {
  require_abelian(act.a);
  CochainSet out;
  const Cochain zero = zero_cochain(act.g, n + 1);
  detail::for_each_cochain(act, n, budget, [&](const Cochain& f) {
    if (differential(act, f) == zero) out.insert(f);
  });
  return out;
}

/// B^n = im d_n over all (n-1)-cochains; B^0 is the zero subgroup.
inline CochainSet b_n(const GAction& act, int n, const Budget& budget = {}) {
  require_abelian(act.a);
  CochainSet out;
  if (n == 0) {
    out.insert(zero_cochain(act.g, 0));
    return out;
  }
  detail::for_each_cochain(act, n - 1, budget,
                           [&](const Cochain& f) { out.insert(differential(act, f)); });
  return out;
}

/// The cohomology group H^n = Z^n / B^n, reported as the coset partition
/// with sizes and the multiset of element orders of the quotient.
struct CohomologyGroup {
  int n = 0;
  long long z_size = 0;
  long long b_size = 0;
  long long h_size = 0;
  std::vector<std::vector<Cochain>> classes;  // cosets, sorted by minimal member
  std::map<Cochain, int> class_of;
  std::vector<int> element_orders;  // sorted multiset

  int base_class() const { return class_of.at(Cochain{n, std::vector<int>(classes[0][0].values.size(), 0)}); }
  const Cochain& representative(int c) const { return classes[c].front(); }

  /// [x] + [y] via representatives; the partition makes this well defined.
  int add_classes(const FiniteGroup& a, int c1, int c2) const {
    return class_of.at(add_cochains(a, representative(c1), representative(c2)));
  }
};

inline CohomologyGroup h_n(const GAction& act, int n, const Budget& budget = {}) {
  require_abelian(act.a);
  CohomologyGroup h;
  h.n = n;
  CochainSet zn = z_n(act, n, budget);
  CochainSet bn = b_n(act, n, budget);
  h.z_size = static_cast<long long>(zn.size());
  h.b_size = static_cast<long long>(bn.size());
  for (const Cochain& b : bn)
    if (!zn.count(b)) throw validation_error("NotComplex", "image of d_n escapes ker d_{n+1}");

  CochainSet remaining = zn;
  while (!remaining.empty()) {
    Cochain seed = *remaining.begin();
    CochainSet coset;
    for (const Cochain& b : bn) coset.insert(add_cochains(act.a, seed, b));
    int idx = static_cast<int>(h.classes.size());
    h.classes.emplace_back(coset.begin(), coset.end());
    for (const Cochain& c : coset) {
      h.class_of[c] = idx;
      remaining.erase(c);
    }
  }
  h.h_size = static_cast<long long>(h.classes.size());

  for (const auto& cls : h.classes) {
    const Cochain& rep = cls.front();
    Cochain acc = rep;
    int order = 1;
    while (!bn.count(acc)) {
      acc = add_cochains(act.a, acc, rep);
      ++order;
    }
    h.element_orders.push_back(order);
  }
  std::sort(h.element_orders.begin(), h.element_orders.end());
  return h;
}

/// Stabilizer of a in Z^n under (a, f) -> a + d_n f, computed from the
/// action itself. Equals ker d_n = Z^{n-1} for every a.
inline CochainSet stab_n(const GAction& act, int n, const Cochain& a, const Budget& budget = {}) {
  require_abelian(act.a);
  CochainSet out;
  detail::for_each_cochain(act, n - 1, budget, [&](const Cochain& f) {
    if (add_cochains(act.a, a, differential(act, f)) == a) out.insert(f);
  });
  return out;
}

/// Orbit of a: the coset a + B^n.
inline CochainSet orbit_n(const GAction& act, int n, const Cochain& a, const Budget& budget = {}) {
  require_abelian(act.a);
  CochainSet out;
  detail::for_each_cochain(act, n - 1, budget, [&](const Cochain& f) {
    out.insert(add_cochains(act.a, a, differential(act, f)));
  });
  return out;
}

/// Pushes a cochain forward along an equivariant hom, entrywise.
inline Cochain pushforward_cochain(const GroupHom& phi, const Cochain& f) {
  Cochain out{f.degree, std::vector<int>(f.values.size())};
  for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = phi(f.values[i]);
  return out;
}

}  // namespace cohomlim
