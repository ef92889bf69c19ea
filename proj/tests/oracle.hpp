#ifndef VDOUBLE_TESTS_ORACLE_HPP
#define VDOUBLE_TESTS_ORACLE_HPP

// Brute-force reference counts. Nothing here goes through the library's
// targets or hom counter: elements are built directly (permutations, explicit
// matrices mod p, residues) and every assignment is enumerated.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vdouble/presenter.hpp"
#include "vdouble/term.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {  // apply b, then a
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm invert(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

inline std::vector<Perm> all_perms(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Invertible upper-triangular 2x2 matrices mod p as (a, b, c) = [[a, b], [0, c]].
struct Ut {
  int a, b, c;
  friend bool operator==(const Ut&, const Ut&) = default;
};

inline std::vector<Ut> all_ut(int p) {
  std::vector<Ut> out;
  for (int a = 1; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 1; c < p; ++c) out.push_back({a, b, c});
  return out;
}

// A finite group given by its elements as abstract indices with explicit
// operations, built from a concrete model.
struct Group {
  int n = 0;
  std::function<int(int, int)> mul;
  std::function<int(int)> inv;
};

template <class T, class Mul>
Group model(const std::vector<T>& elems, Mul m) {
  Group g;
  g.n = static_cast<int>(elems.size());
  auto index = [elems](const T& x) {
    return static_cast<int>(std::find(elems.begin(), elems.end(), x) - elems.begin());
  };
  g.mul = [elems, m, index](int i, int j) { return index(m(elems[i], elems[j])); };
  g.inv = [elems, m, index](int i) {
    for (std::size_t k = 0; k < elems.size(); ++k) {
      const T e = m(elems[i], elems[k]);
      if (m(e, elems[i]) == elems[i] && m(elems[i], e) == elems[i]) return static_cast<int>(k);
    }
    return -1;
  };
  return g;
}

inline Group sym(int n) { return model(all_perms(n), compose); }

inline Group ut(int p) {
  return model(all_ut(p), [p](const Ut& x, const Ut& y) {
    return Ut{x.a * y.a % p, (x.a * y.b + x.b * y.c) % p, x.c * y.c % p};
  });
}

inline Group cyclic(int n) {
  Group g;
  g.n = n;
  g.mul = [n](int i, int j) { return (i + j) % n; };
  g.inv = [n](int i) { return (n - i) % n; };
  return g;
}

// Binary quandle operation op(t, u) = t^u.
struct Quandle {
  int n = 0;
  std::function<int(int, int)> op;
  std::function<int(int, int)> inv_op;
};

inline Quandle dihedral(int n) {
  Quandle q;
  q.n = n;
  q.op = [n](int i, int j) { return ((2 * j - i) % n + n) % n; };
  q.inv_op = q.op;
  return q;
}

inline Quandle conj(const Group& g) {
  Quandle q;
  q.n = g.n;
  q.op = [g](int a, int b) { return g.mul(g.mul(b, a), g.inv(b)); };
  q.inv_op = [g](int a, int b) { return g.mul(g.mul(g.inv(b), a), b); };
  return q;
}

inline int eval(const vdouble::Term& t, const Quandle& q, const std::map<std::string, int>& v) {
  if (t.is_gen()) return v.at(t.name());
  const int b = eval(t.base(), q, v);
  const int e = eval(t.exponent(), q, v);
  return t.dir() == vdouble::ExpDir::Fwd ? q.op(b, e) : q.inv_op(b, e);
}

inline int eval(const vdouble::Word& w, const Group& g, const std::map<std::string, int>& v) {
  int acc = -1;
  for (const auto& l : w) {
    const int x = l.exp > 0 ? v.at(l.gen) : g.inv(v.at(l.gen));
    acc = acc < 0 ? x : g.mul(acc, x);
  }
  if (acc >= 0) return acc;
  for (int e = 0; e < g.n; ++e) {
    if (g.mul(e, e) == e) return e;
  }
  return -1;
}

// Calls f on every assignment of values in [0, n) to gens.
inline void each_assignment(const std::vector<std::string>& gens, int n,
                            const std::function<void(const std::map<std::string, int>&)>& f) {
  std::vector<int> idx(gens.size(), 0);
  std::map<std::string, int> v;
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) v[gens[i]] = idx[i];
    f(v);
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == n) idx[k++] = 0;
    if (k == idx.size()) break;
  }
}

inline std::uint64_t count(const vdouble::Presentation& p, const Quandle& q) {
  std::uint64_t c = 0;
  each_assignment(p.generators, q.n, [&](const auto& v) {
    for (const auto& r : p.quandle_relations()) {
      if (eval(r.lhs, q, v) != eval(r.rhs, q, v)) return;
    }
    ++c;
  });
  return c;
}

inline std::uint64_t count(const vdouble::Presentation& p, const Group& g) {
  std::uint64_t c = 0;
  each_assignment(p.generators, g.n, [&](const auto& v) {
    for (const auto& r : p.group_relations()) {
      if (eval(r.lhs, g, v) != eval(r.rhs, g, v)) return;
    }
    ++c;
  });
  return c;
}

}  // namespace oracle

#endif  // VDOUBLE_TESTS_ORACLE_HPP
