#include "vdouble/targets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <unordered_map>

#include "vdouble/error.hpp"

namespace vdouble {

namespace {

// Breadth-first closure from the identity under right multiplication by the
// generators; returns the multiplication table over the discovered order.
template <typename E, typename Mul>
std::vector<Element> closure_table(const E& identity, const std::vector<E>& gens, Mul mul, std::size_t& n) {
  std::map<E, Element> index{{identity, 0}};
  std::vector<E> elems{identity};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const E& g : gens) {
      E x = mul(elems[i], g);
      if (index.emplace(x, static_cast<Element>(elems.size())).second) {
        elems.push_back(std::move(x));
        if (elems.size() > kGroupCap) throw ValidationError("group exceeds " + std::to_string(kGroupCap) + " elements");
      }
    }
  }
  n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(mul(elems[a], elems[b]));
  }
  return table;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::size_t parse_size(std::string_view text, std::string_view spec) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("bad number in target '" + std::string(spec) + "'", 0);
  }
  return v;
}

FiniteGroup parse_group(std::string_view spec) {
  auto starts = [&](std::string_view p) { return spec.substr(0, p.size()) == p; };
  if (starts("cyc:")) return group_from_generators(Cyclic{parse_size(spec.substr(4), spec)});
  if (starts("ut2:")) return group_from_generators(UpperTriangular{static_cast<std::uint32_t>(parse_size(spec.substr(4), spec))});
  if (starts("s")) return group_from_generators(Sym{parse_size(spec.substr(1), spec)});
  if (starts("d")) {
    const std::size_t m = parse_size(spec.substr(1), spec);
    if (m < 2 || m % 2) throw ValidationError("dihedral group order must be even and at least 2");
    return group_from_generators(Dihedral{m / 2});
  }
  throw ParseError("unknown group target '" + std::string(spec) + "'", 0);
}

}  // namespace

FiniteQuandle::FiniteQuandle(std::string name, std::size_t n, std::vector<Element> table)
    : name_(std::move(name)), n_(n), table_(std::move(table)), inv_(n * n) {
  if (n_ == 0) throw ValidationError("quandle must be nonempty");
  if (table_.size() != n_ * n_) throw ValidationError("quandle table has wrong size");
  for (Element v : table_) {
    if (v >= n_) throw ValidationError("quandle table entry out of range");
  }
  for (Element i = 0; i < n_; ++i) {
    if (op(i, i) != i) throw ValidationError(name_ + ": idempotence fails at " + std::to_string(i));
  }
  for (Element j = 0; j < n_; ++j) {
    std::vector<bool> hit(n_, false);
    for (Element i = 0; i < n_; ++i) {
      const Element k = op(i, j);
      if (hit[k]) throw ValidationError(name_ + ": right translation by " + std::to_string(j) + " is not bijective");
      hit[k] = true;
      inv_[k * n_ + j] = i;
    }
  }
  for (Element i = 0; i < n_; ++i) {
    for (Element j = 0; j < n_; ++j) {
      const Element ij = op(i, j);
      for (Element k = 0; k < n_; ++k) {
        if (op(ij, k) != op(op(i, k), op(j, k))) throw ValidationError(name_ + ": self-distributivity fails");
      }
    }
  }
}

FiniteGroup::FiniteGroup(std::string name, std::size_t n, std::vector<Element> table)
    : name_(std::move(name)), n_(n), table_(std::move(table)), inv_(n, 0) {
  if (n_ == 0) throw ValidationError("group must be nonempty");
  if (table_.size() != n_ * n_) throw ValidationError("group table has wrong size");
  for (Element v : table_) {
    if (v >= n_) throw ValidationError("group table entry out of range");
  }
  bool found = false;
  for (Element e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (Element a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw ValidationError(name_ + ": no identity");
  for (Element a = 0; a < n_; ++a) {
    bool ok = false;
    for (Element b = 0; b < n_ && !ok; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inv_[a] = b;
        ok = true;
      }
    }
    if (!ok) throw ValidationError(name_ + ": element " + std::to_string(a) + " has no inverse");
  }
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < n_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) throw ValidationError(name_ + ": associativity fails");
      }
    }
  }
}

bool FiniteGroup::abelian() const {
  for (Element a = 0; a < n_; ++a) {
    for (Element b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

Algebra target_algebra(const FiniteTarget& t) {
  return std::holds_alternative<FiniteQuandle>(t) ? Algebra::Quandle : Algebra::Group;
}

const std::string& target_name(const FiniteTarget& t) {
  return std::visit([](const auto& x) -> const std::string& { return x.name(); }, t);
}

std::size_t target_size(const FiniteTarget& t) {
  return std::visit([](const auto& x) { return x.size(); }, t);
}

FiniteQuandle dihedral_quandle(std::size_t n) {
  if (n == 0) throw ValidationError("dihedral quandle needs n >= 1");
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Element>((2 * j + n - i) % n);
  }
  return FiniteQuandle("r" + std::to_string(n), n, std::move(t));
}

FiniteQuandle trivial_quandle(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Element>(i);
  }
  return FiniteQuandle("triv:" + std::to_string(n), n, std::move(t));
}

FiniteQuandle conj_quandle(const FiniteGroup& g) {
  const std::size_t n = g.size();
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) t[a * n + b] = g.mul(g.mul(b, a), g.inv(b));
  }
  return FiniteQuandle("conj:" + g.name(), n, std::move(t));
}

FiniteGroup group_from_generators(const GroupKind& kind) {
  std::size_t n = 0;
  if (const auto* s = std::get_if<Sym>(&kind)) {
    if (s->n == 0) throw ValidationError("Sym(0) is not supported");
    using Perm = std::vector<std::uint8_t>;
    Perm id(s->n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> gens;
    if (s->n > 1) {
      Perm swap = id;
      std::swap(swap[0], swap[1]);
      Perm cycle(s->n);
      for (std::size_t i = 0; i < s->n; ++i) cycle[i] = static_cast<std::uint8_t>((i + 1) % s->n);
      gens = {swap, cycle};
    }
    // (x*y)(i) = x(y(i))
    auto mul = [](const Perm& x, const Perm& y) {
      Perm z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[y[i]];
      return z;
    };
    auto table = closure_table(id, gens, mul, n);
    return FiniteGroup("s" + std::to_string(s->n), n, std::move(table));
  }
  if (const auto* u = std::get_if<UpperTriangular>(&kind)) {
    const std::uint32_t p = u->p;
    if (!is_prime(p)) throw ValidationError("ut2:p needs a prime p");
    // (a, b, c) is [[a, b], [0, c]] over F_p.
    using M = std::array<std::uint32_t, 3>;
    auto mul = [p](const M& x, const M& y) {
      return M{x[0] * y[0] % p, (x[0] * y[1] + x[1] * y[2]) % p, x[2] * y[2] % p};
    };
    std::uint32_t root = 1;
    for (std::uint32_t r = 1; r < p; ++r) {
      std::uint32_t order = 1;
      for (std::uint32_t v = r; v != 1; v = v * r % p) ++order;
      if (order == p - 1) {
        root = r;
        break;
      }
    }
    std::vector<M> gens{{root, 0, 1}, {1, 0, root}, {1, 1, 1}};
    auto table = closure_table(M{1, 0, 1}, gens, mul, n);
    return FiniteGroup("ut2:" + std::to_string(p), n, std::move(table));
  }
  if (const auto* c = std::get_if<Cyclic>(&kind)) {
    if (c->n == 0) throw ValidationError("cyc:0 is not a finite group");
    const std::size_t m = c->n;
    auto mul = [m](const std::size_t& x, const std::size_t& y) { return (x + y) % m; };
    auto table = closure_table<std::size_t>(0, {1 % m}, mul, n);
    return FiniteGroup("cyc:" + std::to_string(m), n, std::move(table));
  }
  const auto& d = std::get<Dihedral>(kind);
  if (d.n == 0) throw ValidationError("dihedral group needs n >= 1");
  const std::size_t m = d.n;
  // (k, f): rotate by k after reflecting when f.
  using D = std::pair<std::size_t, bool>;
  auto mul = [m](const D& x, const D& y) {
    const std::size_t k = x.second ? (x.first + m - y.first) % m : (x.first + y.first) % m;
    return D{k, x.second != y.second};
  };
  auto table = closure_table(D{0, false}, {D{1 % m, false}, D{0, true}}, mul, n);
  return FiniteGroup("d" + std::to_string(2 * m), n, std::move(table));
}

FiniteTarget parse_target(std::string_view spec) {
  if (spec.substr(0, 5) == "conj:") return conj_quandle(parse_group(spec.substr(5)));
  if (spec.substr(0, 5) == "triv:") return trivial_quandle(parse_size(spec.substr(5), spec));
  if (spec.substr(0, 1) == "r") {
    const std::size_t n = parse_size(spec.substr(1), spec);
    if (n == 0) throw ValidationError("r0 is not a quandle");
    return dihedral_quandle(n);
  }
  return parse_group(spec);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  auto bad = [&]() -> Rational { throw ParseError("bad rational '" + std::string(text) + "'", 0); };
  if (s.empty()) return bad();
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  std::string body = s.substr(i);
  auto digits = [](const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  Rational q;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!digits(num) || !digits(den)) return bad();
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
    q = Rational(mpz_class(num, 10), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot);
    const std::string frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!digits(whole) || (!frac.empty() && !digits(frac))) return bad();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    q = Rational(mpz_class(whole + frac, 10), scale);
  } else {
    if (!digits(body)) return bad();
    q = Rational(mpz_class(body, 10));
  }
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Mat2 Mat2::identity() { return Mat2{{Rational(1), Rational(0), Rational(0), Rational(1)}}; }

Rational Mat2::det() const { return e[0] * e[3] - e[1] * e[2]; }

Mat2 Mat2::inverse() const {
  const Rational d = det();
  if (d == 0) throw Error("singular matrix " + to_string(*this));
  return Mat2{{Rational(e[3] / d), Rational(-e[1] / d), Rational(-e[2] / d), Rational(e[0] / d)}};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{{Rational(x.e[0] * y.e[0] + x.e[1] * y.e[2]), Rational(x.e[0] * y.e[1] + x.e[1] * y.e[3]),
               Rational(x.e[2] * y.e[0] + x.e[3] * y.e[2]), Rational(x.e[2] * y.e[1] + x.e[3] * y.e[3])}};
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  return Mat2{{Rational(x.e[0] - y.e[0]), Rational(x.e[1] - y.e[1]), Rational(x.e[2] - y.e[2]), Rational(x.e[3] - y.e[3])}};
}

std::string to_string(const Mat2& m) {
  return "[[" + to_string(m.e[0]) + ", " + to_string(m.e[1]) + "], [" + to_string(m.e[2]) + ", " + to_string(m.e[3]) + "]]";
}

Mat2 eval_term(const Term& t, const MatrixAssignment& assign) {
  std::unordered_map<const void*, Mat2> memo;
  auto go = [&](auto&& self, const Term& u) -> Mat2 {
    if (u.is_gen()) {
      auto it = assign.find(u.name());
      if (it == assign.end()) throw ValidationError("no matrix assigned to '" + u.name() + "'");
      return it->second;
    }
    if (auto it = memo.find(u.node_id()); it != memo.end()) return it->second;
    const Mat2 b = self(self, u.base());
    const Mat2 e = self(self, u.exponent());
    const Mat2 ei = e.inverse();
    Mat2 out = u.dir() == ExpDir::Fwd ? e * b * ei : ei * b * e;
    memo.emplace(u.node_id(), out);
    return out;
  };
  return go(go, t);
}

Element eval_term(const Term& t, const FiniteQuandle& q, const ElementAssignment& assign) {
  std::unordered_map<const void*, Element> memo;
  auto go = [&](auto&& self, const Term& u) -> Element {
    if (u.is_gen()) {
      auto it = assign.find(u.name());
      if (it == assign.end()) throw ValidationError("no element assigned to '" + u.name() + "'");
      return it->second;
    }
    if (auto it = memo.find(u.node_id()); it != memo.end()) return it->second;
    const Element b = self(self, u.base());
    const Element e = self(self, u.exponent());
    const Element out = u.dir() == ExpDir::Fwd ? q.op(b, e) : q.inv_op(b, e);
    memo.emplace(u.node_id(), out);
    return out;
  };
  return go(go, t);
}

Element eval_word(const Word& w, const FiniteGroup& g, const ElementAssignment& assign) {
  Element acc = g.identity();
  for (const Letter& l : w) {
    auto it = assign.find(l.gen);
    if (it == assign.end()) throw ValidationError("no element assigned to '" + l.gen + "'");
    acc = g.mul(acc, l.exp > 0 ? it->second : g.inv(it->second));
  }
  return acc;
}

WitnessReport witness_check(const Presentation& p, const MatrixAssignment& assign) {
  WitnessReport report;
  for (const auto& g : p.generators) {
    if (!assign.count(g)) throw ValidationError("no matrix assigned to '" + g + "'");
  }
  for (const auto& r : p.quandle_relations()) {
    RelationCheck c;
    c.lhs = eval_term(r.lhs, assign);
    c.rhs = eval_term(r.rhs, assign);
    c.delta = c.lhs - c.rhs;
    c.holds = c.lhs == c.rhs;
    report.holds = report.holds && c.holds;
    report.relations.push_back(std::move(c));
  }
  return report;
}

}  // namespace vdouble
