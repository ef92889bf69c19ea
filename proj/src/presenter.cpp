#include "vdouble/presenter.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "vdouble/error.hpp"

namespace vdouble {

namespace {

using Count = std::uint64_t;

Count sat_add(Count a, Count b) { return a > std::numeric_limits<Count>::max() - b ? std::numeric_limits<Count>::max() : a + b; }

// Structurally equal terms built through one Interner share a node, so
// equality checks on them stop at the pointer comparison.
class Interner {
 public:
  Term make(Term base, Term exponent, ExpDir dir) {
    Term t = Term::exp(std::move(base), std::move(exponent), dir);
    return intern(std::move(t));
  }

  Term intern(Term t) {
    auto& bucket = table_[t.hash()];
    for (const Term& u : bucket) {
      if (u == t) return u;
    }
    bucket.push_back(t);
    return t;
  }

 private:
  std::unordered_map<std::size_t, std::vector<Term>> table_;
};

class Normalizer {
 public:
  explicit Normalizer(Interner& in) : in_(in) {}

  Term run(const Term& t) {
    if (t.is_gen()) return in_.intern(t);
    if (auto it = memo_.find(t.node_id()); it != memo_.end()) return it->second;
    Term b = run(t.base());
    Term e = run(t.exponent());
    Term out = reduce(std::move(b), std::move(e), t.dir());
    keep_.push_back(t);
    memo_.emplace(t.node_id(), out);
    return out;
  }

 private:
  Term reduce(Term b, Term e, ExpDir dir) {
    if (b == e) return b;  // t^t = t^~t = t
    if (!b.is_gen() && b.dir() == flip(dir) && b.exponent() == e) return b.base();
    return in_.make(std::move(b), std::move(e), dir);
  }

  Interner& in_;
  std::unordered_map<const void*, Term> memo_;
  std::vector<Term> keep_;  // pins memo keys
};

class Substituter {
 public:
  Substituter(Interner& in, const std::map<std::string, Term>& values) : in_(in), values_(values) {}

  Term run(const Term& t) {
    if (t.is_gen()) {
      auto it = values_.find(t.name());
      return it == values_.end() ? t : it->second;
    }
    if (auto it = memo_.find(t.node_id()); it != memo_.end()) return it->second;
    Term b = run(t.base());
    Term e = run(t.exponent());
    Term out = (b.node_id() == t.base().node_id() && e.node_id() == t.exponent().node_id())
                   ? t
                   : in_.make(std::move(b), std::move(e), t.dir());
    keep_.push_back(t);
    memo_.emplace(t.node_id(), out);
    return out;
  }

 private:
  Interner& in_;
  const std::map<std::string, Term>& values_;
  std::unordered_map<const void*, Term> memo_;
  std::vector<Term> keep_;
};

// Distinct DAG nodes below the roots, children before parents.
std::vector<const Term*> postorder(const std::vector<const Term*>& roots) {
  std::vector<const Term*> order;
  std::unordered_set<const void*> seen;
  std::vector<std::pair<const Term*, bool>> stack;
  for (const Term* r : roots) stack.emplace_back(r, false);
  while (!stack.empty()) {
    auto [t, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(t);
      continue;
    }
    if (!seen.insert(t->node_id()).second) continue;
    stack.emplace_back(t, true);
    if (!t->is_gen()) {
      stack.emplace_back(&t->exponent(), false);
      stack.emplace_back(&t->base(), false);
    }
  }
  return order;
}

// Tree occurrences of every generator under the given roots (saturating).
std::map<std::string, Count> occurrences(const std::vector<const Term*>& roots) {
  const auto order = postorder(roots);
  std::unordered_map<const void*, Count> mult;
  for (const Term* r : roots) mult[r->node_id()] = sat_add(mult[r->node_id()], 1);
  std::map<std::string, Count> out;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Term* t = *it;
    const Count m = mult[t->node_id()];
    if (t->is_gen()) {
      out[t->name()] = sat_add(out[t->name()], m);
    } else {
      mult[t->base().node_id()] = sat_add(mult[t->base().node_id()], m);
      mult[t->exponent().node_id()] = sat_add(mult[t->exponent().node_id()], m);
    }
  }
  return out;
}

bool mentions(const Term& t, const std::string& g) {
  for (const Term* n : postorder({&t})) {
    if (n->is_gen() && n->name() == g) return true;
  }
  return false;
}

void collect_names(const Term& t, std::set<std::string>& out) {
  for (const Term* n : postorder({&t})) {
    if (n->is_gen()) out.insert(n->name());
  }
}

// Solves side = other for the generator at the bottom of side's base chain:
// s^u = R gives s = R^~u.
std::pair<std::string, Term> peel(Term side, Term other, Interner& in) {
  while (!side.is_gen()) {
    other = in.make(std::move(other), side.exponent(), flip(side.dir()));
    Term next = side.base();
    side = std::move(next);
  }
  return {side.name(), std::move(other)};
}

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t i = 0;
  std::size_t j = w.size();
  while (j - i >= 2 && w[i].gen == w[j - 1].gen && w[i].exp == -w[j - 1].exp) {
    ++i;
    --j;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j));
}

Word substitute_word(const Word& w, const std::string& g, const Word& value) {
  Word out;
  out.reserve(w.size());
  Word inv;
  bool have_inv = false;
  for (const Letter& l : w) {
    if (l.gen != g) {
      out.push_back(l);
    } else if (l.exp > 0) {
      out.insert(out.end(), value.begin(), value.end());
    } else {
      if (!have_inv) {
        inv = inverse(value);
        have_inv = true;
      }
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

void erase_generator(Presentation& p, const std::string& g) {
  p.generators.erase(std::remove(p.generators.begin(), p.generators.end(), g), p.generators.end());
}

// Moves meridian tags from `from` to `to` (or drops them when `to` is empty).
void retag(Presentation& p, const std::string& from, const std::string& to) {
  for (auto it = p.meridians.begin(); it != p.meridians.end();) {
    if (it->second == from) {
      if (to.empty()) {
        it = p.meridians.erase(it);
        continue;
      }
      it->second = to;
    }
    ++it;
  }
}

bool is_meridian(const Presentation& p, const std::string& g) {
  return std::any_of(p.meridians.begin(), p.meridians.end(), [&](const auto& kv) { return kv.second == g; });
}

// With an explicit keep set only those generators are protected; otherwise
// meridians may only be replaced by another generator.
bool may_eliminate(const Presentation& p, const SimplifyOptions& options, const std::string& g, bool by_generator) {
  if (!options.keep.empty()) return !options.keep.count(g);
  return by_generator || !is_meridian(p, g);
}

struct Candidate {
  std::string gen;
  Count occurrences = 0;
  int side = 0;  // 0 when g stands on the left of its relation
  std::uint64_t cost = 0;
  std::size_t relation = 0;
};

bool better(const Candidate& a, const Candidate& b) {
  return std::tie(a.occurrences, a.side, a.gen, a.cost, a.relation) < std::tie(b.occurrences, b.side, b.gen, b.cost, b.relation);
}

Presentation simplify_quandle(Presentation p, const SimplifyOptions& options) {
  Interner in;
  auto rels = p.quandle_relations();

  while (true) {
    // Normalize and drop tautologies.
    {
      Normalizer norm(in);
      std::vector<TermRelation> kept;
      for (auto& r : rels) {
        TermRelation n{norm.run(r.lhs), norm.run(r.rhs)};
        if (!(n.lhs == n.rhs)) kept.push_back(std::move(n));
      }
      rels = std::move(kept);
    }

    std::vector<const Term*> roots;
    for (const auto& r : rels) {
      roots.push_back(&r.lhs);
      roots.push_back(&r.rhs);
    }
    const auto occ = occurrences(roots);

    std::optional<Candidate> best;
    std::optional<Term> best_value;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      for (int side = 0; side < 2; ++side) {
        const Term& a = side == 0 ? rels[i].lhs : rels[i].rhs;
        const Term& b = side == 0 ? rels[i].rhs : rels[i].lhs;
        // value carries the peeled exponents, so this also rules out g
        // occurring twice on its own side.
        auto [g, value] = peel(a, b, in);
        if (mentions(value, g)) continue;
        if (!may_eliminate(p, options, g, value.is_gen())) continue;
        Candidate c{g, occ.count(g) ? occ.at(g) : 0, side, value.size(), i};
        if (!best || better(c, *best)) {
          best = c;
          best_value = value;
        }
      }
    }
    if (!best) break;

    const std::string g = best->gen;
    std::map<std::string, Term> values{{g, *best_value}};
    Substituter sub(in, values);
    std::vector<TermRelation> next;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (i == best->relation) continue;
      next.push_back(TermRelation{sub.run(rels[i].lhs), sub.run(rels[i].rhs)});
    }
    rels = std::move(next);
    erase_generator(p, g);
    if (best_value->is_gen()) {
      retag(p, g, best_value->name());
    } else {
      retag(p, g, "");
    }
  }
  // Solved form: a relation between two compound terms is rewritten as
  // g = T by peeling its right side.
  for (auto& r : rels) {
    if (r.lhs.is_gen() || r.rhs.is_gen()) continue;
    auto [g, value] = peel(r.rhs, r.lhs, in);
    Normalizer norm(in);
    r = TermRelation{Term::gen(g), norm.run(value)};
  }
  p.relations = std::move(rels);
  return p;
}

Presentation simplify_group(Presentation p, const SimplifyOptions& options) {
  auto rels = p.group_relations();
  for (auto& r : rels) {
    r.lhs = free_reduce(r.lhs);
    r.rhs = free_reduce(r.rhs);
  }
  std::set<std::string> blocked;  // eliminations refused by the growth guard

  while (true) {
    std::vector<WordRelation> kept;
    for (auto& r : rels) {
      if (!cyclic_reduce(concat(r.lhs, inverse(r.rhs))).empty()) kept.push_back(std::move(r));
    }
    rels = std::move(kept);

    std::map<std::string, Count> occ;
    for (const auto& r : rels) {
      for (const Letter& l : r.lhs) ++occ[l.gen];
      for (const Letter& l : r.rhs) ++occ[l.gen];
    }

    std::optional<Candidate> best;
    Word best_value;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const Word rel = free_reduce(concat(rels[i].lhs, inverse(rels[i].rhs)));
      std::map<std::string, std::size_t> local;
      for (const Letter& l : rel) ++local[l.gen];
      for (const auto& [g, n] : local) {
        if (n != 1 || blocked.count(g)) continue;
        std::size_t at = 0;
        while (rel[at].gen != g) ++at;
        const Word u(rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(at));
        const Word v(rel.begin() + static_cast<std::ptrdiff_t>(at) + 1, rel.end());
        // u g^e v = 1
        Word value = rel[at].exp > 0 ? free_reduce(concat(inverse(u), inverse(v))) : free_reduce(concat(v, u));
        const bool plain = value.size() == 1 && value[0].exp == 1;
        if (!may_eliminate(p, options, g, plain)) continue;
        const bool left = std::any_of(rels[i].lhs.begin(), rels[i].lhs.end(), [&](const Letter& l) { return l.gen == g; });
        Candidate c{g, occ[g], left ? 0 : 1, value.size(), i};
        if (!best || better(c, *best)) {
          best = c;
          best_value = std::move(value);
        }
      }
    }
    if (!best) break;

    const std::string g = best->gen;
    std::vector<WordRelation> next;
    std::size_t total = 0;
    bool too_big = false;
    for (std::size_t i = 0; i < rels.size() && !too_big; ++i) {
      if (i == best->relation) continue;
      WordRelation r{substitute_word(rels[i].lhs, g, best_value), substitute_word(rels[i].rhs, g, best_value)};
      total += r.lhs.size() + r.rhs.size();
      too_big = total > options.max_word_letters;
      next.push_back(std::move(r));
    }
    if (too_big) {
      blocked.insert(g);
      continue;
    }
    rels = std::move(next);
    erase_generator(p, g);
    retag(p, g, best_value.size() == 1 && best_value[0].exp == 1 ? best_value[0].gen : "");
  }
  p.relations = std::move(rels);
  return p;
}

void require_declared(const Presentation& p, const std::string& g) {
  if (!p.has_generator(g)) throw ValidationError("unknown generator '" + g + "'");
}

}  // namespace

std::string to_string(Algebra a) { return a == Algebra::Group ? "group" : "quandle"; }

Algebra parse_algebra(std::string_view text) {
  if (text == "group") return Algebra::Group;
  if (text == "quandle") return Algebra::Quandle;
  throw ParseError("algebra must be 'group' or 'quandle'", 0);
}

const std::vector<TermRelation>& Presentation::quandle_relations() const {
  if (algebra() != Algebra::Quandle) throw ValidationError("not a quandle presentation");
  return std::get<0>(relations);
}

const std::vector<WordRelation>& Presentation::group_relations() const {
  if (algebra() != Algebra::Group) throw ValidationError("not a group presentation");
  return std::get<1>(relations);
}

std::size_t Presentation::relation_count() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, relations);
}

bool Presentation::has_generator(const std::string& g) const {
  return std::find(generators.begin(), generators.end(), g) != generators.end();
}

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!is_valid_name(g)) throw ValidationError("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw ValidationError("generator '" + g + "' declared twice");
  }
  std::set<std::string> used;
  if (algebra() == Algebra::Quandle) {
    for (const auto& r : quandle_relations()) {
      collect_names(r.lhs, used);
      collect_names(r.rhs, used);
    }
  } else {
    for (const auto& r : group_relations()) {
      for (const Letter& l : r.lhs) used.insert(l.gen);
      for (const Letter& l : r.rhs) used.insert(l.gen);
    }
  }
  for (const auto& g : used) {
    if (!seen.count(g)) throw ValidationError("relation uses undeclared generator '" + g + "'");
  }
  for (const auto& [c, g] : meridians) {
    if (!seen.count(g)) throw ValidationError("meridian of component " + std::to_string(c) + " is undeclared");
  }
}

std::string arc_generator(std::size_t component, std::size_t arc) {
  return "a" + std::to_string(component) + "_" + std::to_string(arc);
}

Presentation wirtinger(const CutDiagram& cd, Algebra algebra) {
  const Diagram& d = cd.diagram();
  const ArcDecomposition dec = decompose(cd);
  std::vector<std::string> names(dec.arcs.size());
  std::vector<std::size_t> first(d.component_count());
  for (std::size_t c = 0, at = 0; c < d.component_count(); ++c) {
    first[c] = at;
    for (std::size_t j = 0; j < dec.arcs_per_component[c]; ++j) names[at + j] = arc_generator(c, j);
    at += dec.arcs_per_component[c];
  }

  Presentation p;
  p.generators = names;
  p.provenance = serialize(cd);
  for (std::size_t c = 0; c < d.component_count(); ++c) p.meridians[c] = names[dec.base_arc[c]];

  std::vector<TermRelation> qrels;
  std::vector<WordRelation> grels;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    const Component& comp = d.component(c);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (comp[i].role != Role::Under) continue;
      const CrossingInfo& x = d.crossing(comp[i].crossing);
      const std::string& a = names[dec.arc_before[c][i]];
      const std::string& b = names[dec.arc_after[c][i]];
      const std::string& over = names[dec.arc_before[x.over.component][x.over.index]];
      // Positive: a = b^c. Negative: b = a^c.
      const bool positive = comp[i].sign == Sign::Plus;
      const std::string& lhs = positive ? a : b;
      const std::string& rhs = positive ? b : a;
      if (algebra == Algebra::Quandle) {
        qrels.push_back(TermRelation{Term::gen(lhs), Term::exp(Term::gen(rhs), Term::gen(over), ExpDir::Fwd)});
      } else {
        grels.push_back(WordRelation{{Letter{lhs, 1}}, free_reduce({Letter{over, 1}, Letter{rhs, 1}, Letter{over, -1}})});
      }
    }
  }
  if (algebra == Algebra::Quandle) {
    p.relations = std::move(qrels);
  } else {
    p.relations = std::move(grels);
  }
  return p;
}

Presentation wirtinger(const Diagram& d, Algebra algebra) {
  Presentation p = wirtinger(CutDiagram(d, {}), algebra);
  p.provenance = serialize(d);
  return p;
}

std::map<std::size_t, std::pair<std::string, std::string>> cut_generators(const CutDiagram& d) {
  const ArcDecomposition dec = decompose(d);
  std::vector<std::size_t> first(d.diagram().component_count());
  for (std::size_t c = 1; c < first.size(); ++c) first[c] = first[c - 1] + dec.arcs_per_component[c - 1];
  std::map<std::size_t, std::pair<std::string, std::string>> out;
  for (const auto& [c, ends] : dec.cut_arcs) {
    out[c] = {arc_generator(c, ends.first - first[c]), arc_generator(c, ends.second - first[c])};
  }
  return out;
}

Word term_to_word(const Term& t) {
  constexpr std::uint64_t limit = 50'000'000;
  if (t.size() > limit) throw Error("term too large to expand into a group word");
  std::unordered_map<const void*, Word> memo;
  auto go = [&](auto&& self, const Term& u) -> Word {
    if (u.is_gen()) return {Letter{u.name(), 1}};
    if (auto it = memo.find(u.node_id()); it != memo.end()) return it->second;
    const Word base = self(self, u.base());
    const Word e = self(self, u.exponent());
    Word out = u.dir() == ExpDir::Fwd ? concat(concat(e, base), inverse(e)) : concat(concat(inverse(e), base), e);
    out = free_reduce(out);
    memo.emplace(u.node_id(), out);
    return out;
  };
  return go(go, t);
}

Presentation quandle_to_group(const Presentation& p) {
  Presentation out;
  out.generators = p.generators;
  out.meridians = p.meridians;
  out.provenance = p.provenance;
  std::vector<WordRelation> rels;
  for (const auto& r : p.quandle_relations()) rels.push_back(WordRelation{term_to_word(r.lhs), term_to_word(r.rhs)});
  out.relations = std::move(rels);
  return out;
}

Term normalize(const Term& t) {
  Interner in;
  return Normalizer(in).run(t);
}

Presentation simplify(const Presentation& p, const SimplifyOptions& options) {
  return p.algebra() == Algebra::Quandle ? simplify_quandle(p, options) : simplify_group(p, options);
}

Presentation kill_generator(const Presentation& p, const std::string& g) {
  if (p.algebra() != Algebra::Group) throw ValidationError("only group generators can be killed");
  require_declared(p, g);
  Presentation out = p;
  std::vector<WordRelation> rels;
  for (const auto& r : p.group_relations()) rels.push_back(WordRelation{substitute_word(r.lhs, g, {}), substitute_word(r.rhs, g, {})});
  out.relations = std::move(rels);
  erase_generator(out, g);
  retag(out, g, "");
  return out;
}

Presentation identify_generators(const Presentation& p, const std::string& keep, const std::string& drop) {
  require_declared(p, keep);
  require_declared(p, drop);
  if (keep == drop) return p;
  Presentation out = p;
  if (p.algebra() == Algebra::Quandle) {
    Interner in;
    std::map<std::string, Term> values{{drop, Term::gen(keep)}};
    Substituter sub(in, values);
    std::vector<TermRelation> rels;
    for (const auto& r : p.quandle_relations()) rels.push_back(TermRelation{sub.run(r.lhs), sub.run(r.rhs)});
    out.relations = std::move(rels);
  } else {
    const Word value{Letter{keep, 1}};
    std::vector<WordRelation> rels;
    for (const auto& r : p.group_relations()) rels.push_back(WordRelation{substitute_word(r.lhs, drop, value), substitute_word(r.rhs, drop, value)});
    out.relations = std::move(rels);
  }
  erase_generator(out, drop);
  retag(out, drop, keep);
  return out;
}

Presentation rename_generators(const Presentation& p, const std::map<std::string, std::string>& renaming) {
  auto name = [&](const std::string& g) {
    auto it = renaming.find(g);
    return it == renaming.end() ? g : it->second;
  };
  Presentation out = p;
  for (auto& g : out.generators) g = name(g);
  for (auto& [c, g] : out.meridians) g = name(g);
  if (p.algebra() == Algebra::Quandle) {
    Interner in;
    std::map<std::string, Term> values;
    for (const auto& [from, to] : renaming) values.emplace(from, Term::gen(to));
    Substituter sub(in, values);
    std::vector<TermRelation> rels;
    for (const auto& r : p.quandle_relations()) rels.push_back(TermRelation{sub.run(r.lhs), sub.run(r.rhs)});
    out.relations = std::move(rels);
  } else {
    auto rels = p.group_relations();
    for (auto& r : rels) {
      for (auto& l : r.lhs) l.gen = name(l.gen);
      for (auto& l : r.rhs) l.gen = name(l.gen);
    }
    out.relations = std::move(rels);
  }
  out.validate();
  return out;
}

Term substitute(const Term& t, const std::map<std::string, Term>& values) {
  Interner in;
  return Substituter(in, values).run(t);
}

namespace {

using Renaming = std::map<std::string, std::string>;

// Extends (fwd, back) so that t renames onto u; false leaves them dirty.
bool unify(const Term& t, const Term& u, Renaming& fwd, Renaming& back) {
  if (t.is_gen() != u.is_gen()) return false;
  if (t.is_gen()) {
    auto [it, fresh] = fwd.emplace(t.name(), u.name());
    if (!fresh) return it->second == u.name();
    auto [jt, fresh2] = back.emplace(u.name(), t.name());
    return fresh2 || jt->second == t.name();
  }
  return t.dir() == u.dir() && t.size() == u.size() && unify(t.base(), u.base(), fwd, back) &&
         unify(t.exponent(), u.exponent(), fwd, back);
}

bool unify(const Word& a, const Word& b, Renaming& fwd, Renaming& back) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].exp != b[i].exp) return false;
    auto [it, fresh] = fwd.emplace(a[i].gen, b[i].gen);
    if (!fresh && it->second != b[i].gen) return false;
    auto [jt, fresh2] = back.emplace(b[i].gen, a[i].gen);
    if (!fresh2 && jt->second != a[i].gen) return false;
  }
  return true;
}

template <typename Rel>
bool match_relations(const std::vector<Rel>& from, const std::vector<Rel>& to, std::size_t i, std::vector<bool>& used,
                     Renaming& fwd, Renaming& back) {
  if (i == from.size()) return true;
  for (std::size_t j = 0; j < to.size(); ++j) {
    if (used[j]) continue;
    Renaming f = fwd;
    Renaming b = back;
    if (unify(from[i].lhs, to[j].lhs, f, b) && unify(from[i].rhs, to[j].rhs, f, b)) {
      used[j] = true;
      if (match_relations(from, to, i + 1, used, f, b)) {
        fwd = std::move(f);
        back = std::move(b);
        return true;
      }
      used[j] = false;
    }
  }
  return false;
}

}  // namespace

std::optional<std::map<std::string, std::string>> find_renaming(const Presentation& from, const Presentation& to) {
  if (from.algebra() != to.algebra() || from.generators.size() != to.generators.size() ||
      from.relation_count() != to.relation_count()) {
    return std::nullopt;
  }
  Renaming fwd;
  Renaming back;
  std::vector<bool> used(to.relation_count(), false);
  const bool ok = from.algebra() == Algebra::Quandle
                      ? match_relations(from.quandle_relations(), to.quandle_relations(), 0, used, fwd, back)
                      : match_relations(from.group_relations(), to.group_relations(), 0, used, fwd, back);
  if (!ok) return std::nullopt;
  // Generators absent from every relation pair up in declaration order.
  std::vector<std::string> free_to;
  for (const auto& g : to.generators) {
    if (!back.count(g)) free_to.push_back(g);
  }
  std::size_t k = 0;
  for (const auto& g : from.generators) {
    if (fwd.count(g)) continue;
    if (k >= free_to.size()) return std::nullopt;
    fwd[g] = free_to[k++];
  }
  return fwd;
}

Presentation make_presentation(Algebra algebra, std::vector<std::string> generators,
                               const std::vector<std::string>& relations, std::string provenance) {
  Presentation p;
  p.generators = std::move(generators);
  p.provenance = std::move(provenance);
  std::vector<TermRelation> q;
  std::vector<WordRelation> g;
  for (const auto& r : relations) {
    const auto eq = r.find('=');
    if (eq == std::string::npos || r.find('=', eq + 1) != std::string::npos) {
      throw ParseError("relation must contain exactly one '='", eq == std::string::npos ? r.size() : r.find('=', eq + 1));
    }
    const std::string_view text(r);
    if (algebra == Algebra::Quandle) {
      q.push_back(TermRelation{parse_term(text.substr(0, eq)), parse_term(text.substr(eq + 1))});
    } else {
      g.push_back(WordRelation{parse_word(text.substr(0, eq)), parse_word(text.substr(eq + 1))});
    }
  }
  if (algebra == Algebra::Quandle) {
    p.relations = std::move(q);
  } else {
    p.relations = std::move(g);
  }
  p.validate();
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  os << to_string(p.algebra()) << " <";
  for (std::size_t i = 0; i < p.generators.size(); ++i) os << (i ? ", " : " ") << p.generators[i];
  os << " |";
  bool first = true;
  auto sep = [&] {
    os << (first ? " " : ", ");
    first = false;
  };
  if (p.algebra() == Algebra::Quandle) {
    for (const auto& r : p.quandle_relations()) {
      sep();
      os << print_term(r.lhs) << " = " << print_term(r.rhs);
    }
  } else {
    for (const auto& r : p.group_relations()) {
      sep();
      os << print_word(r.lhs) << " = " << print_word(r.rhs);
    }
  }
  os << " >";
  if (!p.meridians.empty()) {
    os << "\nmeridians:";
    for (const auto& [c, g] : p.meridians) os << ' ' << c << '=' << g;
  }
  return os.str();
}

}  // namespace vdouble
