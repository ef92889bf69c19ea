#include "vdouble/homcount.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "vdouble/error.hpp"

namespace vdouble {

namespace {

constexpr int kNoLevel = -1;

struct OpNode {
  std::size_t base = 0;
  std::size_t exponent = 0;
  ExpDir dir = ExpDir::Fwd;
};

struct SignedSlot {
  std::size_t slot = 0;
  int exp = 1;
};

// A relation lowered to slots. Quandle relations compare two slots; group
// relations compare two products of signed generator slots.
struct LoweredRelation {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  std::vector<SignedSlot> lhs_word;
  std::vector<SignedSlot> rhs_word;
};

struct Level {
  std::vector<std::size_t> nodes;     // op nodes completed at this level
  std::vector<std::size_t> checks;    // relations completed at this level
  std::optional<std::size_t> forced;  // relation index used as a definition
};

// Slots 0..n-1 hold generators in search order; quandle op nodes follow.
class Program {
 public:
  Program(const Presentation& p, bool include_unused, bool use_forcing) : algebra_(p.algebra()) {
    std::unordered_map<std::string, std::size_t> declared;
    for (std::size_t i = 0; i < p.generators.size(); ++i) declared.emplace(p.generators[i], i);

    std::vector<bool> used(p.generators.size(), false);
    auto mark = [&](const std::string& g) {
      auto it = declared.find(g);
      if (it == declared.end()) throw ValidationError("relation uses undeclared generator '" + g + "'");
      used[it->second] = true;
    };
    if (algebra_ == Algebra::Quandle) {
      for (const auto& r : p.quandle_relations()) {
        for (const Term* t : {&r.lhs, &r.rhs}) walk(*t, [&](const Term& u) { mark(u.name()); });
      }
    } else {
      for (const auto& r : p.group_relations()) {
        for (const auto& l : r.lhs) mark(l.gen);
        for (const auto& l : r.rhs) mark(l.gen);
      }
    }
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      if (used[i] || include_unused) {
        slot_of_.emplace(p.generators[i], order_.size());
        order_.push_back(i);
        unused_.push_back(!used[i]);
      } else {
        ++skipped_;
      }
    }
    const std::size_t n = order_.size();
    levels_.resize(n);
    level_of_.assign(n, kNoLevel);
    for (std::size_t i = 0; i < n; ++i) level_of_[i] = static_cast<int>(i);

    if (algebra_ == Algebra::Quandle) {
      lower_quandle(p.quandle_relations(), use_forcing);
    } else {
      lower_group(p.group_relations(), use_forcing);
    }
  }

  std::size_t generator_count() const noexcept { return order_.size(); }
  std::size_t skipped() const noexcept { return skipped_; }
  std::size_t slot_count() const noexcept { return level_of_.size(); }
  bool unused(std::size_t pos) const { return unused_[pos]; }
  std::size_t declared_index(std::size_t pos) const { return order_[pos]; }
  const Level& level(std::size_t pos) const { return levels_[pos]; }
  const std::vector<std::size_t>& initial_checks() const noexcept { return initial_checks_; }
  const std::vector<OpNode>& ops() const noexcept { return ops_; }
  std::size_t first_op() const noexcept { return order_.size(); }
  const LoweredRelation& relation(std::size_t i) const { return rels_[i]; }

  std::size_t branching() const {
    std::size_t b = 0;
    for (const Level& l : levels_) b += l.forced ? 0 : 1;
    return b;
  }

 private:
  template <typename F>
  static void walk(const Term& t, F&& on_gen) {
    std::vector<const Term*> stack{&t};
    std::unordered_map<const void*, bool> seen;
    while (!stack.empty()) {
      const Term* u = stack.back();
      stack.pop_back();
      if (!seen.emplace(u->node_id(), true).second) continue;
      if (u->is_gen()) {
        on_gen(*u);
      } else {
        stack.push_back(&u->base());
        stack.push_back(&u->exponent());
      }
    }
  }

  // Slot for a term, creating op nodes bottom-up.
  std::size_t lower(const Term& t) {
    if (t.is_gen()) return slot_of_.at(t.name());
    if (auto it = memo_.find(t.node_id()); it != memo_.end()) return it->second;
    const std::size_t b = lower(t.base());
    const std::size_t e = lower(t.exponent());
    const std::size_t slot = level_of_.size();
    ops_.push_back(OpNode{b, e, t.dir()});
    level_of_.push_back(std::max(level_of_[b], level_of_[e]));
    if (level_of_.back() != kNoLevel) levels_[static_cast<std::size_t>(level_of_.back())].nodes.push_back(slot);
    pinned_.push_back(t);
    memo_.emplace(t.node_id(), slot);
    return slot;
  }

  void place(std::size_t rel, int level) {
    if (level == kNoLevel) {
      initial_checks_.push_back(rel);
    } else {
      levels_[static_cast<std::size_t>(level)].checks.push_back(rel);
    }
  }

  void lower_quandle(const std::vector<TermRelation>& rels, bool use_forcing) {
    for (const auto& r : rels) {
      TermRelation rel = r;
      bool forced = false;
      if (use_forcing) {
        // Try to isolate the highest generator: s^u = R becomes s = R^~u.
        const int top = std::max(level_of_[lower(r.lhs)], level_of_[lower(r.rhs)]);
        for (int side = 0; side < 2 && !forced; ++side) {
          Term a = side == 0 ? r.lhs : r.rhs;
          Term b = side == 0 ? r.rhs : r.lhs;
          while (!a.is_gen()) {
            b = Term::exp(std::move(b), a.exponent(), flip(a.dir()));
            Term next = a.base();
            a = std::move(next);
          }
          const std::size_t gslot = slot_of_.at(a.name());
          if (static_cast<int>(gslot) != top || levels_[gslot].forced) continue;
          const std::size_t rest = lower(b);
          if (level_of_[rest] >= top) continue;
          rel = TermRelation{a, b};
          forced = true;
        }
      }
      LoweredRelation lr;
      lr.lhs = lower(rel.lhs);
      lr.rhs = lower(rel.rhs);
      const std::size_t idx = rels_.size();
      rels_.push_back(lr);
      const int lvl = std::max(level_of_[lr.lhs], level_of_[lr.rhs]);
      if (forced) {
        levels_[static_cast<std::size_t>(lvl)].forced = idx;
      } else {
        place(idx, lvl);
      }
    }
  }

  std::vector<SignedSlot> lower_word(const Word& w) const {
    std::vector<SignedSlot> out;
    for (const auto& l : w) out.push_back(SignedSlot{slot_of_.at(l.gen), l.exp});
    return out;
  }

  void lower_group(const std::vector<WordRelation>& rels, bool use_forcing) {
    for (const auto& r : rels) {
      const Word rel = free_reduce(concat(r.lhs, inverse(r.rhs)));
      int top = kNoLevel;
      for (const auto& l : rel) top = std::max(top, static_cast<int>(slot_of_.at(l.gen)));
      LoweredRelation lr;
      bool forced = false;
      if (use_forcing && top != kNoLevel && !levels_[static_cast<std::size_t>(top)].forced) {
        std::size_t hits = 0;
        std::size_t at = 0;
        for (std::size_t i = 0; i < rel.size(); ++i) {
          if (static_cast<int>(slot_of_.at(rel[i].gen)) == top) {
            ++hits;
            at = i;
          }
        }
        if (hits == 1) {
          const Word u(rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(at));
          const Word v(rel.begin() + static_cast<std::ptrdiff_t>(at) + 1, rel.end());
          // u g^e v = 1
          const Word value = rel[at].exp > 0 ? concat(inverse(u), inverse(v)) : concat(v, u);
          lr.lhs_word = lower_word({Letter{rel[at].gen, 1}});
          lr.rhs_word = lower_word(value);
          forced = true;
        }
      }
      if (!forced) {
        lr.lhs_word = lower_word(rel);
      }
      const std::size_t idx = rels_.size();
      rels_.push_back(std::move(lr));
      if (forced) {
        levels_[static_cast<std::size_t>(top)].forced = idx;
      } else {
        place(idx, top);
      }
    }
  }

  Algebra algebra_;
  std::vector<std::size_t> order_;
  std::vector<bool> unused_;
  std::size_t skipped_ = 0;
  std::unordered_map<std::string, std::size_t> slot_of_;
  std::vector<int> level_of_;
  std::vector<Level> levels_;
  std::vector<std::size_t> initial_checks_;
  std::vector<OpNode> ops_;
  std::vector<LoweredRelation> rels_;
  std::unordered_map<const void*, std::size_t> memo_;
  std::vector<Term> pinned_;
};

// Target-specific evaluation over a slot array.
struct QuandleEval {
  const FiniteQuandle& q;

  std::size_t size() const { return q.size(); }
  void run_nodes(const Program& prog, const Level& lvl, std::vector<Element>& v) const {
    const std::size_t first = prog.first_op();
    for (std::size_t slot : lvl.nodes) {
      const OpNode& op = prog.ops()[slot - first];
      v[slot] = op.dir == ExpDir::Fwd ? q.op(v[op.base], v[op.exponent]) : q.inv_op(v[op.base], v[op.exponent]);
    }
  }
  Element forced_value(const Program& prog, std::size_t rel, const std::vector<Element>& v) const {
    return v[prog.relation(rel).rhs];
  }
  bool holds(const Program& prog, std::size_t rel, const std::vector<Element>& v) const {
    const auto& r = prog.relation(rel);
    return v[r.lhs] == v[r.rhs];
  }
};

struct GroupEval {
  const FiniteGroup& g;

  std::size_t size() const { return g.size(); }
  void run_nodes(const Program&, const Level&, std::vector<Element>&) const {}
  Element product(const std::vector<SignedSlot>& w, const std::vector<Element>& v) const {
    Element acc = g.identity();
    for (const auto& l : w) acc = g.mul(acc, l.exp > 0 ? v[l.slot] : g.inv(v[l.slot]));
    return acc;
  }
  Element forced_value(const Program& prog, std::size_t rel, const std::vector<Element>& v) const {
    return product(prog.relation(rel).rhs_word, v);
  }
  bool holds(const Program& prog, std::size_t rel, const std::vector<Element>& v) const {
    const auto& r = prog.relation(rel);
    return product(r.lhs_word, v) == g.identity();
  }
};

template <typename Eval>
class Counter {
 public:
  Counter(const Program& prog, const Eval& eval) : prog_(prog), eval_(eval) {}

  // Counts completions once positions [0, pos) are assigned in v.
  std::uint64_t count(std::size_t pos, std::vector<Element>& v) const {
    if (pos == prog_.generator_count()) return 1;
    const Level& lvl = prog_.level(pos);
    if (lvl.forced) {
      v[pos] = eval_.forced_value(prog_, *lvl.forced, v);
      return settle(pos, v) ? count(pos + 1, v) : 0;
    }
    std::uint64_t total = 0;
    for (Element x = 0; x < eval_.size(); ++x) {
      v[pos] = x;
      if (settle(pos, v)) total += count(pos + 1, v);
    }
    return total;
  }

  std::uint64_t count_with_first(Element x, std::vector<Element>& v) const {
    v[0] = x;
    return settle(0, v) ? count(1, v) : 0;
  }

  bool settle(std::size_t pos, std::vector<Element>& v) const {
    const Level& lvl = prog_.level(pos);
    eval_.run_nodes(prog_, lvl, v);
    for (std::size_t rel : lvl.checks) {
      if (!eval_.holds(prog_, rel, v)) return false;
    }
    return true;
  }

  bool initial_ok(const std::vector<Element>& v) const {
    for (std::size_t rel : prog_.initial_checks()) {
      if (!eval_.holds(prog_, rel, v)) return false;
    }
    return true;
  }

 private:
  const Program& prog_;
  const Eval& eval_;
};

mpz_class pow_size(std::size_t base, std::size_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

void check_kinds(const Presentation& p, const FiniteTarget& t) {
  if (p.algebra() != target_algebra(t)) {
    throw ValidationError("cannot count " + to_string(p.algebra()) + " homomorphisms into " + to_string(target_algebra(t)) +
                          " target " + target_name(t));
  }
}

void guard(double nodes, const CountOptions& options) {
  if (!options.force && nodes > options.node_guard) {
    std::ostringstream os;
    os << "search would visit about " << std::setprecision(3) << nodes << " nodes; simplify first or pass --force";
    throw SearchTooLarge(os.str());
  }
}

template <typename Eval>
mpz_class run_count(const Program& prog, const Eval& eval, const CountOptions& options) {
  const Counter<Eval> counter(prog, eval);
  std::vector<Element> v(prog.slot_count(), 0);
  if (!counter.initial_ok(v)) return 0;
  const std::size_t n = prog.generator_count();
  mpz_class total;
  if (n == 0) {
    total = 1;
  } else if (options.threads <= 1 || prog.level(0).forced) {
    total = mpz_class(std::to_string(counter.count(0, v)));
  } else {
    const std::size_t size = eval.size();
    const unsigned workers = std::min<unsigned>(options.threads, static_cast<unsigned>(size));
    std::vector<std::uint64_t> partial(size, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        std::vector<Element> local(prog.slot_count(), 0);
        for (std::size_t x = w; x < size; x += workers) partial[x] = counter.count_with_first(static_cast<Element>(x), local);
      });
    }
    for (auto& th : pool) th.join();
    for (std::uint64_t c : partial) total += mpz_class(std::to_string(c));
  }
  return total * pow_size(eval.size(), prog.skipped());
}

template <typename Eval>
std::optional<std::vector<Element>> run_violation(const Program& prog, const Eval& eval, std::size_t declared) {
  const Counter<Eval> counter(prog, eval);
  std::vector<Element> v(prog.slot_count(), 0);
  auto result = [&](std::size_t upto) {
    std::vector<Element> out(declared, 0);
    for (std::size_t pos = 0; pos < upto; ++pos) out[prog.declared_index(pos)] = v[pos];
    return out;
  };
  if (!counter.initial_ok(v)) return result(0);
  const std::size_t n = prog.generator_count();
  std::optional<std::vector<Element>> found;
  auto dfs = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == n) return false;
    const Element top = prog.unused(pos) ? 1 : static_cast<Element>(eval.size());
    for (Element x = 0; x < top; ++x) {
      v[pos] = x;
      if (!counter.settle(pos, v)) {
        found = result(pos + 1);
        return true;
      }
      if (self(self, pos + 1)) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

}  // namespace

double estimated_nodes(const Presentation& p, std::size_t target_size) {
  const Program prog(p, false, true);
  return std::pow(static_cast<double>(target_size), static_cast<double>(prog.branching()));
}

mpz_class count_homs(const Presentation& p, const FiniteTarget& t, const CountOptions& options) {
  check_kinds(p, t);
  const Program prog(p, false, true);
  guard(std::pow(static_cast<double>(target_size(t)), static_cast<double>(prog.branching())), options);
  if (const auto* q = std::get_if<FiniteQuandle>(&t)) return run_count(prog, QuandleEval{*q}, options);
  return run_count(prog, GroupEval{std::get<FiniteGroup>(t)}, options);
}

std::optional<std::vector<Element>> find_violation(const Presentation& p, const FiniteTarget& t, const CountOptions& options) {
  check_kinds(p, t);
  const Program prog(p, true, false);
  std::size_t branching = 0;
  for (std::size_t i = 0; i < prog.generator_count(); ++i) branching += prog.unused(i) ? 0 : 1;
  guard(std::pow(static_cast<double>(target_size(t)), static_cast<double>(branching)), options);
  if (const auto* q = std::get_if<FiniteQuandle>(&t)) return run_violation(prog, QuandleEval{*q}, p.generators.size());
  return run_violation(prog, GroupEval{std::get<FiniteGroup>(t)}, p.generators.size());
}

std::vector<std::pair<std::string, mpz_class>> CountReport::counts() const {
  std::vector<std::pair<std::string, mpz_class>> out;
  for (const auto& e : entries) {
    if (e.count) out.emplace_back(e.target, *e.count);
  }
  return out;
}

CountReport battery_report(const Presentation& p, const std::vector<std::string>& battery, const CountOptions& options) {
  CountReport report;
  report.presentation = p.provenance;
  for (const auto& spec : battery) {
    BatteryEntry e;
    e.target = spec;
    const auto start = std::chrono::steady_clock::now();
    const FiniteTarget t = parse_target(spec);
    if (target_algebra(t) != p.algebra()) {
      e.note = "skipped: " + to_string(target_algebra(t)) + " target";
    } else {
      e.count = count_homs(p, t, options);
    }
    e.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    report.entries.push_back(std::move(e));
  }
  return report;
}

CountReport battery_report(const Presentation& quandle, const Presentation& group, const std::vector<std::string>& battery,
                           const CountOptions& options) {
  if (quandle.algebra() != Algebra::Quandle || group.algebra() != Algebra::Group) {
    throw ValidationError("battery_report expects a quandle and a group presentation");
  }
  CountReport report;
  report.presentation = quandle.provenance;
  for (const auto& spec : battery) {
    BatteryEntry e;
    e.target = spec;
    const auto start = std::chrono::steady_clock::now();
    const FiniteTarget t = parse_target(spec);
    e.count = count_homs(target_algebra(t) == Algebra::Quandle ? quandle : group, t, options);
    e.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    report.entries.push_back(std::move(e));
  }
  return report;
}

bool same_counts(const CountReport& a, const CountReport& b) {
  std::size_t shared = 0;
  for (const auto& ea : a.entries) {
    if (!ea.count) continue;
    for (const auto& eb : b.entries) {
      if (eb.target != ea.target || !eb.count) continue;
      if (*ea.count != *eb.count) return false;
      ++shared;
    }
  }
  return shared > 0;
}

std::string format_report(const CountReport& r) {
  std::size_t width = 6;
  for (const auto& e : r.entries) width = std::max(width, e.target.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "target" << "  count\n";
  for (const auto& e : r.entries) {
    os << std::left << std::setw(static_cast<int>(width)) << e.target << "  ";
    if (e.count) {
      os << e.count->get_str();
    } else {
      os << "-  (" << e.note << ")";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace vdouble
