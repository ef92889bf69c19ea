#include "vdouble/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "vdouble/error.hpp"

namespace vdouble {

namespace {

class GaussScanner {
 public:
  GaussScanner(std::string_view text, bool allow_cuts) : text_(text), allow_cuts_(allow_cuts) {}

  // Returns the components and, in cut mode, the cut slots found.
  std::pair<std::vector<Component>, std::vector<Gap>> run() {
    std::vector<Component> comps;
    std::vector<Gap> cuts;
    while (true) {
      comps.push_back(component(comps.size(), cuts));
      skip_ws();
      if (done()) break;
      expect(';');
    }
    return {std::move(comps), std::move(cuts)};
  }

 private:
  Component component(std::size_t index, std::vector<Gap>& cuts) {
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      return {};
    }
    Component comp;
    bool cut_here = false;
    while (true) {
      skip_ws();
      if (peek() == '!') {
        if (!allow_cuts_) fail("cut mark '!' not allowed in a plain diagram");
        if (cut_here) fail("two cut marks on one component");
        cut_here = true;
        cuts.push_back(Gap{index, comp.size()});
        ++pos_;
      } else {
        comp.push_back(passage());
      }
      skip_ws();
      if (peek() != ',') break;
      ++pos_;
    }
    return comp;
  }

  Passage passage() {
    Passage p;
    const char r = peek();
    if (r == 'O') {
      p.role = Role::Over;
    } else if (r == 'U') {
      p.role = Role::Under;
    } else {
      fail("expected 'O', 'U' or '*'");
    }
    ++pos_;
    skip_ws();
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected crossing number");
    std::uint64_t id = 0;
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      id = id * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (id > 0xffffffffu) {
        pos_ = start;
        fail("crossing number out of range");
      }
      ++pos_;
    }
    if (id == 0) {
      pos_ = start;
      fail("crossing number must be positive");
    }
    p.crossing = static_cast<CrossingId>(id);
    skip_ws();
    const char s = peek();
    if (s == '+') {
      p.sign = Sign::Plus;
    } else if (s == '-') {
      p.sign = Sign::Minus;
    } else {
      fail("expected '+' or '-'");
    }
    ++pos_;
    return p;
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  bool allow_cuts_;
  std::size_t pos_ = 0;
};

void write_passage(std::ostream& os, const Passage& p) {
  os << (p.role == Role::Over ? 'O' : 'U') << p.crossing << (p.sign == Sign::Plus ? '+' : '-');
}

std::string serialize_components(const Diagram& d, const CutDiagram* cut) {
  std::ostringstream os;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    if (c > 0) os << ';';
    const auto& comp = d.component(c);
    const auto cut_pos = cut ? cut->cut_on(c) : std::nullopt;
    if (comp.empty()) {
      os << (cut_pos ? "!" : "*");
      continue;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i > 0) os << ',';
      if (cut_pos && *cut_pos == i) os << "!,";
      write_passage(os, comp[i]);
    }
  }
  return os.str();
}

// Relabels crossings by first appearance, with a chosen rotation per component.
std::vector<Component> relabeled(const std::vector<Component>& comps, const std::vector<std::size_t>& rot) {
  std::map<CrossingId, CrossingId> ids;
  std::vector<Component> out;
  out.reserve(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& comp = comps[c];
    Component rc;
    rc.reserve(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      Passage p = comp[(i + rot[c]) % comp.size()];
      auto [it, inserted] = ids.emplace(p.crossing, static_cast<CrossingId>(ids.size() + 1));
      p.crossing = it->second;
      rc.push_back(p);
    }
    out.push_back(std::move(rc));
  }
  return out;
}

}  // namespace

Diagram::Diagram(std::vector<Component> components) : components_(std::move(components)) {
  struct Seen {
    std::optional<Location> over, under;
    Sign sign = Sign::Plus;
  };
  std::map<CrossingId, Seen> seen;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    for (std::size_t i = 0; i < components_[c].size(); ++i) {
      const Passage& p = components_[c][i];
      if (p.crossing == 0) throw ValidationError("crossing ids must be positive");
      auto [it, fresh] = seen.try_emplace(p.crossing);
      Seen& s = it->second;
      if (fresh) {
        s.sign = p.sign;
      } else if (s.sign != p.sign) {
        throw ValidationError("crossing " + std::to_string(p.crossing) + " has mismatched signs");
      }
      auto& slot = p.role == Role::Over ? s.over : s.under;
      if (slot) {
        throw ValidationError("crossing " + std::to_string(p.crossing) + " has two " +
                              (p.role == Role::Over ? "Over" : "Under") + " passages");
      }
      slot = Location{c, i};
    }
  }
  for (const auto& [id, s] : seen) {
    if (!s.over || !s.under) {
      throw ValidationError("crossing " + std::to_string(id) + " occurs only once");
    }
    crossings_.emplace(id, CrossingInfo{*s.over, *s.under, s.sign});
  }
}

const Component& Diagram::component(std::size_t c) const {
  if (c >= components_.size()) throw ValidationError("component index " + std::to_string(c) + " out of range");
  return components_[c];
}

const CrossingInfo& Diagram::crossing(CrossingId id) const {
  const auto it = crossings_.find(id);
  if (it == crossings_.end()) throw ValidationError("no crossing " + std::to_string(id));
  return it->second;
}

const Passage& Diagram::at(Location loc) const {
  const auto& comp = component(loc.component);
  if (loc.index >= comp.size()) throw ValidationError("passage index out of range");
  return comp[loc.index];
}

CrossingId Diagram::max_crossing_id() const noexcept {
  return crossings_.empty() ? 0 : crossings_.rbegin()->first;
}

Gap Diagram::normalize(Gap g) const {
  const auto& comp = component(g.component);
  if (comp.empty()) {
    if (g.position != 0) throw ValidationError("a crossing-free component has only gap 0");
    return g;
  }
  if (g.position > comp.size()) throw ValidationError("gap position out of range");
  return Gap{g.component, g.position % comp.size()};
}

CutDiagram::CutDiagram(Diagram diagram, std::vector<Gap> cuts) : diagram_(std::move(diagram)) {
  std::set<std::size_t> used;
  for (const Gap& g : cuts) {
    const Gap n = diagram_.normalize(g);
    if (!used.insert(n.component).second) {
      throw ValidationError("two cuts on component " + std::to_string(n.component));
    }
    cuts_.push_back(n);
  }
  std::sort(cuts_.begin(), cuts_.end(),
            [](const Gap& a, const Gap& b) { return a.component < b.component; });
}

std::optional<std::size_t> CutDiagram::cut_on(std::size_t component) const {
  for (const Gap& g : cuts_) {
    if (g.component == component) return g.position;
  }
  return std::nullopt;
}

Diagram parse_diagram(std::string_view text) {
  auto [comps, cuts] = GaussScanner(text, false).run();
  return Diagram(std::move(comps));
}

std::string serialize(const Diagram& d) { return serialize_components(d, nullptr); }

CutDiagram parse_cut_diagram(std::string_view text) {
  auto [comps, cuts] = GaussScanner(text, true).run();
  return CutDiagram(Diagram(std::move(comps)), std::move(cuts));
}

std::string serialize(const CutDiagram& d) { return serialize_components(d.diagram(), &d); }

Diagram vertical_mirror(const Diagram& d) {
  std::vector<Component> comps = d.components();
  for (auto& comp : comps) {
    for (auto& p : comp) {
      p.role = opposite(p.role);
      p.sign = -p.sign;
    }
  }
  return Diagram(std::move(comps));
}

Diagram reverse_component(const Diagram& d, std::size_t c) {
  d.component(c);  // range check
  std::vector<Component> comps = d.components();
  std::reverse(comps[c].begin(), comps[c].end());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (auto& p : comps[k]) {
      const CrossingInfo& info = d.crossing(p.crossing);
      const bool over_on_c = info.over.component == c;
      const bool under_on_c = info.under.component == c;
      if (over_on_c != under_on_c) p.sign = -p.sign;
    }
  }
  return Diagram(std::move(comps));
}

ArcDecomposition decompose(const Diagram& d, std::span<const Gap> cuts) {
  ArcDecomposition out;
  const std::size_t m = d.component_count();
  out.arc_before.resize(m);
  out.arc_after.resize(m);
  out.base_arc.resize(m);
  out.arcs_per_component.resize(m);

  std::vector<std::optional<std::size_t>> cut_slot(m);
  for (const Gap& g : cuts) {
    const Gap n = d.normalize(g);
    if (cut_slot[n.component]) throw ValidationError("two cuts on component " + std::to_string(n.component));
    cut_slot[n.component] = n.position;
  }

  for (std::size_t c = 0; c < m; ++c) {
    const Component& comp = d.component(c);
    const std::size_t len = comp.size();
    // Tour positions: slot p at 2p, passage p at 2p+1.
    std::vector<std::size_t> bounds;
    if (cut_slot[c]) bounds.push_back(2 * *cut_slot[c]);
    for (std::size_t p = 0; p < len; ++p) {
      if (comp[p].role == Role::Under) bounds.push_back(2 * p + 1);
    }
    std::sort(bounds.begin(), bounds.end());
    const std::size_t k = std::max<std::size_t>(1, bounds.size());
    const std::size_t first = out.arcs.size();
    out.arcs_per_component[c] = k;
    for (std::size_t j = 0; j < k; ++j) {
      Arc a;
      a.id = first + j;
      a.component = c;
      out.arcs.push_back(std::move(a));
    }
    // Local arc index of tour position t, counting boundaries in (0, t]
    // (inclusive) or (0, t) (exclusive).
    auto local = [&](std::size_t t, bool inclusive) {
      std::size_t cnt = 0;
      for (std::size_t b : bounds) {
        if (b > 0 && (b < t || (inclusive && b == t))) ++cnt;
      }
      return cnt % k;
    };
    out.base_arc[c] = first;
    out.arc_before[c].resize(len);
    out.arc_after[c].resize(len);
    for (std::size_t p = 0; p < len; ++p) {
      const std::size_t t = 2 * p + 1;
      const std::size_t before = first + local(t, false);
      const std::size_t after = first + local(t, true);
      out.arc_before[c][p] = before;
      out.arc_after[c][p] = after;
      if (comp[p].role == Role::Over) {
        out.arcs[before].overs.push_back(p);
      } else {
        out.arcs[before].head_under = p;
        out.arcs[after].tail_under = p;
      }
    }
    if (cut_slot[c]) {
      const std::size_t t = 2 * *cut_slot[c];
      const std::size_t ending = first + (t == 0 ? (k - 1) % k : local(t, false));
      const std::size_t starting = first + (t == 0 ? 0 : local(t, true));
      out.arcs[ending].ends_at_cut = true;
      out.arcs[starting].starts_at_cut = true;
      out.cut_arcs[c] = {ending, starting};
    }
  }
  return out;
}

ArcDecomposition decompose(const CutDiagram& d) { return decompose(d.diagram(), d.cuts()); }

std::vector<Arc> arcs(const Diagram& d) { return decompose(d).arcs; }

DiagramStats stats(const Diagram& d) {
  const auto dec = decompose(d);
  return DiagramStats{d.component_count(), d.crossing_count(), dec.arcs_per_component};
}

bool same_up_to_relabeling(const Diagram& a, const Diagram& b) {
  if (a.component_count() != b.component_count() || a.crossing_count() != b.crossing_count()) return false;
  const std::size_t m = a.component_count();
  for (std::size_t c = 0; c < m; ++c) {
    if (a.component(c).size() != b.component(c).size()) return false;
  }
  const auto target = relabeled(b.components(), std::vector<std::size_t>(m, 0));
  std::vector<std::size_t> rot(m, 0);
  while (true) {
    if (relabeled(a.components(), rot) == target) return true;
    std::size_t c = 0;
    for (; c < m; ++c) {
      const std::size_t len = a.component(c).size();
      if (++rot[c] < std::max<std::size_t>(len, 1)) break;
      rot[c] = 0;
    }
    if (c == m) return false;
  }
}

}  // namespace vdouble
