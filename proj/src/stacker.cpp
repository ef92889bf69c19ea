#include "vdouble/stacker.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "vdouble/error.hpp"
#include "vdouble/presenter.hpp"

namespace vdouble {

StackPattern::StackPattern(std::vector<bool> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw ValidationError("stack pattern must be nonempty");
  if (!bits_.front()) throw ValidationError("stack pattern must start with 1");
}

StackPattern StackPattern::parse(std::string_view text) {
  std::vector<bool> bits;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '1') {
      bits.push_back(true);
    } else if (ch == '0') {
      bits.push_back(false);
    } else if (ch == ',' || ch == ' ') {
      continue;
    } else {
      throw ParseError("stack pattern may contain only 0 and 1", i);
    }
  }
  return StackPattern(std::move(bits));
}

std::string StackPattern::str() const {
  std::string s;
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

Diagram stack(const StackPattern& pattern, const Diagram& d) {
  if (pattern.size() == 1) return d;
  const std::size_t n = pattern.size();
  const std::size_t m = d.component_count();
  // Grid crossing key: (input crossing, layer of its over strand, layer of its
  // under strand).
  using Key = std::tuple<CrossingId, std::size_t, std::size_t>;
  std::map<Key, CrossingId> ids;
  std::vector<Component> out;
  out.reserve(n * m);

  for (std::size_t layer = 0; layer < n; ++layer) {
    for (std::size_t c = 0; c < m; ++c) {
      Component seq;
      seq.reserve(d.component(c).size() * n);
      for (const Passage& p : d.component(c)) {
        // The layer copies of the partner strand are parallel pushoffs on one
        // side. Which side this strand meets first depends on the role and
        // sign of the input passage.
        const bool bottom_first = (p.role == Role::Under) == (p.sign == Sign::Plus);
        for (std::size_t t = 0; t < n; ++t) {
          const std::size_t partner = bottom_first ? n - 1 - t : t;
          const bool mine_is_over_strand = p.role == Role::Over;
          const std::size_t over_layer = mine_is_over_strand ? layer : partner;
          const std::size_t under_layer = mine_is_over_strand ? partner : layer;
          const bool original_order =
              over_layer == under_layer ? !pattern.mirrored(over_layer) : over_layer < under_layer;
          Sign sign = p.sign;
          if (!original_order) sign = -sign;
          if (pattern.mirrored(over_layer)) sign = -sign;
          if (pattern.mirrored(under_layer)) sign = -sign;
          const Role role = (mine_is_over_strand == original_order) ? Role::Over : Role::Under;
          const Key key{p.crossing, over_layer, under_layer};
          auto [it, fresh] = ids.emplace(key, 0);
          if (fresh) it->second = static_cast<CrossingId>(ids.size());
          seq.push_back(Passage{it->second, role, sign});
        }
      }
      if (pattern.mirrored(layer)) std::reverse(seq.begin(), seq.end());
      out.push_back(std::move(seq));
    }
  }
  // Ids were handed out in construction order; renumber by first appearance
  // in the final sequences so the output is canonical.
  std::map<CrossingId, CrossingId> renum;
  for (auto& comp : out) {
    for (auto& p : comp) {
      auto [it, fresh] = renum.emplace(p.crossing, 0);
      if (fresh) it->second = static_cast<CrossingId>(renum.size());
      p.crossing = it->second;
    }
  }
  return Diagram(std::move(out));
}

Diagram vertical_double(const Diagram& d) { return stack(StackPattern({true, false}), d); }

CutDiagram cut(const Diagram& d, const std::vector<Gap>& cuts) { return CutDiagram(d, cuts); }

std::vector<Gap> corresponding_gaps(const StackPattern& pattern, const Diagram& d, Gap g) {
  const Gap base = d.normalize(g);
  const std::size_t n = pattern.size();
  const std::size_t m = d.component_count();
  const std::size_t len = d.component(base.component).size();
  const std::size_t expanded = len * n;
  std::vector<Gap> out;
  for (std::size_t layer = 0; layer < n; ++layer) {
    const std::size_t pos = base.position * n;
    const std::size_t p = (pattern.mirrored(layer) && expanded > 0) ? (expanded - pos) % expanded : pos;
    out.push_back(Gap{layer * m + base.component, p});
  }
  return out;
}

std::pair<Presentation, Presentation> tspun_presentations(const Diagram& d) {
  Presentation group = wirtinger(d, Algebra::Group);
  Presentation quandle = wirtinger(d, Algebra::Quandle);
  group.provenance = "TSpun(" + group.provenance + ")";
  quandle.provenance = "TSpun(" + quandle.provenance + ")";
  return {std::move(group), std::move(quandle)};
}

}  // namespace vdouble
