#ifndef VDOUBLE_DIAGRAM_HPP
#define VDOUBLE_DIAGRAM_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vdouble {

enum class Role : std::uint8_t { Over, Under };
enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

constexpr Role opposite(Role r) noexcept { return r == Role::Over ? Role::Under : Role::Over; }
constexpr Sign operator-(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::Plus : Sign::Minus; }

using CrossingId = std::uint32_t;

// One pass of a component through a classical crossing.
struct Passage {
  CrossingId crossing = 0;
  Role role = Role::Over;
  Sign sign = Sign::Plus;

  friend bool operator==(const Passage&, const Passage&) = default;
};

// Cyclic sequence of passages; empty means a crossing-free circle.
using Component = std::vector<Passage>;

struct Location {
  std::size_t component = 0;
  std::size_t index = 0;

  friend bool operator==(const Location&, const Location&) = default;
};

// The slot immediately before passage `position` of `component`. Positions are
// taken modulo the component length, so `len` and `0` name the same slot.
struct Gap {
  std::size_t component = 0;
  std::size_t position = 0;

  friend bool operator==(const Gap&, const Gap&) = default;
};

struct CrossingInfo {
  Location over;
  Location under;
  Sign sign = Sign::Plus;

  friend bool operator==(const CrossingInfo&, const CrossingInfo&) = default;
};

// A virtual link diagram as a signed Gauss code. Virtual crossings are not
// recorded. Construction validates that every crossing id occurs exactly twice,
// once Over and once Under, with equal signs on both passages.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Component> components);

  const std::vector<Component>& components() const noexcept { return components_; }
  const Component& component(std::size_t c) const;
  std::size_t component_count() const noexcept { return components_.size(); }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }

  const std::map<CrossingId, CrossingInfo>& crossings() const noexcept { return crossings_; }
  const CrossingInfo& crossing(CrossingId id) const;
  const Passage& at(Location loc) const;
  CrossingId max_crossing_id() const noexcept;

  // Normalizes the position modulo the component length; throws on a bad index.
  Gap normalize(Gap g) const;

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.components_ == b.components_; }

 private:
  std::vector<Component> components_;
  std::map<CrossingId, CrossingInfo> crossings_;
};

// A diagram with cut marks in gaps, at most one per component. Cuts act as arc
// boundaries for the Wirtinger procedure.
class CutDiagram {
 public:
  CutDiagram() = default;
  CutDiagram(Diagram diagram, std::vector<Gap> cuts);

  const Diagram& diagram() const noexcept { return diagram_; }
  const std::vector<Gap>& cuts() const noexcept { return cuts_; }
  std::optional<std::size_t> cut_on(std::size_t component) const;

  friend bool operator==(const CutDiagram&, const CutDiagram&) = default;

 private:
  Diagram diagram_;
  std::vector<Gap> cuts_;  // sorted by component
};

// A generator of the Wirtinger procedure: a maximal stretch of a component
// between consecutive boundaries (Under passages or cut marks).
struct Arc {
  std::size_t id = 0;
  std::size_t component = 0;
  std::vector<std::size_t> overs;           // indices of Over passages carried
  std::optional<std::size_t> tail_under;    // Under passage the arc starts after
  std::optional<std::size_t> head_under;    // Under passage the arc ends at
  bool starts_at_cut = false;
  bool ends_at_cut = false;
};

struct ArcDecomposition {
  std::vector<Arc> arcs;
  // Per component and passage: the arc arriving at / leaving the passage.
  // They coincide for Over passages.
  std::vector<std::vector<std::size_t>> arc_before;
  std::vector<std::vector<std::size_t>> arc_after;
  // Arc through the basepoint (slot 0, or just after a cut at slot 0).
  std::vector<std::size_t> base_arc;
  // Arcs on each side of each cut, keyed by component: {ending, starting}.
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> cut_arcs;
  std::vector<std::size_t> arcs_per_component;
};

struct DiagramStats {
  std::size_t components = 0;
  std::size_t crossings = 0;
  std::vector<std::size_t> arcs_per_component;

  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

Diagram parse_diagram(std::string_view text);
std::string serialize(const Diagram& d);

// Cut diagrams use the Gauss-code grammar with an extra '!' item marking the
// cut slot, e.g. "O1+,!,O2+,U1+,U2+"; a cut crossing-free component is "!".
CutDiagram parse_cut_diagram(std::string_view text);
std::string serialize(const CutDiagram& d);

Diagram vertical_mirror(const Diagram& d);
Diagram reverse_component(const Diagram& d, std::size_t c);

ArcDecomposition decompose(const Diagram& d, std::span<const Gap> cuts = {});
ArcDecomposition decompose(const CutDiagram& d);
std::vector<Arc> arcs(const Diagram& d);
DiagramStats stats(const Diagram& d);

// Equality up to cyclic rotation of each component and renumbering of
// crossing ids. Exponential in the number of components; meant for tests.
bool same_up_to_relabeling(const Diagram& a, const Diagram& b);

}  // namespace vdouble

#endif  // VDOUBLE_DIAGRAM_HPP
