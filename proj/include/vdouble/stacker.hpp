#ifndef VDOUBLE_STACKER_HPP
#define VDOUBLE_STACKER_HPP

#include <string_view>
#include <utility>
#include <vector>

#include "vdouble/diagram.hpp"

namespace vdouble {

struct Presentation;

// Layer pattern of a stack: bit 1 is a copy of L, bit 0 a copy of its
// vertical mirror. The top layer is always L itself.
class StackPattern {
 public:
  explicit StackPattern(std::vector<bool> bits);

  // Parses strings such as "101".
  static StackPattern parse(std::string_view text);

  const std::vector<bool>& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool mirrored(std::size_t layer) const { return !bits_.at(layer); }
  std::string str() const;

 private:
  std::vector<bool> bits_;
};

// Layers stacked top to bottom. Output component k*m + c is layer k's copy of
// input component c; mirrored layers are orientation-reversed. Each input
// crossing becomes a grid of n*n crossings, and between different layers the
// higher one is always over.
Diagram stack(const StackPattern& pattern, const Diagram& d);

// stack("10", d).
Diagram vertical_double(const Diagram& d);

// Marks cut slots; no crossing is removed.
CutDiagram cut(const Diagram& d, const std::vector<Gap>& cuts);

// The slot of every layer's copy lying over gap g of the input, so a cut on
// the stacked diagram passes through all layers at one point of the projection.
std::vector<Gap> corresponding_gaps(const StackPattern& pattern, const Diagram& d, Gap g);

// The group and quandle presentations of TSpun(d). TSpun preserves both, so
// these are the presentations of d relabeled; as a consequence the presentations
// of TSpun(VD(d)) and VD(TSpun(d)) coincide.
std::pair<Presentation, Presentation> tspun_presentations(const Diagram& d);

}  // namespace vdouble

#endif  // VDOUBLE_STACKER_HPP
