#ifndef VDOUBLE_TARGETS_HPP
#define VDOUBLE_TARGETS_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vdouble/presenter.hpp"
#include "vdouble/term.hpp"

namespace vdouble {

using Element = std::uint32_t;

// Row-major n x n table with op(i, j) = i ▷ j, read as the term i^j.
class FiniteQuandle {
 public:
  FiniteQuandle(std::string name, std::size_t n, std::vector<Element> table);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return n_; }
  Element op(Element i, Element j) const { return table_[i * n_ + j]; }
  // The unique k with k ▷ j = i, read as i^~j.
  Element inv_op(Element i, Element j) const { return inv_[i * n_ + j]; }

 private:
  std::string name_;
  std::size_t n_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
};

class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::size_t n, std::vector<Element> table);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return n_; }
  Element mul(Element a, Element b) const { return table_[a * n_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element identity() const noexcept { return identity_; }
  bool abelian() const;

 private:
  std::string name_;
  std::size_t n_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  Element identity_ = 0;
};

using FiniteTarget = std::variant<FiniteQuandle, FiniteGroup>;

Algebra target_algebra(const FiniteTarget& t);
const std::string& target_name(const FiniteTarget& t);
std::size_t target_size(const FiniteTarget& t);

inline constexpr std::size_t kGroupCap = 1000;

FiniteQuandle dihedral_quandle(std::size_t n);
// i ▷ j = i on n points.
FiniteQuandle trivial_quandle(std::size_t n);
// a ▷ b = b a b^-1
FiniteQuandle conj_quandle(const FiniteGroup& g);

struct Sym { std::size_t n; };
struct UpperTriangular { std::uint32_t p; };
struct Cyclic { std::size_t n; };
// Symmetries of a regular n-gon, order 2n.
struct Dihedral { std::size_t n; };
using GroupKind = std::variant<Sym, UpperTriangular, Cyclic, Dihedral>;

// Closure of a generating set, indexed in breadth-first order from the
// identity. Throws ValidationError past kGroupCap elements.
FiniteGroup group_from_generators(const GroupKind& kind);

// r<n> dihedral quandle, s<n> symmetric group, d<m> dihedral group of order m,
// cyc:<n>, ut2:<p>, conj:<group spec>, triv:<n>.
FiniteTarget parse_target(std::string_view spec);

// Exact rationals.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

struct Mat2 {
  std::array<Rational, 4> e;  // a11 a12 a21 a22

  static Mat2 identity();
  Rational det() const;
  Mat2 inverse() const;  // throws Error when singular

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator-(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) { return x.e == y.e; }
};

std::string to_string(const Mat2& m);

using MatrixAssignment = std::map<std::string, Mat2>;
using ElementAssignment = std::map<std::string, Element>;

// t^u = u t u^-1, t^~u = u^-1 t u.
Mat2 eval_term(const Term& t, const MatrixAssignment& assign);
Element eval_term(const Term& t, const FiniteQuandle& q, const ElementAssignment& assign);
Element eval_word(const Word& w, const FiniteGroup& g, const ElementAssignment& assign);

struct RelationCheck {
  Mat2 lhs;
  Mat2 rhs;
  Mat2 delta;  // lhs - rhs
  bool holds = false;
};

struct WitnessReport {
  bool holds = true;
  std::vector<RelationCheck> relations;
};

WitnessReport witness_check(const Presentation& p, const MatrixAssignment& assign);

}  // namespace vdouble

#endif  // VDOUBLE_TARGETS_HPP
