#ifndef VDOUBLE_REFERENCE_HPP
#define VDOUBLE_REFERENCE_HPP

// Fixtures, published presentations and expected values shared by the demo,
// the acceptance binary and the tests.

#include <string>
#include <vector>

#include "vdouble/presenter.hpp"
#include "vdouble/targets.hpp"

namespace vdouble::reference {

inline const std::string kUnknot = "*";
inline const std::string kVirtualTrefoil = "O1+,O2+,U1+,U2+";
inline const std::string kClassicalTrefoil = "O1+,U2+,O3+,U1+,O2+,U3+";
inline const std::string kKishino = "O1-,U4-,O3+,O4-,U3+,O2+,U1-,U2+";

// Cut position of the virtual trefoil used for the sphere spin: the gap
// between U1 and U2.
inline constexpr std::size_t kSpinGap = 3;

inline Presentation virtual_trefoil_quandle() {
  return make_presentation(Algebra::Quandle, {"x", "y"}, {"x = y^y", "y = x^y"}, "virtual trefoil");
}

inline Presentation vd_virtual_trefoil_quandle() {
  return make_presentation(Algebra::Quandle, {"x", "y", "A", "B", "C", "D", "E", "F"},
                           {"x = y^y", "y = x^y", "C = D^x", "C = B^A", "A = F^y", "E = F^y", "E = D^B", "B = A^y"},
                           "VD(virtual trefoil)");
}

inline Presentation vd_virtual_trefoil_reduced() {
  return make_presentation(Algebra::Quandle, {"x", "A"}, {"A = (((A^x)^A)^~x)^(A^x)"}, "VD(virtual trefoil), reduced");
}

inline Presentation spun_double_quandle() {
  return make_presentation(
      Algebra::Quandle, {"x", "y", "z", "A", "B", "C", "D", "E", "F", "G"},
      {"x = y^y", "y = z^y", "E = D^x", "E = F^A", "A = B^y", "C = B^y", "C = D^F", "F = G^y"},
      "VD(spun virtual trefoil)");
}

inline Presentation spun_double_reduced() {
  return make_presentation(Algebra::Quandle, {"x", "A", "G"}, {"A = (((G^x)^A)^~x)^(G^x)"}, "VD(spun virtual trefoil), reduced");
}

inline Presentation trefoil_group() {
  return make_presentation(Algebra::Group, {"A", "G"}, {"A*G*A = G*A*G"}, "trefoil group");
}

// x = [[x, y], [0, z]], A = [[a, b], [0, c]] with x = y = z = 1, a = 2, b = 0,
// c = 1.
inline MatrixAssignment witness_assignment() {
  return {{"x", Mat2{{Rational(1), Rational(1), Rational(0), Rational(1)}}},
          {"A", Mat2{{Rational(2), Rational(0), Rational(0), Rational(1)}}}};
}

inline constexpr long kWitnessLhsUpperRight = 0;
inline constexpr long kWitnessRhsUpperRight = -1;

// Exact counts from the acceptance table.
inline constexpr long kVirtualTrefoilS3 = 6;
inline constexpr long kVirtualTrefoilR3 = 3;
inline constexpr long kVdUnknotR3 = 9;
inline constexpr long kVdUnknotS3 = 36;
inline constexpr long kVdUnknotUt25 = 6400;
inline constexpr long kClassicalTrefoilR3 = 9;
inline constexpr long kVdClassicalTrefoilR3 = 81;
inline constexpr long kTrefoilGroupS3 = 12;
inline constexpr long kCyclicS3 = 6;
// Sym(3) counts of the virtual trefoil cut at gaps 0..3.
inline const std::vector<long> kCutS3{6, 12, 6, 6};

}  // namespace vdouble::reference

#endif  // VDOUBLE_REFERENCE_HPP
