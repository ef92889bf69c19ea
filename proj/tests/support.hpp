#ifndef VDOUBLE_TESTS_SUPPORT_HPP
#define VDOUBLE_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "vdouble/diagram.hpp"
#include "vdouble/homcount.hpp"
#include "vdouble/presenter.hpp"
#include "vdouble/stacker.hpp"

namespace support {

inline std::vector<std::string> counts_of(const vdouble::CountReport& r) {
  std::vector<std::string> out;
  for (const auto& [t, c] : r.counts()) out.push_back(t + "=" + c.get_str());
  return out;
}

// Quandle targets on Q(d), group targets on G(d).
inline std::vector<std::string> battery(const vdouble::Diagram& d,
                                        const std::vector<std::string>& targets = vdouble::default_battery()) {
  using namespace vdouble;
  return counts_of(battery_report(simplify(wirtinger(d, Algebra::Quandle)), simplify(wirtinger(d, Algebra::Group)), targets));
}

inline std::vector<std::string> vd_battery(const vdouble::Diagram& d,
                                           const std::vector<std::string>& targets = vdouble::default_battery()) {
  using namespace vdouble;
  const Diagram v = vertical_double(d);
  return counts_of(battery_report(simplify(wirtinger(v, Algebra::Quandle)), simplify(wirtinger(v, Algebra::Group)), targets));
}

}  // namespace support

#endif  // VDOUBLE_TESTS_SUPPORT_HPP
