#ifndef VDOUBLE_HOMCOUNT_HPP
#define VDOUBLE_HOMCOUNT_HPP

#include <gmpxx.h>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "vdouble/presenter.hpp"
#include "vdouble/targets.hpp"

namespace vdouble {

inline constexpr double kDefaultNodeGuard = 1e9;

struct CountOptions {
  // Refuse searches whose estimated node count exceeds node_guard.
  bool force = false;
  double node_guard = kDefaultNodeGuard;
  unsigned threads = 1;
};

// Number of homomorphisms p -> t. Generators are assigned in declaration
// order; a relation solved for its last generator fixes that generator's
// value, every other relation is checked as soon as it is fully assigned.
mpz_class count_homs(const Presentation& p, const FiniteTarget& t, const CountOptions& options = {});

// The lexicographically first assignment violating some relation, or none.
std::optional<std::vector<Element>> find_violation(const Presentation& p, const FiniteTarget& t,
                                                   const CountOptions& options = {});

// Estimated search nodes (|T| to the number of generators the search must
// branch on).
double estimated_nodes(const Presentation& p, std::size_t target_size);

inline const std::vector<std::string>& default_battery() {
  static const std::vector<std::string> b{"r3", "r5", "s3", "conj:s3", "ut2:3", "conj:ut2:3"};
  return b;
}

struct BatteryEntry {
  std::string target;
  std::optional<mpz_class> count;  // empty when skipped
  std::string note;
  std::chrono::microseconds elapsed{0};
};

struct CountReport {
  std::string presentation;
  std::vector<BatteryEntry> entries;

  // Counts of applicable targets only, in battery order.
  std::vector<std::pair<std::string, mpz_class>> counts() const;
};

CountReport battery_report(const Presentation& p, const std::vector<std::string>& battery = default_battery(),
                           const CountOptions& options = {});

// Quandle targets are counted on `quandle`, group targets on `group`.
CountReport battery_report(const Presentation& quandle, const Presentation& group,
                           const std::vector<std::string>& battery = default_battery(), const CountOptions& options = {});

// True when every target counted in both reports has equal counts and at
// least one target was counted in both.
bool same_counts(const CountReport& a, const CountReport& b);

std::string format_report(const CountReport& r);

}  // namespace vdouble

#endif  // VDOUBLE_HOMCOUNT_HPP
