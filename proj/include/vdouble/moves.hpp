#ifndef VDOUBLE_MOVES_HPP
#define VDOUBLE_MOVES_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "vdouble/diagram.hpp"

namespace vdouble {

enum class MoveDirection : std::uint8_t { Insert, Delete };
enum class Chirality : std::uint8_t { OverFirst, UnderFirst };
// Relative order of the two Under passages of an inserted R2 bigon.
enum class R2Order : std::uint8_t { Antiparallel, Parallel };

// R1 at gap g. Insert writes a kink (fresh id) at g; Delete removes the
// passages at positions g and g+1, which must belong to one crossing.
Diagram apply_r1(const Diagram& d, Gap g, MoveDirection dir, Chirality chirality = Chirality::OverFirst,
                 Sign sign = Sign::Plus);

// R2 between gaps g1 and g2. Insert writes (O a e, O b -e) at g1 and
// (U b -e, U a e) at g2, or (U a e, U b -e) for R2Order::Parallel. When g1 and
// g2 name the same slot the over pair is written first. Delete expects an Over
// pair at g1 and the matching Under pair (either order) at g2.
Diagram apply_r2(const Diagram& d, Gap g1, Gap g2, MoveDirection dir, Sign sign = Sign::Plus,
                 R2Order order = R2Order::Antiparallel);

// Three crossing ids; roles inside the triangle are inferred.
struct R3Site {
  std::array<CrossingId, 3> crossings{};

  friend bool operator==(const R3Site&, const R3Site&) = default;
};

// Transposes the three adjacent passage pairs of an admissible triangle.
Diagram apply_r3(const Diagram& d, const R3Site& site);

// Over-Over transposition at positions i, i+1 of component c (welded move).
Diagram apply_welded_swap(const Diagram& d, std::size_t c, std::size_t i);

// Admissible sites, in deterministic order.
std::vector<Gap> r1_delete_sites(const Diagram& d);
std::vector<std::pair<Gap, Gap>> r2_delete_sites(const Diagram& d);
std::vector<R3Site> r3_sites(const Diagram& d);
std::vector<Location> welded_sites(const Diagram& d);

// Applies `steps` uniformly chosen admissible R1/R2/R3 moves. Deterministic in
// (d, steps, seed).
Diagram random_move_walk(const Diagram& d, std::size_t steps, std::uint64_t seed);

}  // namespace vdouble

#endif  // VDOUBLE_MOVES_HPP
