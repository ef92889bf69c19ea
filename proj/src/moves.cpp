#include "vdouble/moves.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "vdouble/error.hpp"

namespace vdouble {

namespace {

std::size_t checked_position(const Diagram& d, Gap g) {
  const auto& comp = d.component(g.component);
  if (g.position > comp.size()) throw MoveError("gap position out of range");
  return g.position;
}

Diagram remove_locations(const Diagram& d, const std::set<std::pair<std::size_t, std::size_t>>& drop) {
  std::vector<Component> comps;
  comps.reserve(d.component_count());
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    Component out;
    const auto& comp = d.component(c);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (!drop.count({c, i})) out.push_back(comp[i]);
    }
    comps.push_back(std::move(out));
  }
  return Diagram(std::move(comps));
}

// Direction of the adjacency between two locations: +1 when `a` is directly
// followed by `b`, -1 when `b` is directly followed by `a`. Components of
// length two are adjacent both ways and report both.
std::vector<int> adjacency(const Diagram& d, Location a, Location b) {
  std::vector<int> dirs;
  if (a.component != b.component) return dirs;
  const std::size_t len = d.component(a.component).size();
  if (len < 2) return dirs;
  if ((a.index + 1) % len == b.index) dirs.push_back(1);
  if ((b.index + 1) % len == a.index) dirs.push_back(-1);
  return dirs;
}

struct Triangle {
  Location top[2];     // O a, O b
  Location middle[2];  // U a, O c
  Location bottom[2];  // U b, U c
};

// Checks the triangle with roles top={a,b}, middle={a,c}, bottom={b,c}. The
// orientation of each strand (e = +1 when it meets the lower-lettered crossing
// first) fixes the signs up to a global mirror: sa = h eT eM, sb = h eT eB,
// sc = h eM eB.
std::optional<Triangle> match_triangle(const Diagram& d, CrossingId a, CrossingId b, CrossingId c) {
  const CrossingInfo& ia = d.crossing(a);
  const CrossingInfo& ib = d.crossing(b);
  const CrossingInfo& ic = d.crossing(c);
  const auto eT = adjacency(d, ia.over, ib.over);
  const auto eM = adjacency(d, ia.under, ic.over);
  const auto eB = adjacency(d, ib.under, ic.under);
  if (eT.empty() || eM.empty() || eB.empty()) return std::nullopt;
  const int sa = static_cast<int>(ia.sign);
  const int sb = static_cast<int>(ib.sign);
  const int sc = static_cast<int>(ic.sign);
  for (int t : eT) {
    for (int mm : eM) {
      for (int bb : eB) {
        const int h = sa * t * mm;
        if (sb == h * t * bb && sc == h * mm * bb) {
          return Triangle{{ia.over, ib.over}, {ia.under, ic.over}, {ib.under, ic.under}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Triangle> find_triangle(const Diagram& d, const R3Site& site) {
  auto ids = site.crossings;
  std::sort(ids.begin(), ids.end());
  if (ids[0] == ids[1] || ids[1] == ids[2]) return std::nullopt;
  for (CrossingId id : ids) {
    if (!d.crossings().count(id)) return std::nullopt;
  }
  do {
    if (auto t = match_triangle(d, ids[0], ids[1], ids[2])) return t;
  } while (std::next_permutation(ids.begin(), ids.end()));
  return std::nullopt;
}

std::vector<Gap> all_gaps(const Diagram& d) {
  std::vector<Gap> gaps;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    const std::size_t len = d.component(c).size();
    for (std::size_t p = 0; p < std::max<std::size_t>(len, 1); ++p) gaps.push_back(Gap{c, p});
  }
  return gaps;
}

}  // namespace

Diagram apply_r1(const Diagram& d, Gap g, MoveDirection dir, Chirality chirality, Sign sign) {
  const std::size_t pos = checked_position(d, g);
  if (dir == MoveDirection::Insert) {
    const CrossingId n = d.max_crossing_id() + 1;
    const Passage over{n, Role::Over, sign};
    const Passage under{n, Role::Under, sign};
    std::vector<Component> comps = d.components();
    auto& comp = comps[g.component];
    const auto at = comp.begin() + static_cast<std::ptrdiff_t>(pos);
    if (chirality == Chirality::OverFirst) {
      comp.insert(at, {over, under});
    } else {
      comp.insert(at, {under, over});
    }
    return Diagram(std::move(comps));
  }
  const auto& comp = d.component(g.component);
  if (comp.size() < 2) throw MoveError("R1 delete: no kink at this gap");
  const std::size_t p = pos % comp.size();
  const std::size_t q = (p + 1) % comp.size();
  if (comp[p].crossing != comp[q].crossing) throw MoveError("R1 delete: no kink at this gap");
  return remove_locations(d, {{g.component, p}, {g.component, q}});
}

Diagram apply_r2(const Diagram& d, Gap g1, Gap g2, MoveDirection dir, Sign sign, R2Order order) {
  const std::size_t p1 = checked_position(d, g1);
  const std::size_t p2 = checked_position(d, g2);
  if (dir == MoveDirection::Insert) {
    const CrossingId a = d.max_crossing_id() + 1;
    const CrossingId b = a + 1;
    const std::vector<Passage> overs{{a, Role::Over, sign}, {b, Role::Over, -sign}};
    const std::vector<Passage> unders =
        order == R2Order::Antiparallel
            ? std::vector<Passage>{{b, Role::Under, -sign}, {a, Role::Under, sign}}
            : std::vector<Passage>{{a, Role::Under, sign}, {b, Role::Under, -sign}};
    std::vector<Component> comps = d.components();
    auto insert = [&](std::size_t c, std::size_t p, const std::vector<Passage>& items) {
      auto& comp = comps[c];
      comp.insert(comp.begin() + static_cast<std::ptrdiff_t>(p), items.begin(), items.end());
    };
    if (g1.component == g2.component && p1 == p2) {
      std::vector<Passage> both = overs;
      both.insert(both.end(), unders.begin(), unders.end());
      insert(g1.component, p1, both);
    } else if (g1.component == g2.component && p1 < p2) {
      insert(g2.component, p2, unders);
      insert(g1.component, p1, overs);
    } else {
      insert(g1.component, p1, overs);
      insert(g2.component, p2, unders);
    }
    return Diagram(std::move(comps));
  }
  const auto& c1 = d.component(g1.component);
  const auto& c2 = d.component(g2.component);
  if (c1.size() < 2 || c2.size() < 2) throw MoveError("R2 delete: pattern not found");
  const std::size_t i1 = p1 % c1.size(), j1 = (i1 + 1) % c1.size();
  const std::size_t i2 = p2 % c2.size(), j2 = (i2 + 1) % c2.size();
  const Passage& oa = c1[i1];
  const Passage& ob = c1[j1];
  const Passage& u1 = c2[i2];
  const Passage& u2 = c2[j2];
  const bool ok = oa.role == Role::Over && ob.role == Role::Over && u1.role == Role::Under &&
                  u2.role == Role::Under && oa.crossing != ob.crossing && oa.sign == -ob.sign &&
                  ((u1.crossing == ob.crossing && u2.crossing == oa.crossing) ||
                   (u1.crossing == oa.crossing && u2.crossing == ob.crossing));
  if (!ok) throw MoveError("R2 delete: pattern not found");
  return remove_locations(d, {{g1.component, i1}, {g1.component, j1}, {g2.component, i2}, {g2.component, j2}});
}

Diagram apply_r3(const Diagram& d, const R3Site& site) {
  const auto tri = find_triangle(d, site);
  if (!tri) throw MoveError("R3: crossings do not form an admissible triangle");
  std::vector<Component> comps = d.components();
  for (const Location* pair : {tri->top, tri->middle, tri->bottom}) {
    std::swap(comps[pair[0].component][pair[0].index], comps[pair[1].component][pair[1].index]);
  }
  return Diagram(std::move(comps));
}

Diagram apply_welded_swap(const Diagram& d, std::size_t c, std::size_t i) {
  const auto& comp = d.component(c);
  if (comp.size() < 2 || i >= comp.size()) throw MoveError("welded swap: position out of range");
  const std::size_t j = (i + 1) % comp.size();
  if (comp[i].role != Role::Over || comp[j].role != Role::Over || comp[i].crossing == comp[j].crossing) {
    throw MoveError("welded swap: needs two adjacent Over passages of different crossings");
  }
  std::vector<Component> comps = d.components();
  std::swap(comps[c][i], comps[c][j]);
  return Diagram(std::move(comps));
}

std::vector<Gap> r1_delete_sites(const Diagram& d) {
  std::vector<Gap> out;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    const auto& comp = d.component(c);
    const std::size_t len = comp.size();
    if (len < 2) continue;
    for (std::size_t p = 0; p < (len == 2 ? 1 : len); ++p) {
      if (comp[p].crossing == comp[(p + 1) % len].crossing) out.push_back(Gap{c, p});
    }
  }
  return out;
}

std::vector<std::pair<Gap, Gap>> r2_delete_sites(const Diagram& d) {
  std::vector<std::pair<Gap, Gap>> out;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    const auto& comp = d.component(c);
    const std::size_t len = comp.size();
    if (len < 2) continue;
    for (std::size_t p = 0; p < len; ++p) {
      const Passage& x = comp[p];
      const Passage& y = comp[(p + 1) % len];
      if (x.role != Role::Over || y.role != Role::Over || x.crossing == y.crossing || x.sign == y.sign) continue;
      const Location ux = d.crossing(x.crossing).under;
      const Location uy = d.crossing(y.crossing).under;
      const auto dirs = adjacency(d, ux, uy);
      if (dirs.empty()) continue;
      // Gap in front of whichever under passage comes first.
      const Location first = dirs.front() == 1 ? ux : uy;
      out.push_back({Gap{c, p}, Gap{first.component, first.index}});
    }
  }
  return out;
}

std::vector<R3Site> r3_sites(const Diagram& d) {
  std::set<std::array<CrossingId, 3>> found;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    const auto& comp = d.component(c);
    const std::size_t len = comp.size();
    if (len < 2) continue;
    for (std::size_t p = 0; p < len; ++p) {
      const Passage& x = comp[p];
      const Passage& y = comp[(p + 1) % len];
      if (x.role != Role::Over || y.role != Role::Over || x.crossing == y.crossing) continue;
      // Candidate third crossings: Over neighbours of either under passage.
      for (CrossingId top_a : {x.crossing, y.crossing}) {
        const Location ua = d.crossing(top_a).under;
        const auto& ucomp = d.component(ua.component);
        const std::size_t ulen = ucomp.size();
        if (ulen < 2) continue;
        for (std::size_t nb : {(ua.index + 1) % ulen, (ua.index + ulen - 1) % ulen}) {
          const Passage& z = ucomp[nb];
          if (z.role != Role::Over || z.crossing == x.crossing || z.crossing == y.crossing) continue;
          std::array<CrossingId, 3> ids{x.crossing, y.crossing, z.crossing};
          std::sort(ids.begin(), ids.end());
          if (found.count(ids)) continue;
          if (find_triangle(d, R3Site{ids})) found.insert(ids);
        }
      }
    }
  }
  std::vector<R3Site> out;
  for (const auto& ids : found) out.push_back(R3Site{ids});
  return out;
}

std::vector<Location> welded_sites(const Diagram& d) {
  std::vector<Location> out;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    const auto& comp = d.component(c);
    const std::size_t len = comp.size();
    if (len < 2) continue;
    for (std::size_t i = 0; i < (len == 2 ? 1 : len); ++i) {
      const Passage& x = comp[i];
      const Passage& y = comp[(i + 1) % len];
      if (x.role == Role::Over && y.role == Role::Over && x.crossing != y.crossing) out.push_back(Location{c, i});
    }
  }
  return out;
}

Diagram random_move_walk(const Diagram& d, std::size_t steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto coin = [&pick] { return pick(2) == 0; };
  auto random_sign = [&coin] { return coin() ? Sign::Plus : Sign::Minus; };

  Diagram cur = d;
  if (cur.component_count() == 0) return cur;
  for (std::size_t step = 0; step < steps; ++step) {
    const auto r3 = r3_sites(cur);
    const std::size_t kinds = r3.empty() ? 2 : 3;
    const std::size_t kind = pick(kinds);
    const auto gaps = all_gaps(cur);
    if (kind == 0) {
      const auto dels = r1_delete_sites(cur);
      if (!dels.empty() && coin()) {
        cur = apply_r1(cur, dels[pick(dels.size())], MoveDirection::Delete);
      } else {
        const Gap g = gaps[pick(gaps.size())];
        const Chirality ch = coin() ? Chirality::OverFirst : Chirality::UnderFirst;
        cur = apply_r1(cur, g, MoveDirection::Insert, ch, random_sign());
      }
    } else if (kind == 1) {
      const auto dels = r2_delete_sites(cur);
      if (!dels.empty() && coin()) {
        const auto& [g1, g2] = dels[pick(dels.size())];
        cur = apply_r2(cur, g1, g2, MoveDirection::Delete);
      } else {
        const Gap g1 = gaps[pick(gaps.size())];
        const Gap g2 = gaps[pick(gaps.size())];
        const R2Order order = coin() ? R2Order::Antiparallel : R2Order::Parallel;
        cur = apply_r2(cur, g1, g2, MoveDirection::Insert, random_sign(), order);
      }
    } else {
      cur = apply_r3(cur, r3[pick(r3.size())]);
    }
  }
  return cur;
}

}  // namespace vdouble
