#include "tsp/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace tsp::topo {

namespace {

int ring_of(const Axial& a) { return (std::abs(a.q) + std::abs(a.r) + std::abs(a.q + a.r)) / 2; }

Vec2 axial_to_xy(const Axial& a, double spacing) {
  return {spacing * (a.q + 0.5 * a.r), spacing * (0.8660254037844386 * a.r)};
}

// Nonnegative remainder.
int imod(long long v, int m) {
  const long long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

double HexLayout::distance(int a, int b) const {
  const double dx = center[a].x - center[b].x;
  const double dy = center[a].y - center[b].y;
  return std::sqrt(dx * dx + dy * dy);
}

long long HexLayout::lattice_dist2(int a, int b) const {
  const long long dq = axial[a].q - axial[b].q;
  const long long dr = axial[a].r - axial[b].r;
  return dq * dq + dr * dr + dq * dr;
}

int cells_for_rings(int rings) { return 1 + 3 * rings * (rings + 1); }

std::optional<int> rings_for_cells(int cells) {
  for (int n = 0; cells_for_rings(n) <= cells; ++n) {
    if (cells_for_rings(n) == cells) return n;
  }
  return std::nullopt;
}

HexLayout build_hex_layout(int rings, double cell_radius) {
  if (rings < 0) throw SimError("build_hex_layout: rings must be >= 0");
  if (cell_radius <= 0.0) throw SimError("build_hex_layout: cell_radius must be > 0");
  HexLayout out;
  out.rings = rings;
  out.cell_radius = cell_radius;
  out.spacing = std::sqrt(3.0) * cell_radius;

  std::vector<Axial> coords;
  for (int q = -rings; q <= rings; ++q) {
    for (int r = -rings; r <= rings; ++r) {
      const Axial a{q, r};
      if (ring_of(a) <= rings) coords.push_back(a);
    }
  }
  // Ring-major, then ascending angle from the +x axis. Within a ring all
  // angles are distinct, so the ordering is total.
  std::stable_sort(coords.begin(), coords.end(), [&](const Axial& a, const Axial& b) {
    const int ra = ring_of(a), rb = ring_of(b);
    if (ra != rb) return ra < rb;
    const Vec2 pa = axial_to_xy(a, 1.0), pb = axial_to_xy(b, 1.0);
    double ta = std::atan2(pa.y, pa.x), tb = std::atan2(pb.y, pb.x);
    if (ta < -1e-12) ta += 2.0 * kPi;
    if (tb < -1e-12) tb += 2.0 * kPi;
    return ta < tb;
  });

  out.axial = coords;
  out.center.reserve(coords.size());
  for (const Axial& a : coords) out.center.push_back(axial_to_xy(a, out.spacing));
  return out;
}

std::vector<int> valid_group_numbers(int max_value) {
  std::vector<int> vals;
  for (int g = 1; g <= max_value; ++g) {
    if (rhombic_decomposition(g)) vals.push_back(g);
  }
  return vals;
}

bool rhombic_decomposition(int gamma, int* b_out, int* c_out) {
  if (gamma < 1) return false;
  for (int b = 0; b * b <= gamma; ++b) {
    for (int c = 0; b * b + c * c + b * c <= gamma; ++c) {
      if (b * b + c * c + b * c == gamma) {
        if (b_out) *b_out = b;
        if (c_out) *c_out = c;
        return true;
      }
    }
  }
  return false;
}

std::vector<int> assign_groups(const HexLayout& layout, int gamma) {
  int b = 0, c = 0;
  if (!rhombic_decomposition(gamma, &b, &c)) {
    throw SimError("assign_groups: group number " + std::to_string(gamma) +
                   " has no hexagonal-lattice coloring (must be b^2 + c^2 + b*c)");
  }
  // Two cells share a group when their offset lies in the sublattice spanned
  // by (b, c) and its 60-degree rotation (-c, b+c); solving the 2x2 integer
  // system, the offset (dq, dr) is a member iff gamma divides both
  // dq*(b+c) + dr*c and dr*b - dq*c.
  const auto same_group = [&](const Axial& u, const Axial& v) {
    const long long dq = u.q - v.q, dr = u.r - v.r;
    return imod(dq * (b + c) + dr * c, gamma) == 0 && imod(dr * b - dq * c, gamma) == 0;
  };

  const int n = layout.cells();
  std::vector<int> group(n, -1);
  int next_id = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (same_group(layout.axial[i], layout.axial[j])) {
        group[i] = group[j];
        break;
      }
    }
    if (group[i] < 0) group[i] = next_id++;
  }
  return group;
}

std::vector<int> ic_cluster(const HexLayout& layout, int cell, int cluster_size) {
  const int n = layout.cells();
  if (cell < 0 || cell >= n) throw SimError("ic_cluster: cell index out of range");
  if (cluster_size < 0) throw SimError("ic_cluster: cluster size must be >= 0");
  if (cluster_size > n - 1) {
    throw SimError("ic_cluster: layout with " + std::to_string(n) +
                   " cells cannot supply a cluster of " + std::to_string(cluster_size));
  }
  std::vector<std::pair<long long, int>> by_dist;
  by_dist.reserve(n - 1);
  for (int j = 0; j < n; ++j) {
    if (j != cell) by_dist.emplace_back(layout.lattice_dist2(cell, j), j);
  }
  std::sort(by_dist.begin(), by_dist.end());
  std::vector<int> cluster;
  cluster.reserve(cluster_size);
  for (int i = 0; i < cluster_size; ++i) cluster.push_back(by_dist[i].second);
  std::sort(cluster.begin(), cluster.end());
  return cluster;
}

std::vector<int> BsPilotSchedule::coslot_cells(int cell) const {
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(slot_of_cell.size()); ++j) {
    if (slot_of_cell[j] == slot_of_cell[cell]) out.push_back(j);
  }
  return out;
}

BsPilotSchedule bs_reuse_schedule(const HexLayout& layout, int cluster_size) {
  const int n = layout.cells();
  const int reuse = cluster_size + 1;
  if (cluster_size < 1) throw SimError("bs_reuse_schedule: cluster size must be >= 1");
  if (reuse > n) throw SimError("bs_reuse_schedule: reuse factor exceeds cell count");

  std::vector<std::vector<int>> clusters(n);
  for (int l = 0; l < n; ++l) clusters[l] = ic_cluster(layout, l, cluster_size);
  const auto conflicts = [&](int u, int v) {
    return std::binary_search(clusters[u].begin(), clusters[u].end(), v) ||
           std::binary_search(clusters[v].begin(), clusters[v].end(), u);
  };

  BsPilotSchedule sched;
  sched.reuse_factor = reuse;

  if (rhombic_decomposition(reuse)) {
    sched.slot_of_cell = assign_groups(layout, reuse);
    sched.method = "lattice";
    for (int u = 0; u < n; ++u) {
      for (int v : clusters[u]) {
        if (sched.slot_of_cell[u] == sched.slot_of_cell[v]) {
          throw SimError("bs_reuse_schedule: lattice coloring violated cluster separation");
        }
      }
    }
    return sched;
  }

  // Greedy fallback for reuse factors without a lattice coloring: color in
  // cell-index order; among the slots not blocked by a cluster-mate, prefer
  // an empty slot, otherwise the slot whose current members are farthest.
  sched.method = "greedy";
  sched.slot_of_cell.assign(n, -1);
  std::vector<std::vector<int>> members(reuse);
  for (int u = 0; u < n; ++u) {
    int best_slot = -1;
    double best_score = -1.0;
    for (int s = 0; s < reuse; ++s) {
      bool blocked = false;
      for (int v : members[s]) {
        if (conflicts(u, v)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      double score = std::numeric_limits<double>::infinity();
      for (int v : members[s]) score = std::min(score, layout.distance(u, v));
      if (score > best_score) {
        best_score = score;
        best_slot = s;
      }
    }
    if (best_slot < 0) {
      throw SimError("bs_reuse_schedule: greedy packing found no feasible slot for cell " +
                     std::to_string(u));
    }
    sched.slot_of_cell[u] = best_slot;
    members[best_slot].push_back(u);
  }
  return sched;
}

bool point_in_hexagon(const Vec2& p, double spacing) {
  const double half = 0.5 * spacing;
  const double d0 = p.x;
  const double d1 = 0.5 * p.x + 0.8660254037844386 * p.y;
  const double d2 = -0.5 * p.x + 0.8660254037844386 * p.y;
  return std::abs(d0) <= half && std::abs(d1) <= half && std::abs(d2) <= half;
}

Vec2 sample_user_position(rng::Stream& stream, double spacing, double exclusion_radius) {
  const double circum = spacing / std::sqrt(3.0);
  if (exclusion_radius >= 0.5 * spacing) {
    throw SimError("sample_user_position: exclusion disc swallows the cell");
  }
  for (;;) {
    const double x = (2.0 * stream.uniform01() - 1.0) * 0.5 * spacing;
    const double y = (2.0 * stream.uniform01() - 1.0) * circum;
    const Vec2 p{x, y};
    if (!point_in_hexagon(p, spacing)) continue;
    if (x * x + y * y < exclusion_radius * exclusion_radius) continue;
    return p;
  }
}

std::vector<std::vector<Vec2>> drop_users(const HexLayout& layout, int users_per_cell,
                                          double exclusion_radius, std::uint64_t seed,
                                          std::uint32_t drop) {
  if (users_per_cell < 1) throw SimError("drop_users: users_per_cell must be >= 1");
  std::vector<std::vector<Vec2>> out(layout.cells());
  for (int cell = 0; cell < layout.cells(); ++cell) {
    out[cell].reserve(users_per_cell);
    for (int k = 0; k < users_per_cell; ++k) {
      rng::Stream s(seed, drop, rng::LinkClass::user_position,
                    (static_cast<std::uint64_t>(cell) << 16) | static_cast<std::uint64_t>(k));
      Vec2 p = sample_user_position(s, layout.spacing, exclusion_radius);
      p.x += layout.center[cell].x;
      p.y += layout.center[cell].y;
      out[cell].push_back(p);
    }
  }
  return out;
}

double hexagon_second_moment(double circumradius) {
  return 5.0 / 12.0 * circumradius * circumradius;
}

}  // namespace tsp::topo
