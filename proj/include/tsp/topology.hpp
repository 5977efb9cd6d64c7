// Hexagonal cell layout, pilot-group coloring, interference-cancellation
// clusters, base-station pilot scheduling and user placement.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsp/common.hpp"
#include "tsp/rng.hpp"

namespace tsp::topo {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// Axial hex-lattice coordinates (unit step = one cell spacing).
struct Axial {
  int q = 0;
  int r = 0;
};

struct HexLayout {
  int rings = 0;
  double cell_radius = 0.0;  // hexagon circumradius, meters
  double spacing = 0.0;      // adjacent BS distance = sqrt(3) * cell_radius
  std::vector<Axial> axial;  // cell index -> lattice coordinate, center first
  std::vector<Vec2> center;  // cell index -> BS position, meters

  int cells() const { return static_cast<int>(center.size()); }
  double distance(int a, int b) const;
  // Squared distance in units of spacing^2; exact integer, used for
  // deterministic tie-breaking.
  long long lattice_dist2(int a, int b) const;
};

// Number of cells for a ring count: 1 + 3 n (n + 1).
int cells_for_rings(int rings);
// Inverse of cells_for_rings, empty if the count is not of that form.
std::optional<int> rings_for_cells(int cells);

// Cells ordered ring-major, and inside each ring by ascending angle from the
// positive x axis. Index 0 is the center cell.
HexLayout build_hex_layout(int rings, double cell_radius);

// Group counts representable as b^2 + c^2 + b*c (b, c >= 0), ascending.
std::vector<int> valid_group_numbers(int max_value);
// True when gamma = b^2 + c^2 + b*c has a solution; outputs one solution.
bool rhombic_decomposition(int gamma, int* b_out = nullptr, int* c_out = nullptr);

// Pilot-group id per cell via sublattice coloring. The center cell always
// gets group 0; remaining ids follow first appearance in cell-index order.
// Throws SimError when gamma has no lattice coloring.
std::vector<int> assign_groups(const HexLayout& layout, int gamma);

// The cluster_size cells nearest to `cell` (the cell itself excluded),
// ascending cell index. Distance ties break toward the lower index.
// Throws SimError when the layout has fewer than cluster_size other cells.
std::vector<int> ic_cluster(const HexLayout& layout, int cell, int cluster_size);

// Assignment of BS-pilot slots with reuse factor cluster_size + 1. The
// guarantee is pairwise: a cell never shares a slot with any member of its
// own cancellation cluster, so each clustered interferer sounds while the
// target listens. Two cluster members may still coincide when neither lies
// in the other's cluster; residual co-slot leakage is modeled downstream.
struct BsPilotSchedule {
  int reuse_factor = 0;
  std::vector<int> slot_of_cell;
  std::string method;  // "lattice" or "greedy"

  // Cells sharing `cell`'s slot, including the cell itself, ascending index.
  std::vector<int> coslot_cells(int cell) const;
};
BsPilotSchedule bs_reuse_schedule(const HexLayout& layout, int cluster_size);

// Membership test for the hexagonal cell centered at the origin
// (apothem = spacing / 2, flat side toward the +x neighbor).
bool point_in_hexagon(const Vec2& p, double spacing);

// Uniform position in the hexagonal cell minus the exclusion disc around the
// BS, by rejection sampling. Returned relative to the cell center.
Vec2 sample_user_position(rng::Stream& stream, double spacing, double exclusion_radius);

// One drop: positions for users_per_cell users in every cell, meters,
// absolute coordinates. Deterministic in (seed, drop).
std::vector<std::vector<Vec2>> drop_users(const HexLayout& layout, int users_per_cell,
                                          double exclusion_radius, std::uint64_t seed,
                                          std::uint32_t drop);

// E{ ||p||^2 } for p uniform on a hexagon with the given circumradius.
double hexagon_second_moment(double circumradius);

}  // namespace tsp::topo
