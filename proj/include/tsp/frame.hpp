#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsp/common.hpp"

namespace tsp::frame {

// Which frame's channel estimate an interfering cell's precoder was built
// from, as seen from the pilot window of a given group.
enum class Epoch : std::uint32_t { current = 0, previous = 1 };

struct FrameConfig {
  int coherence_symbols = 185;  // symbols per fading block
  int pilot_symbols = 4;        // UL pilot length per cell group
  int dl_symbols = 96;
  int ul_symbols = 85;
  int subcarriers = 5;          // coherent subcarriers pooled per estimate
  int bs_coherence_frames = 500;  // BS-BS coherence window, in fading blocks

  // Returns every violated constraint (empty when the config is usable).
  // When group_count > 1 the shift feasibility check is included.
  std::vector<std::string> validate(int group_count = 1) const;

  // Fraction of the frame left for payload after the UL pilot.
  double pilot_resource_ratio() const;

  // Fraction of BS-BS coherence resources left after spending tau_bs symbols
  // estimating the channels from dominant_count interferers plus the serving
  // cell once per coherence window. With data_as_pilot the serving cell's own
  // slot is not needed. Throws if the overhead exceeds the budget.
  double bs_resource_ratio(int tau_bs, int dominant_count, bool data_as_pilot = false) const;

  // Pilot start offsets for each of group_count staggered groups.
  std::vector<int> pilot_offsets(int group_count) const;
};

// During group pilot_group's pilot window, cells of interferer_group are in
// their DL phase; groups scheduled earlier in the stagger run on this frame's
// estimates, later ones still on the previous frame's. Throws when the two
// groups coincide (a group does not interfere with its own pilot).
Epoch precoder_epoch(int pilot_group, int interferer_group);

}  // namespace tsp::frame
