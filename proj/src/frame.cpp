#include "tsp/frame.hpp"

namespace tsp::frame {

std::vector<std::string> FrameConfig::validate(int group_count) const {
  std::vector<std::string> bad;
  if (coherence_symbols < 1) bad.push_back("frame.coherence_symbols must be >= 1");
  if (pilot_symbols < 1) bad.push_back("frame.pilot_symbols must be >= 1");
  if (dl_symbols < 0) bad.push_back("frame.dl_symbols must be >= 0");
  if (ul_symbols < 0) bad.push_back("frame.ul_symbols must be >= 0");
  if (subcarriers < 1) bad.push_back("frame.subcarriers must be >= 1");
  if (bs_coherence_frames < 1) bad.push_back("frame.bs_coherence_frames must be >= 1");
  if (pilot_symbols + dl_symbols + ul_symbols != coherence_symbols) {
    bad.push_back("frame.pilot_symbols + frame.dl_symbols + frame.ul_symbols must equal "
                  "frame.coherence_symbols");
  }
  if (group_count > 1 && (group_count - 1) * pilot_symbols > dl_symbols) {
    bad.push_back("staggered pilots overrun the DL phase: (groups - 1) * pilot_symbols "
                  "exceeds frame.dl_symbols");
  }
  return bad;
}

double FrameConfig::pilot_resource_ratio() const {
  return 1.0 - static_cast<double>(pilot_symbols) / coherence_symbols;
}

double FrameConfig::bs_resource_ratio(int tau_bs, int dominant_count, bool data_as_pilot) const {
  if (tau_bs < 0) throw SimError("bs_resource_ratio: tau_bs must be >= 0");
  if (dominant_count < 0) throw SimError("bs_resource_ratio: dominant_count must be >= 0");
  const double slots = dominant_count + (data_as_pilot ? 0 : 1);
  const double budget = static_cast<double>(subcarriers) * bs_coherence_frames * coherence_symbols;
  const double ratio = 1.0 - static_cast<double>(tau_bs) * slots / budget;
  if (ratio < 0.0) throw SimError("bs_resource_ratio: estimation overhead exceeds the coherence budget");
  return ratio;
}

std::vector<int> FrameConfig::pilot_offsets(int group_count) const {
  if (group_count < 1) throw SimError("pilot_offsets: group_count must be >= 1");
  std::vector<int> off(group_count);
  for (int g = 0; g < group_count; ++g) off[g] = g * pilot_symbols;
  return off;
}

Epoch precoder_epoch(int pilot_group, int interferer_group) {
  if (pilot_group == interferer_group) {
    throw SimError("precoder_epoch: a group is silent during its own pilot window");
  }
  return interferer_group < pilot_group ? Epoch::current : Epoch::previous;
}

}  // namespace tsp::frame
