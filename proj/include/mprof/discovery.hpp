#ifndef MPROF_DISCOVERY_HPP
#define MPROF_DISCOVERY_HPP

#include <optional>
#include <variant>
#include <vector>

#include "mprof/profile.hpp"
#include "mprof/types.hpp"

namespace mprof {

struct MotifPair {
  Index anchor = kNone;
  Index pair = kNone;
  double distance = kInf;
  std::vector<Index> neighbors; // ascending by distance to the anchor
};

struct MotifSet {
  std::vector<MotifPair> pairs; // ascending by pair distance
  Index window = 0;
  double radius = 0.0;
  Index exclusion_zone = 0; // separation zone applied to pairs and neighbors
};

struct DiscordSet {
  std::vector<std::pair<Index, double>> discords; // descending by distance
  Index exclusion_zone = 0;
  bool truncated = false; // fewer found than requested
};

struct ChainSet {
  std::vector<std::vector<Index>> chains; // each strictly increasing, length >= 3
  std::vector<Index> best_chain;          // longest; ties -> smallest start
  Index count = 0;
};

struct FlussResult {
  std::vector<Index> arc_counts;
  std::vector<double> cac; // corrected arc curve, in [0, 1]
  std::vector<Index> segments;
  double min_value = 1.0;
  Index min_index = kNone;
  bool truncated = false; // early stop returned fewer segments
  Index window = 0;
  double exclusion_factor = 0.0;
};

// The data a discovery step recomputes distances against.
using DiscoveryData = std::variant<const TimeSeries *, const MultiTimeSeries *>;

// Repeated argmin extraction: pair = (anchor, index[anchor]); neighbors are
// the positions whose distance to the anchor stays under radius * pair
// distance, mutually separated by more than `neighbor_zone`. Each round masks
// a zone around everything found. Requires a full-coverage profile and the
// original data (MultiTimeSeries for profiles with raw-distance semantics).
MotifSet find_motif(const MatrixProfile &mp, const DiscoveryData &data, Index n_motifs,
                    double radius, Index neighbor_zone);

// Iteratively selects the argmax of the finite profile values, masking
// `zone` around each hit. zone < 0 -> the profile's own exclusion zone.
DiscordSet find_discord(const MatrixProfile &mp, Index n_discords, Index zone = -1);

// All maximal bidirectionally linked chains of length >= 3.
ChainSet find_chains(const MatrixProfile &mp);

// arc_counts[i] = number of nearest-neighbor arcs strictly crossing i,
// via a +1/-1 sweep over arc endpoints.
std::vector<Index> fluss_arc_count(const MatrixProfile &mp);

// Corrected arc curve: counts normalized by the idealized parabolic count,
// clamped to [0, 1], with positions within `window` of either end forced to 1.
std::vector<double> fluss_cac(const std::vector<Index> &arc_counts, Index window);

// Repeated argmin extraction over the curve, masking +-exclusion_factor *
// window around each pick; stops early once nothing below 1 remains.
FlussResult fluss_extract(const std::vector<double> &cac, Index num_segments,
                          Index window, double exclusion_factor = 5.0);

} // namespace mprof

#endif
