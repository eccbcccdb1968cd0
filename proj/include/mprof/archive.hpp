#ifndef MPROF_ARCHIVE_HPP
#define MPROF_ARCHIVE_HPP

#include <optional>
#include <string>

#include "mprof/dataset.hpp"
#include "mprof/discovery.hpp"
#include "mprof/profile.hpp"

namespace mprof {

// Everything one computation accumulates: the profile, optionally the input
// data (the keep-data contract) and any discovery results bolted on later.
// Serialized as JSON; +inf encodes as the string "inf", undefined indexes
// as -1, floats at full round-trip precision.
struct ProfileArchive {
  static constexpr int kSchemaVersion = 1;

  Mode mode = Mode::stomp;
  std::optional<MatrixProfile> profile;       // univariate / simple result
  std::optional<MultiMatrixProfile> multi;    // mstomp result
  double ez_fraction = 0.5;

  std::optional<MultiTimeSeries> data_a;
  std::optional<MultiTimeSeries> data_b;
  std::string name_a, name_b;
  std::string source_a, source_b;

  std::optional<MotifSet> motif;
  std::optional<DiscordSet> discord;
  std::optional<ChainSet> chain;
  std::optional<FlussResult> fluss;

  Index window() const;
  Index exclusion_zone() const;
  Index profile_size() const;
  double coverage() const;
  Index data_len_a() const;
  Index data_len_b() const;
  Index data_dims() const;
  bool is_ab() const;
};

std::string archive_to_json(const ProfileArchive &archive);
ProfileArchive archive_from_json(const std::string &text);

void write_profile(const ProfileArchive &archive, const std::string &path);
ProfileArchive read_profile(const std::string &path);

// Printed blocks in the toolkit's summary grammar. Positions are printed
// 1-based, matching the style of statistical environments; archives and the
// library API stay 0-based.
std::string render_profile_block(const ProfileArchive &archive);
std::string render_motif_block(const MotifSet &motif);
std::string render_discord_block(const DiscordSet &discord);
std::string render_chain_block(const ChainSet &chain);
std::string render_fluss_block(const FlussResult &fluss, Index profile_size);

} // namespace mprof

#endif
