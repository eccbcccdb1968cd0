#ifndef MPROF_PLOT_HPP
#define MPROF_PLOT_HPP

#include <string>
#include <vector>

#include "mprof/archive.hpp"

namespace mprof {

enum class PlotKind { profile, motif, segment, chain };

// Emits column-oriented text files plus an SVG rendering of the requested
// result into `out_dir`. Returns the paths written. Raises StaleProfileError
// when the archive lacks the requested result or the data it needs.
std::vector<std::string> write_plot_data(const ProfileArchive &archive, PlotKind kind,
                                         const std::string &out_dir);

} // namespace mprof

#endif
