#ifndef BOXCOVER_ORACLE_HPP
#define BOXCOVER_ORACLE_HPP

#include <string>

#include "boxcover/boxing.hpp"

namespace boxcover {

inline constexpr std::size_t kOracleMaxNodes = 14;

struct OracleResult {
  std::size_t optimum = 0;
  Cover witness;
};

/// Exact minimum number of boxes of diameter <= l̃, by branch and bound.
/// Refuses graphs above kOracleMaxNodes nodes.
OracleResult exact_min_cover(const DistanceMatrix& dm, int impl_size);

/// Canonical test graphs: "path:N", "cycle:N", "star:N" (hub 0, N nodes),
/// "grid:WxH", "complete:N".
Graph generate(const std::string& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t n);
Graph grid_graph(std::size_t width, std::size_t height);
Graph complete_graph(std::size_t n);

}  // namespace boxcover

#endif
