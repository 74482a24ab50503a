#pragma once

#include "pafdp/paf_format.hpp"
#include "pafdp/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pafdp {

struct GridSpec {
  std::size_t rows = 3;     ///< k
  std::size_t columns = 5;  ///< n
  std::uint64_t seed = 0;
};

/// Substreams of a grid seed. Topology, probabilities and the query set each
/// draw from their own stream so changing one never shifts the others.
enum class GridStream : std::uint64_t { Topology = 1, Probabilities = 2, QuerySet = 3 };

/// One draw from {0.1, ..., 0.9} (weight 10/91 each) and 1 (weight 1/91).
Rational draw_grid_probability(Rng& rng);

/// "a<row>_<col>", zero-padded so lexicographic order is row-major.
std::string grid_argument_name(const GridSpec& spec, std::size_t row, std::size_t column);

/// Grid PAF: every horizontal and vertical neighbour pair gets no attack, one
/// of the two directions, or both (uniformly); every argument and attack draws
/// its probability with draw_grid_probability; each argument joins the query
/// set independently with probability 1/25. Argument probabilities are drawn
/// in row-major order, then attack probabilities in creation order.
/// Throws InputError for an empty grid.
PafDocument generate_grid(const GridSpec& spec);

/// Elimination order sweeping the grid along its longer side, so the
/// frontier never exceeds min(k, n) vertices.
std::vector<ArgIndex> grid_elimination_order(const GridSpec& spec, const AF& af);

}  // namespace pafdp
