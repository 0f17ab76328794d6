#pragma once

#include <string>

#include "planark/block.hpp"
#include "planark/poa.hpp"
#include "planark/state.hpp"

namespace planark {

/// JSON array of index sets, e.g. [[1],[2],[1,2]].
std::string block_to_json(const CircleBlock& block);

/// One row per line, comma-separated digits.
std::string poa_to_csv(const PlanarOrthogonalArray& array);

/// {"r": .., "N": .., "d": .., "k": .., "lambda": .., "data": [[..], ..]}
std::string poa_to_json(const PlanarOrthogonalArray& array);

/// Parses the JSON form; re-derives r and N from data and cross-checks the
/// header, throwing parse_error on any mismatch or malformed entry.
PlanarOrthogonalArray poa_from_json(const std::string& text);

/// Parses the CSV form; r and N come from the data itself, d/k/lambda from
/// the caller. Reports parse errors with line and column.
PlanarOrthogonalArray poa_from_csv(const std::string& text, std::uint32_t d,
                                   std::uint32_t strength, std::uint32_t lambda = 1);

/// {"d": .., "N": .., "terms": [{"idx": [..], "phase": m}, ..]}
std::string state_to_json(const SparseState& state);

/// Lines of "flat_index,re,im" for the nonzero amplitudes.
std::string dense_to_csv(const DenseState& state);

}  // namespace planark
