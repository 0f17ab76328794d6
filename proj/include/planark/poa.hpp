#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "planark/block.hpp"
#include "planark/zd.hpp"

namespace planark {

/// r x N matrix over Z_d with a declared strength k and index lambda.
/// Adjacency of columns is cyclic throughout: windows wrap from column N
/// back to column 1, matching the circle of parties the array feeds.
struct PlanarOrthogonalArray {
  std::uint32_t runs = 0;      // r
  std::uint32_t factors = 0;   // N
  std::uint32_t levels = 0;    // d
  std::uint32_t strength = 0;  // k
  std::uint32_t lambda = 1;
  std::vector<std::uint32_t> data;  // row-major, runs x factors

  std::optional<bool> certified_strength;
  std::optional<bool> certified_irredundant;

  std::uint32_t at(std::uint32_t row, std::uint32_t col) const {
    return data[std::size_t{row} * factors + col];
  }
  bool operator==(const PlanarOrthogonalArray& o) const {
    return runs == o.runs && factors == o.factors && levels == o.levels &&
           strength == o.strength && lambda == o.lambda && data == o.data;
  }
};

/// d^k x (k+s) array whose rows are (f_1(i), ..., f_{k+s}(i)) for every
/// i in Z_d^k in ascending flat order.
PlanarOrthogonalArray poa_from_block(const CircleBlock& block, std::uint32_t d,
                                     std::uint64_t enum_cap = kDefaultEnumCap);

struct StrengthViolation {
  std::uint32_t window_start = 0;       // 1-based first column of the window
  std::vector<std::uint32_t> tuple;     // offending k-tuple
  std::uint64_t count = 0;              // observed multiplicity (expected lambda)
};

struct StrengthReport {
  bool passed = true;
  std::uint32_t windows_checked = 0;
  std::optional<StrengthViolation> violation;
  std::string note;
};

/// Tallies every cyclic window of k adjacent columns; passes iff each of the
/// d^k tuples occurs exactly lambda times in every window.
StrengthReport verify_strength(const PlanarOrthogonalArray& array,
                               std::uint64_t enum_cap = kDefaultEnumCap);

struct DuplicatePair {
  std::uint32_t window_start = 0;  // deleted window's first column, 1-based
  std::uint32_t row_a = 0;
  std::uint32_t row_b = 0;
};

struct IrredundancyReport {
  bool passed = true;
  std::uint32_t windows_checked = 0;
  std::optional<DuplicatePair> duplicate;
};

/// Deletes each cyclic window of k adjacent columns in turn and checks the
/// remaining (N-k)-symbol rows are pairwise distinct.
IrredundancyReport verify_irredundant(const PlanarOrthogonalArray& array);

/// Runs both certifications and records the outcomes on the array.
void certify(PlanarOrthogonalArray& array, std::uint64_t enum_cap = kDefaultEnumCap);

}  // namespace planark
