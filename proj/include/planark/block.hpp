#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planark/zd.hpp"

namespace planark {

/// One map Z_d^k -> Z_d: the mod-d sum of the input coordinates named by
/// `indices` (1-based, sorted, non-empty).
struct CoordinateMap {
  std::uint32_t arity = 0;
  std::vector<std::uint32_t> indices;

  std::uint32_t eval(std::span<const std::uint32_t> input, std::uint32_t d) const;
  bool operator==(const CoordinateMap&) const = default;
};

/// Renders "e1" or "e1+e7" style.
std::string to_string(const CoordinateMap& m);

/// Sequence of k+s coordinate maps in which every k cyclically adjacent maps
/// jointly form a bijection of Z_d^k. Canonical blocks start with the k
/// coordinate projections e_1..e_k.
struct CircleBlock {
  std::uint32_t strength = 0;  // k
  std::uint32_t overhang = 0;  // s; maps.size() == strength + overhang
  bool canonical = false;
  std::vector<CoordinateMap> maps;

  std::size_t length() const { return maps.size(); }
  bool operator==(const CircleBlock&) const = default;
};

std::string to_string(const CircleBlock& b);

/// (k+s) x (k+s) grid of optional values in [1, k] driving the canonical
/// block construction. Blank cells stay disengaged through both fill steps.
struct ConstructionTable {
  std::uint32_t k = 0;
  std::uint32_t s = 0;
  std::vector<std::optional<std::uint32_t>> cells;  // row-major, 1-based access

  std::uint32_t size() const { return k + s; }
  std::optional<std::uint32_t>& at(std::uint32_t row, std::uint32_t col);
  const std::optional<std::uint32_t>& at(std::uint32_t row, std::uint32_t col) const;

  /// One line per row, comma-separated, blanks empty.
  std::string to_csv() const;
};

/// Seeding pass only: the two fill rules of the construction's first step.
ConstructionTable build_initial_table(std::uint32_t k, std::uint32_t s);

/// Seeding plus the row-by-row recursion; the returned table is final.
ConstructionTable build_construction_table(std::uint32_t k, std::uint32_t s);

/// Column read-out of a final table into a circle block.
CircleBlock read_out_block(const ConstructionTable& table);

/// Canonical circle block of form (k, s) for k >= 2, 0 <= s <= k-1.
/// s = 0 yields the identity block (e_1, ..., e_k).
CircleBlock build_canonical_block(std::uint32_t k, std::uint32_t s);

/// Concatenates two canonical blocks of equal strength; the result is a
/// canonical block of form (k, s1 + k + s2).
CircleBlock paste_blocks(const CircleBlock& first, const CircleBlock& second);

/// Canonical block with `total_maps` maps built by decomposing
/// total_maps = q*k + s (q >= 2) and pasting q-1 identity blocks with one
/// canonical (k, s) block. Requires total_maps >= 2k.
CircleBlock block_for_length(std::uint32_t k, std::uint32_t total_maps);

struct WindowCollision {
  std::uint32_t window_start = 0;  // 1-based map position
  std::uint64_t first_input = 0;   // flat indices of a colliding input pair
  std::uint64_t second_input = 0;
};

struct BlockReport {
  bool passed = true;
  std::uint32_t windows_checked = 0;
  std::vector<WindowCollision> collisions;  // first collision per failing window
};

/// Exhaustively checks every cyclic k-window of the block for injectivity
/// over Z_d^k (injective implies bijective on a finite set).
BlockReport verify_block(const CircleBlock& block, std::uint32_t d,
                         std::uint64_t enum_cap = kDefaultEnumCap);

}  // namespace planark
