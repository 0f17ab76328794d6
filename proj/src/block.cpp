#include "planark/block.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace planark {

std::uint32_t CoordinateMap::eval(std::span<const std::uint32_t> input,
                                  std::uint32_t d) const {
  if (input.size() != arity) {
    throw Error(Errc::invalid_input,
                "coordinate map expects arity " + std::to_string(arity) +
                    ", got input of length " + std::to_string(input.size()));
  }
  std::uint32_t acc = 0;
  for (std::uint32_t i : indices) {
    acc = mod_add(acc, input[i - 1], d);
  }
  return acc;
}

std::string to_string(const CoordinateMap& m) {
  std::string out;
  for (std::size_t i = 0; i < m.indices.size(); ++i) {
    if (i > 0) out += "+";
    out += "e" + std::to_string(m.indices[i]);
  }
  return out;
}

std::string to_string(const CircleBlock& b) {
  std::string out = "(";
  for (std::size_t i = 0; i < b.maps.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(b.maps[i]);
  }
  out += ")";
  return out;
}

std::optional<std::uint32_t>& ConstructionTable::at(std::uint32_t row,
                                                    std::uint32_t col) {
  return cells[std::size_t{row - 1} * size() + (col - 1)];
}

const std::optional<std::uint32_t>& ConstructionTable::at(std::uint32_t row,
                                                          std::uint32_t col) const {
  return cells[std::size_t{row - 1} * size() + (col - 1)];
}

std::string ConstructionTable::to_csv() const {
  std::ostringstream out;
  for (std::uint32_t i = 1; i <= size(); ++i) {
    for (std::uint32_t j = 1; j <= size(); ++j) {
      if (j > 1) out << ',';
      if (const auto& cell = at(i, j)) out << *cell;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

void check_block_params(std::uint32_t k, std::uint32_t s) {
  if (k < 2) {
    throw Error(Errc::invalid_input,
                "strength must be at least 2; use the GHZ construction for k = 1");
  }
  if (s >= k) {
    throw Error(Errc::unsupported_overhang,
                "overhang must satisfy 0 <= s <= k-1, got s=" + std::to_string(s) +
                    " for k=" + std::to_string(k));
  }
}

}  // namespace

ConstructionTable build_initial_table(std::uint32_t k, std::uint32_t s) {
  check_block_params(k, s);
  ConstructionTable table;
  table.k = k;
  table.s = s;
  const std::uint32_t n = k + s;
  table.cells.assign(std::size_t{n} * n, std::nullopt);

  // Rule (a): left part, columns 1..k, skipping the band i-j in {1..s}.
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= k; ++j) {
      std::int64_t diff = std::int64_t{i} - j;
      if (diff >= 1 && diff <= s) continue;
      table.at(i, j) = j;
    }
  }
  // Rule (b): rows 2..s+1 carry the values missing from their left part in
  // columns k+1..k+s. Row i receives 1..i-1 there.
  for (std::uint32_t i = 2; i <= s + 1; ++i) {
    for (std::uint32_t j = 1; j + 1 <= i; ++j) {
      table.at(i, k + j) = j;
    }
  }
  return table;
}

ConstructionTable build_construction_table(std::uint32_t k, std::uint32_t s) {
  ConstructionTable table = build_initial_table(k, s);
  if (s == 0) return table;  // no columns beyond k: nothing to recurse

  const std::uint32_t n = k + s;
  // Row i+1 inherits its right part (columns >= k+1) from row i. The value
  // i-s leaves the right part for the left triangle; the diagonal value
  // V(i,i) either already is i-s or swaps into the slot that held i-s.
  for (std::uint32_t i = s + 1; i <= n - 1; ++i) {
    const auto diag = table.at(i, i);
    if (!diag) {
      throw Error(Errc::internal_inconsistency,
                  "construction table: blank diagonal at row " + std::to_string(i));
    }
    const std::uint32_t leaving = i - s;
    if (*diag == leaving) {
      for (std::uint32_t j = i + 1; j <= n; ++j) {
        if (j > k) table.at(i + 1, j) = table.at(i, j);
      }
    } else {
      std::optional<std::uint32_t> swap_col;
      for (std::uint32_t j = i + 1; j <= n; ++j) {
        if (table.at(i, j) && *table.at(i, j) == leaving) {
          if (swap_col) {
            throw Error(Errc::internal_inconsistency,
                        "construction table: value " + std::to_string(leaving) +
                            " appears twice in row " + std::to_string(i));
          }
          swap_col = j;
        }
      }
      if (!swap_col || *swap_col <= k) {
        throw Error(Errc::internal_inconsistency,
                    "construction table: no right-part slot holds " +
                        std::to_string(leaving) + " in row " + std::to_string(i));
      }
      for (std::uint32_t j = i + 1; j <= n; ++j) {
        if (j <= k) continue;
        table.at(i + 1, j) = (j == *swap_col) ? diag : table.at(i, j);
      }
    }
  }
  return table;
}

CircleBlock read_out_block(const ConstructionTable& table) {
  const std::uint32_t n = table.size();
  CircleBlock block;
  block.strength = table.k;
  block.overhang = table.s;
  block.canonical = true;
  block.maps.reserve(n);
  for (std::uint32_t j = 1; j <= n; ++j) {
    CoordinateMap map;
    map.arity = table.k;
    for (std::uint32_t i = 1; i <= n; ++i) {
      if (const auto& cell = table.at(i, j)) {
        if (std::find(map.indices.begin(), map.indices.end(), *cell) ==
            map.indices.end()) {
          map.indices.push_back(*cell);
        }
      }
    }
    std::sort(map.indices.begin(), map.indices.end());
    if (map.indices.empty()) {
      throw Error(Errc::internal_inconsistency,
                  "construction table: column " + std::to_string(j) + " is blank");
    }
    block.maps.push_back(std::move(map));
  }
  // The first k columns must read out as plain projections.
  for (std::uint32_t j = 1; j <= table.k; ++j) {
    if (block.maps[j - 1].indices != std::vector<std::uint32_t>{j}) {
      throw Error(Errc::internal_inconsistency,
                  "construction table: column " + std::to_string(j) +
                      " is not the projection e" + std::to_string(j));
    }
  }
  return block;
}

CircleBlock build_canonical_block(std::uint32_t k, std::uint32_t s) {
  return read_out_block(build_construction_table(k, s));
}

CircleBlock paste_blocks(const CircleBlock& first, const CircleBlock& second) {
  if (first.strength != second.strength) {
    throw Error(Errc::incompatible_blocks,
                "cannot paste blocks of strength " + std::to_string(first.strength) +
                    " and " + std::to_string(second.strength));
  }
  if (!first.canonical || !second.canonical) {
    throw Error(Errc::incompatible_blocks, "pasting requires canonical blocks");
  }
  CircleBlock out;
  out.strength = first.strength;
  out.overhang = first.overhang + first.strength + second.overhang;
  out.canonical = true;
  out.maps = first.maps;
  out.maps.insert(out.maps.end(), second.maps.begin(), second.maps.end());
  return out;
}

CircleBlock block_for_length(std::uint32_t k, std::uint32_t total_maps) {
  if (k < 2) {
    throw Error(Errc::invalid_input,
                "strength must be at least 2; use the GHZ construction for k = 1");
  }
  if (total_maps < 2 * k) {
    throw Error(Errc::no_construction,
                "no construction for fewer than 2k maps (k=" + std::to_string(k) +
                    ", requested " + std::to_string(total_maps) + ")");
  }
  const std::uint32_t q = total_maps / k;
  const std::uint32_t s = total_maps % k;

  CircleBlock identity = build_canonical_block(k, 0);
  CircleBlock out = identity;
  for (std::uint32_t i = 1; i < q - 1; ++i) out = paste_blocks(out, identity);
  out = paste_blocks(out, build_canonical_block(k, s));
  return out;
}

BlockReport verify_block(const CircleBlock& block, std::uint32_t d,
                         std::uint64_t enum_cap) {
  const std::uint32_t k = block.strength;
  const std::uint32_t length = static_cast<std::uint32_t>(block.maps.size());
  if (length < k || k == 0) {
    throw Error(Errc::invalid_input, "block shorter than its strength");
  }
  const std::uint64_t total = checked_power(d, k, enum_cap);

  BlockReport report;
  std::vector<std::uint32_t> image(k, 0);
  std::unordered_map<std::uint64_t, std::uint64_t> seen;
  seen.reserve(total);

  for (std::uint32_t start = 0; start < length; ++start) {
    seen.clear();
    std::optional<WindowCollision> collision;
    TupleEnumerator inputs(k, d, enum_cap);
    std::uint64_t flat = 0;
    while (const auto* input = inputs.next()) {
      for (std::uint32_t w = 0; w < k; ++w) {
        const CoordinateMap& map = block.maps[(start + w) % length];
        image[w] = map.eval(*input, d);
      }
      const std::uint64_t key = encode_index(image, d);
      auto [it, inserted] = seen.emplace(key, flat);
      if (!inserted) {
        collision = WindowCollision{start + 1, it->second, flat};
        break;
      }
      ++flat;
    }
    ++report.windows_checked;
    if (collision) {
      report.passed = false;
      report.collisions.push_back(*collision);
    }
  }
  return report;
}

}  // namespace planark
