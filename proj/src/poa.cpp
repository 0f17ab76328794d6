#include "planark/poa.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace planark {

PlanarOrthogonalArray poa_from_block(const CircleBlock& block, std::uint32_t d,
                                     std::uint64_t enum_cap) {
  const std::uint32_t k = block.strength;
  const std::uint64_t rows = checked_power(d, k, enum_cap);

  PlanarOrthogonalArray array;
  array.runs = static_cast<std::uint32_t>(rows);
  array.factors = static_cast<std::uint32_t>(block.maps.size());
  array.levels = d;
  array.strength = k;
  array.lambda = 1;
  array.data.reserve(rows * block.maps.size());

  TupleEnumerator inputs(k, d, enum_cap);
  while (const auto* input = inputs.next()) {
    for (const CoordinateMap& map : block.maps) {
      array.data.push_back(map.eval(*input, d));
    }
  }
  return array;
}

StrengthReport verify_strength(const PlanarOrthogonalArray& array,
                               std::uint64_t enum_cap) {
  StrengthReport report;
  const std::uint32_t k = array.strength;
  const std::uint32_t n = array.factors;
  const std::uint32_t d = array.levels;
  if (k == 0 || k > n) {
    report.passed = false;
    report.note = "declared strength outside [1, N]";
    return report;
  }
  const std::uint64_t tuple_count = checked_power(d, k, enum_cap);
  if (std::uint64_t{array.runs} != std::uint64_t{array.lambda} * tuple_count) {
    report.passed = false;
    report.note = "run count is not lambda * d^k";
    return report;
  }

  std::vector<std::uint64_t> counts(tuple_count);
  std::vector<std::uint32_t> window(k);
  for (std::uint32_t start = 0; start < n; ++start) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint32_t row = 0; row < array.runs; ++row) {
      for (std::uint32_t w = 0; w < k; ++w) {
        window[w] = array.at(row, (start + w) % n);
      }
      ++counts[encode_index(window, d)];
    }
    ++report.windows_checked;
    for (std::uint64_t t = 0; t < tuple_count; ++t) {
      if (counts[t] != array.lambda) {
        report.passed = false;
        if (!report.violation) {
          report.violation =
              StrengthViolation{start + 1, decode_index(t, d, k), counts[t]};
        }
        break;
      }
    }
  }
  return report;
}

IrredundancyReport verify_irredundant(const PlanarOrthogonalArray& array) {
  IrredundancyReport report;
  const std::uint32_t k = array.strength;
  const std::uint32_t n = array.factors;

  std::vector<std::uint32_t> kept;
  kept.reserve(n - std::min(k, n));
  std::unordered_map<std::string, std::uint32_t> seen;
  seen.reserve(array.runs);

  for (std::uint32_t start = 0; start < n; ++start) {
    kept.clear();
    for (std::uint32_t col = 0; col < n; ++col) {
      const std::uint32_t offset = (col + n - start) % n;
      if (offset >= k) kept.push_back(col);
    }
    seen.clear();
    std::optional<DuplicatePair> duplicate;
    for (std::uint32_t row = 0; row < array.runs && !duplicate; ++row) {
      std::string key;
      key.reserve(kept.size() * 4);
      for (std::uint32_t col : kept) {
        key += std::to_string(array.at(row, col));
        key += ',';
      }
      auto [it, inserted] = seen.emplace(std::move(key), row);
      if (!inserted) {
        duplicate = DuplicatePair{start + 1, it->second, row};
      }
    }
    ++report.windows_checked;
    if (duplicate) {
      report.passed = false;
      if (!report.duplicate) report.duplicate = duplicate;
    }
  }
  return report;
}

void certify(PlanarOrthogonalArray& array, std::uint64_t enum_cap) {
  array.certified_strength = verify_strength(array, enum_cap).passed;
  array.certified_irredundant = verify_irredundant(array).passed;
}

}  // namespace planark
