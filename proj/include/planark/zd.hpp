#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "planark/errors.hpp"

namespace planark {

/// Default ceiling on exhaustive enumerations of Z_d^k (d^k values).
inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t{1} << 24;
/// Default ceiling on dense state vectors (d^N complex entries).
inline constexpr std::uint64_t kDefaultDenseCap = std::uint64_t{1} << 22;

/// (a + b) mod d for a, b in [0, d). Throws invalid_dimension if d < 2.
std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t d);

/// d^n, throwing too_large when the result would exceed `cap`.
std::uint64_t checked_power(std::uint32_t d, std::uint32_t n, std::uint64_t cap);

/// Big-endian mixed-radix value of a digit string over Z_d.
/// Lexicographic order on digit vectors equals numeric order on the result.
std::uint64_t encode_index(std::span<const std::uint32_t> digits, std::uint32_t d);

/// Inverse of encode_index for a known digit count.
std::vector<std::uint32_t> decode_index(std::uint64_t value, std::uint32_t d,
                                        std::size_t length);

/// Walks all d^k tuples of Z_d^k in ascending flat-index order, reusing one
/// buffer. next() returns nullptr once exhausted.
class TupleEnumerator {
public:
  TupleEnumerator(std::uint32_t k, std::uint32_t d,
                  std::uint64_t cap = kDefaultEnumCap);

  const std::vector<std::uint32_t>* next();
  std::uint64_t size() const { return total_; }

private:
  std::vector<std::uint32_t> digits_;
  std::uint32_t d_;
  std::uint64_t total_;
  std::uint64_t emitted_ = 0;
};

/// Materialized enumeration of Z_d^k; respects the same cap.
std::vector<std::vector<std::uint32_t>> enumerate_tuples(
    std::uint32_t k, std::uint32_t d, std::uint64_t cap = kDefaultEnumCap);

}  // namespace planark
