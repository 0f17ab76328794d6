#include "planark/zd.hpp"

#include <limits>
#include <string>

namespace planark {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_dimension: return "invalid-dimension";
    case Errc::invalid_input: return "invalid-input";
    case Errc::too_large: return "too-large";
    case Errc::unsupported_overhang: return "unsupported-overhang";
    case Errc::no_construction: return "no-construction";
    case Errc::incompatible_blocks: return "incompatible-blocks";
    case Errc::invalid_array: return "invalid-array";
    case Errc::not_extractable: return "not-extractable";
    case Errc::unknown_fixture: return "unknown-fixture";
    case Errc::invalid_bipartition: return "invalid-bipartition";
    case Errc::parse_error: return "parse-error";
    case Errc::internal_inconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t d) {
  if (d < 2) {
    throw Error(Errc::invalid_dimension,
                "local dimension must be at least 2, got " + std::to_string(d));
  }
  if (a >= d || b >= d) {
    throw Error(Errc::invalid_input, "operands must lie in [0, d)");
  }
  std::uint64_t sum = std::uint64_t{a} + b;
  if (sum >= d) sum -= d;
  return static_cast<std::uint32_t>(sum);
}

std::uint64_t checked_power(std::uint32_t d, std::uint32_t n, std::uint64_t cap) {
  if (d < 2) {
    throw Error(Errc::invalid_dimension,
                "local dimension must be at least 2, got " + std::to_string(d));
  }
  std::uint64_t value = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (value > cap / d) {
      throw Error(Errc::too_large, std::to_string(d) + "^" + std::to_string(n) +
                                       " exceeds cap " + std::to_string(cap));
    }
    value *= d;
  }
  if (value > cap) {
    throw Error(Errc::too_large, std::to_string(d) + "^" + std::to_string(n) +
                                     " exceeds cap " + std::to_string(cap));
  }
  return value;
}

std::uint64_t encode_index(std::span<const std::uint32_t> digits, std::uint32_t d) {
  if (d < 2) {
    throw Error(Errc::invalid_dimension,
                "local dimension must be at least 2, got " + std::to_string(d));
  }
  std::uint64_t value = 0;
  for (std::uint32_t digit : digits) {
    if (digit >= d) {
      throw Error(Errc::invalid_input, "digit " + std::to_string(digit) +
                                           " out of range for d=" + std::to_string(d));
    }
    value = value * d + digit;
  }
  return value;
}

std::vector<std::uint32_t> decode_index(std::uint64_t value, std::uint32_t d,
                                        std::size_t length) {
  if (d < 2) {
    throw Error(Errc::invalid_dimension,
                "local dimension must be at least 2, got " + std::to_string(d));
  }
  std::vector<std::uint32_t> digits(length, 0);
  for (std::size_t i = length; i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(value % d);
    value /= d;
  }
  if (value != 0) {
    throw Error(Errc::invalid_input, "value does not fit in the given digit count");
  }
  return digits;
}

TupleEnumerator::TupleEnumerator(std::uint32_t k, std::uint32_t d, std::uint64_t cap)
    : digits_(k, 0), d_(d), total_(checked_power(d, k, cap)) {
  if (k == 0) {
    throw Error(Errc::invalid_input, "tuple length must be positive");
  }
}

const std::vector<std::uint32_t>* TupleEnumerator::next() {
  if (emitted_ == total_) return nullptr;
  if (emitted_ > 0) {
    // Odometer increment, least significant digit last.
    std::size_t pos = digits_.size();
    while (pos-- > 0) {
      if (++digits_[pos] < d_) break;
      digits_[pos] = 0;
    }
  }
  ++emitted_;
  return &digits_;
}

std::vector<std::vector<std::uint32_t>> enumerate_tuples(std::uint32_t k,
                                                         std::uint32_t d,
                                                         std::uint64_t cap) {
  TupleEnumerator it(k, d, cap);
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(it.size());
  while (const auto* t = it.next()) out.push_back(*t);
  return out;
}

}  // namespace planark
