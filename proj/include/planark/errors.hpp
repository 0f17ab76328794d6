#pragma once

#include <stdexcept>
#include <string>

namespace planark {

enum class Errc {
  invalid_dimension,
  invalid_input,
  too_large,
  unsupported_overhang,
  no_construction,
  incompatible_blocks,
  invalid_array,
  not_extractable,
  unknown_fixture,
  invalid_bipartition,
  parse_error,
  internal_inconsistency,
};

/// Library-wide exception carrying a machine-readable code.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

const char* errc_name(Errc code);

}  // namespace planark
