#include "planark/lu_basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "planark/block.hpp"

namespace planark {

namespace {

void check_party(const SparseState& state, std::uint32_t party) {
  if (party < 1 || party > state.parties) {
    throw Error(Errc::invalid_input, "party index out of range");
  }
}

}  // namespace

SparseState apply_x(const SparseState& state, std::uint32_t party,
                    std::uint32_t power) {
  check_party(state, party);
  SparseState out = state;
  const std::uint32_t shift = power % state.d;
  if (shift == 0) return out;
  for (SparseTerm& term : out.terms) {
    term.index[party - 1] = mod_add(term.index[party - 1], shift, state.d);
  }
  normalize_terms(out);
  return out;
}

SparseState apply_z(const SparseState& state, std::uint32_t party,
                    std::uint32_t power) {
  check_party(state, party);
  SparseState out = state;
  for (SparseTerm& term : out.terms) {
    term.phase = static_cast<std::uint32_t>(
        (term.phase + std::uint64_t{power} * term.index[party - 1]) % state.d);
  }
  return out;
}

SparseState apply_u(const SparseState& state, const LocalUnitaryLabel& label) {
  if (label.exponents.size() != state.parties) {
    throw Error(Errc::invalid_input, "label length must equal the party count");
  }
  if (label.z_count > state.parties) {
    throw Error(Errc::invalid_input, "Z prefix longer than the party count");
  }
  SparseState out = state;
  for (SparseTerm& term : out.terms) {
    std::uint64_t phase = term.phase;
    for (std::uint32_t p = 0; p < label.z_count; ++p) {
      phase += std::uint64_t{label.exponents[p]} * term.index[p];
    }
    term.phase = static_cast<std::uint32_t>(phase % state.d);
    for (std::uint32_t p = label.z_count; p < state.parties; ++p) {
      term.index[p] = mod_add(term.index[p], label.exponents[p] % state.d, state.d);
    }
  }
  normalize_terms(out);
  return out;
}

std::complex<double> inner_product(const SparseState& s1, const SparseState& s2) {
  if (s1.d != s2.d || s1.parties != s2.parties) {
    throw Error(Errc::invalid_input, "states live on different systems");
  }
  const std::uint32_t d = s1.d;
  // Residue-class census of phase differences over the common support.
  std::vector<std::uint64_t> census(d, 0);
  std::uint64_t overlap = 0;
  std::size_t i = 0, j = 0;
  while (i < s1.terms.size() && j < s2.terms.size()) {
    if (s1.terms[i].index < s2.terms[j].index) {
      ++i;
    } else if (s2.terms[j].index < s1.terms[i].index) {
      ++j;
    } else {
      const std::uint32_t rel = (s2.terms[j].phase + d - s1.terms[i].phase) % d;
      ++census[rel];
      ++overlap;
      ++i;
      ++j;
    }
  }
  if (overlap == 0) return {0.0, 0.0};
  const bool balanced = std::all_of(census.begin(), census.end(),
                                    [&](std::uint64_t c) { return c == census[0]; });
  if (balanced) return {0.0, 0.0};

  const double scale = 1.0 / std::sqrt(static_cast<double>(s1.terms.size()) *
                                       static_cast<double>(s2.terms.size()));
  const double step = 2.0 * std::numbers::pi / d;
  std::complex<double> sum{0.0, 0.0};
  for (std::uint32_t m = 0; m < d; ++m) {
    if (census[m] != 0) {
      sum += static_cast<double>(census[m]) * std::polar(1.0, step * m);
    }
  }
  return sum * scale;
}

void for_each_basis_state(
    const SparseState& state, std::uint32_t k,
    const std::function<void(const LocalUnitaryLabel&, const SparseState&)>& fn) {
  if (k > state.parties) {
    throw Error(Errc::invalid_input, "Z prefix longer than the party count");
  }
  TupleEnumerator labels(state.parties, state.d,
                         std::numeric_limits<std::uint64_t>::max() / 2);
  while (const auto* exponents = labels.next()) {
    LocalUnitaryLabel label{*exponents, k};
    fn(label, apply_u(state, label));
  }
}

std::vector<std::pair<LocalUnitaryLabel, SparseState>> generate_basis(
    const SparseState& state, std::uint32_t k, std::uint64_t cap) {
  checked_power(state.d, state.parties, cap);
  std::vector<std::pair<LocalUnitaryLabel, SparseState>> basis;
  for_each_basis_state(state, k,
                       [&](const LocalUnitaryLabel& label, const SparseState& s) {
                         basis.emplace_back(label, s);
                       });
  return basis;
}

std::vector<SupportLevel> classify_support_levels(std::uint32_t parties,
                                                  std::uint32_t d,
                                                  std::uint32_t k_min,
                                                  std::uint64_t enum_cap) {
  if (k_min < 1) throw Error(Errc::invalid_input, "k_min must be positive");
  if (2 * k_min > parties) {
    throw Error(Errc::invalid_input, "need 2 * k_min <= N");
  }
  const std::uint32_t k_max = parties / 2;
  std::vector<SupportLevel> levels;
  for (std::uint32_t K = k_min; K <= k_max; ++K) {
    SupportLevel level;
    level.strength = K;
    if (K == 1) {
      level.state = build_ghz(parties, d);
    } else {
      PlanarOrthogonalArray array =
          poa_from_block(block_for_length(K, parties), d, enum_cap);
      certify(array, enum_cap);
      level.state = state_from_poa(array);
    }
    level.is_kmin_uniform =
        verify_planar_k_uniform(level.state, k_min, enum_cap).all_passed;
    if (K + 1 <= k_max) {
      level.fails_next_level =
          !verify_planar_k_uniform(level.state, K + 1, enum_cap).all_passed;
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

}  // namespace planark
