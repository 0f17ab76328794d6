#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "planark/entanglement.hpp"
#include "planark/state.hpp"

namespace planark {

/// Exponent vector for the product operator U(a) = Z^{a_1} x ... x Z^{a_k}
/// x X^{a_{k+1}} x ... x X^{a_N}: the first z_count parties receive Z powers,
/// the rest X powers.
struct LocalUnitaryLabel {
  std::vector<std::uint32_t> exponents;  // length N, entries in [0, d)
  std::uint32_t z_count = 0;             // k

  bool operator==(const LocalUnitaryLabel&) const = default;
};

/// Cyclic shift of the basis index at one party: X^power |j> = |j + power>.
SparseState apply_x(const SparseState& state, std::uint32_t party,
                    std::uint32_t power);

/// Phase kick at one party: Z^power |j> = omega^{power j} |j>.
SparseState apply_z(const SparseState& state, std::uint32_t party,
                    std::uint32_t power);

SparseState apply_u(const SparseState& state, const LocalUnitaryLabel& label);

/// <s1|s2> with exact phase bookkeeping; returns exact zero when the phase
/// differences over the common support cover every residue class equally.
std::complex<double> inner_product(const SparseState& s1, const SparseState& s2);

/// Streams U(a)|state> for every label a in Z_d^N in ascending flat order.
void for_each_basis_state(
    const SparseState& state, std::uint32_t k,
    const std::function<void(const LocalUnitaryLabel&, const SparseState&)>& fn);

/// Materialized variant; throws too_large when d^N exceeds the cap.
std::vector<std::pair<LocalUnitaryLabel, SparseState>> generate_basis(
    const SparseState& state, std::uint32_t k,
    std::uint64_t cap = kDefaultEnumCap);

struct SupportLevel {
  std::uint32_t strength = 0;  // K
  SparseState state;           // minimal-support planar K-uniform state
  bool is_kmin_uniform = false;
  std::optional<bool> fails_next_level;  // set unless K == floor(N/2)
};

/// One minimal-support state per K in [k_min, floor(N/2)], built from circle
/// blocks (GHZ for K = 1). Each level is checked planar k_min-uniform and,
/// where applicable, checked to fail planar (K+1)-uniformity.
std::vector<SupportLevel> classify_support_levels(
    std::uint32_t parties, std::uint32_t d, std::uint32_t k_min,
    std::uint64_t enum_cap = kDefaultEnumCap);

}  // namespace planark
