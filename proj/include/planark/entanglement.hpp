#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "planark/state.hpp"
#include "planark/zd.hpp"

namespace planark {

/// A bipartition of parties {1..N} described by one side; the other side is
/// the complement. Both sides must be nonempty for entropy queries.
struct Bipartition {
  std::uint32_t parties = 0;            // N
  std::vector<std::uint32_t> part_a;    // sorted, 1-based

  std::vector<std::uint32_t> part_b() const;
};

enum class StateFamily { pme_even, pme_odd };

/// Pairing bookkeeping for the entropy formulas: party i partners with party
/// n+i; a party is paired when its partner sits on the same side of the cut.
/// For the odd family the last party is the extra unpaired member of B.
struct BipartitionProfile {
  std::uint32_t unpaired = 0;  // s = |A_u|
  std::uint32_t pairs = 0;     // t = |A_p| / 2
  std::vector<std::uint32_t> a_unpaired, a_paired, b_unpaired, b_paired;

  std::uint32_t delta() const { return pairs > 0 ? 1 : 0; }
};

/// Profiles a bipartition of 2n (even family) or 2n+1 (odd family) parties.
/// For the odd family, sides are swapped internally if part_a contains the
/// last party, so that it always lands in B.
BipartitionProfile bipartition_profile(const Bipartition& bp, StateFamily family);

/// Closed-form entropy in units of log d: s for the even family,
/// s + delta(t) for the odd family.
double predicted_entropy(const BipartitionProfile& profile, StateFamily family);

/// Reduced density matrix over a party subset. Built exactly from a sparse
/// state (integer cyclotomic coefficients over omega^0..omega^{d-1} with
/// common denominator r) or numerically from a dense vector.
class DensityMatrix {
public:
  static DensityMatrix exact(std::uint32_t d, std::uint64_t dim,
                             std::uint64_t denom, std::vector<std::int64_t> coeffs);
  static DensityMatrix numeric(std::uint32_t d, std::uint64_t dim,
                               std::vector<std::complex<double>> values);

  std::uint32_t local_dim() const { return d_; }
  std::uint64_t dim() const { return dim_; }
  bool is_exact() const { return exact_; }
  std::uint64_t denominator() const { return denom_; }

  /// Cyclotomic coefficient vector of one entry (exact mode only).
  std::span<const std::int64_t> coefficients(std::uint64_t row,
                                             std::uint64_t col) const;

  /// Entry value; evaluates the coefficient vector in exact mode.
  std::complex<double> value(std::uint64_t row, std::uint64_t col) const;

  /// Full matrix as complex floats.
  std::vector<std::complex<double>> to_complex() const;

private:
  DensityMatrix() = default;
  std::uint32_t d_ = 0;
  std::uint64_t dim_ = 0;
  bool exact_ = false;
  std::uint64_t denom_ = 1;
  std::vector<std::int64_t> coeffs_;               // dim*dim*d, exact mode
  std::vector<std::complex<double>> values_;       // dim*dim, numeric mode
};

/// Exact partial trace of |s><s| onto the given sorted 1-based party subset.
DensityMatrix reduced_density(const SparseState& state,
                              std::span<const std::uint32_t> subset,
                              std::uint64_t enum_cap = kDefaultEnumCap);

/// Independent numeric route: partial trace computed from the dense
/// amplitude vector, never consulting the sparse representation.
DensityMatrix dense_reduced_density(const DenseState& state,
                                    std::span<const std::uint32_t> subset,
                                    std::uint64_t enum_cap = kDefaultEnumCap);

/// rho == I/d^m. Exact mode decides entries as cyclotomic rationals (with the
/// all-coefficients-equal fast accept); numeric mode uses a 1e-10 entry bound.
bool is_maximally_mixed(const DensityMatrix& rho, std::uint32_t d, std::uint32_t m);

struct WindowCheck {
  std::uint32_t start = 0;  // 1-based first party of the window
  bool passed = false;
};

struct UniformityReport {
  std::uint32_t k = 0;
  bool all_passed = true;
  std::vector<WindowCheck> windows;
};

/// Checks all N cyclic k-windows for exact maximal mixedness.
UniformityReport verify_planar_k_uniform(const SparseState& state, std::uint32_t k,
                                         std::uint64_t enum_cap = kDefaultEnumCap);

enum class EntropyUnits { log_d, natural };

/// -sum lambda log lambda of a density matrix, eigenvalues below 1e-12
/// clamped to zero before the sum.
double entropy_of(const DensityMatrix& rho, std::uint32_t d,
                  EntropyUnits units = EntropyUnits::log_d);

/// Von Neumann entropy of the cut, computed on the smaller side.
double von_neumann_entropy(const SparseState& state, const Bipartition& bp,
                           EntropyUnits units = EntropyUnits::log_d,
                           std::uint64_t enum_cap = kDefaultEnumCap);

/// True iff every one of the 2^{N-1} - 1 bipartitions has entropy > 1e-9.
bool is_genuinely_entangled(const SparseState& state,
                            std::uint32_t max_parties = 16,
                            std::uint64_t enum_cap = kDefaultEnumCap);

}  // namespace planark
