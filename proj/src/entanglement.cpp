#include "planark/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "planark/jacobi.hpp"

namespace planark {

namespace {

constexpr double kZeroTol = 1e-10;
constexpr double kEigenClamp = 1e-12;

void check_subset(std::span<const std::uint32_t> subset, std::uint32_t parties) {
  if (subset.empty() || subset.size() >= parties) {
    throw Error(Errc::invalid_input, "subset must be nonempty and proper");
  }
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > parties) {
      throw Error(Errc::invalid_input, "party index out of range");
    }
    if (i > 0 && subset[i] <= subset[i - 1]) {
      throw Error(Errc::invalid_input, "subset must be sorted and duplicate-free");
    }
  }
}

std::complex<double> eval_cyclotomic(std::span<const std::int64_t> coeffs,
                                     std::uint32_t d) {
  const double step = 2.0 * std::numbers::pi / d;
  std::complex<double> sum{0.0, 0.0};
  for (std::uint32_t m = 0; m < d; ++m) {
    if (coeffs[m] != 0) {
      sum += static_cast<double>(coeffs[m]) * std::polar(1.0, step * m);
    }
  }
  return sum;
}

/// Zero test for an integer combination of the d-th roots of unity, scaled by
/// 1/denom. All-equal coefficient vectors are exactly zero because the roots
/// sum to zero; otherwise the numeric value decides at the 1e-10 entry bound.
bool cyclotomic_is_zero(std::span<const std::int64_t> coeffs, std::uint32_t d,
                        std::uint64_t denom) {
  bool all_equal = true;
  for (std::uint32_t m = 1; m < d; ++m) {
    if (coeffs[m] != coeffs[0]) {
      all_equal = false;
      break;
    }
  }
  if (all_equal) return true;
  return std::abs(eval_cyclotomic(coeffs, d)) <
         kZeroTol * static_cast<double>(denom);
}

}  // namespace

std::vector<std::uint32_t> Bipartition::part_b() const {
  std::vector<std::uint32_t> b;
  b.reserve(parties - part_a.size());
  std::size_t pos = 0;
  for (std::uint32_t p = 1; p <= parties; ++p) {
    if (pos < part_a.size() && part_a[pos] == p) {
      ++pos;
    } else {
      b.push_back(p);
    }
  }
  return b;
}

BipartitionProfile bipartition_profile(const Bipartition& bp, StateFamily family) {
  const std::uint32_t parties = bp.parties;
  if ((family == StateFamily::pme_even && parties % 2 != 0) ||
      (family == StateFamily::pme_odd && parties % 2 != 1)) {
    throw Error(Errc::invalid_bipartition, "party count does not match the family");
  }
  check_subset(bp.part_a, parties);
  const std::uint32_t n = parties / 2;  // pair count; odd family has party 2n+1 extra

  std::vector<bool> in_a(parties + 1, false);
  for (std::uint32_t p : bp.part_a) in_a[p] = true;

  // Odd-family convention: the odd party belongs to B. Swap sides if needed;
  // every derived quantity is symmetric under the swap except the labels.
  bool swapped = false;
  if (family == StateFamily::pme_odd && in_a[parties]) {
    for (std::uint32_t p = 1; p <= parties; ++p) in_a[p] = !in_a[p];
    swapped = true;
  }
  (void)swapped;

  BipartitionProfile profile;
  for (std::uint32_t i = 1; i <= n; ++i) {
    const std::uint32_t partner = n + i;
    const bool first_in_a = in_a[i];
    const bool second_in_a = in_a[partner];
    if (first_in_a && second_in_a) {
      profile.a_paired.push_back(i);
      profile.a_paired.push_back(partner);
      ++profile.pairs;
    } else if (!first_in_a && !second_in_a) {
      profile.b_paired.push_back(i);
      profile.b_paired.push_back(partner);
    } else {
      if (first_in_a) {
        profile.a_unpaired.push_back(i);
        profile.b_unpaired.push_back(partner);
      } else {
        profile.a_unpaired.push_back(partner);
        profile.b_unpaired.push_back(i);
      }
    }
  }
  if (family == StateFamily::pme_odd) {
    profile.b_unpaired.push_back(parties);
  }
  profile.unpaired = static_cast<std::uint32_t>(profile.a_unpaired.size());
  std::sort(profile.a_unpaired.begin(), profile.a_unpaired.end());
  std::sort(profile.b_unpaired.begin(), profile.b_unpaired.end());
  std::sort(profile.a_paired.begin(), profile.a_paired.end());
  std::sort(profile.b_paired.begin(), profile.b_paired.end());
  return profile;
}

double predicted_entropy(const BipartitionProfile& profile, StateFamily family) {
  if (family == StateFamily::pme_even) {
    return static_cast<double>(profile.unpaired);
  }
  return static_cast<double>(profile.unpaired + profile.delta());
}

DensityMatrix DensityMatrix::exact(std::uint32_t d, std::uint64_t dim,
                                   std::uint64_t denom,
                                   std::vector<std::int64_t> coeffs) {
  DensityMatrix rho;
  rho.d_ = d;
  rho.dim_ = dim;
  rho.exact_ = true;
  rho.denom_ = denom;
  rho.coeffs_ = std::move(coeffs);
  return rho;
}

DensityMatrix DensityMatrix::numeric(std::uint32_t d, std::uint64_t dim,
                                     std::vector<std::complex<double>> values) {
  DensityMatrix rho;
  rho.d_ = d;
  rho.dim_ = dim;
  rho.exact_ = false;
  rho.values_ = std::move(values);
  return rho;
}

std::span<const std::int64_t> DensityMatrix::coefficients(std::uint64_t row,
                                                          std::uint64_t col) const {
  if (!exact_) {
    throw Error(Errc::invalid_input, "numeric density matrix has no coefficients");
  }
  return std::span<const std::int64_t>(coeffs_).subspan((row * dim_ + col) * d_, d_);
}

std::complex<double> DensityMatrix::value(std::uint64_t row, std::uint64_t col) const {
  if (exact_) {
    return eval_cyclotomic(coefficients(row, col), d_) /
           static_cast<double>(denom_);
  }
  return values_[row * dim_ + col];
}

std::vector<std::complex<double>> DensityMatrix::to_complex() const {
  if (!exact_) return values_;
  std::vector<std::complex<double>> out(dim_ * dim_);
  for (std::uint64_t i = 0; i < dim_; ++i) {
    for (std::uint64_t j = 0; j < dim_; ++j) {
      out[i * dim_ + j] = value(i, j);
    }
  }
  return out;
}

DensityMatrix reduced_density(const SparseState& state,
                              std::span<const std::uint32_t> subset,
                              std::uint64_t enum_cap) {
  check_subset(subset, state.parties);
  const std::uint32_t d = state.d;
  const std::uint64_t dim = checked_power(d, static_cast<std::uint32_t>(subset.size()),
                                          enum_cap);
  if (dim * dim > (std::uint64_t{1} << 28) / d) {
    throw Error(Errc::too_large, "reduced density matrix would be too large");
  }

  std::vector<bool> keep(state.parties + 1, false);
  for (std::uint32_t p : subset) keep[p] = true;

  // Group terms by their complement restriction; only within-group pairs
  // contribute since the traced-out parties must agree.
  std::map<std::vector<std::uint32_t>, std::vector<std::pair<std::uint64_t, std::uint32_t>>>
      groups;
  std::vector<std::uint32_t> on_subset(subset.size());
  std::vector<std::uint32_t> on_complement;
  on_complement.reserve(state.parties - subset.size());
  for (const SparseTerm& term : state.terms) {
    on_complement.clear();
    std::size_t a = 0;
    for (std::uint32_t p = 1; p <= state.parties; ++p) {
      if (keep[p]) {
        on_subset[a++] = term.index[p - 1];
      } else {
        on_complement.push_back(term.index[p - 1]);
      }
    }
    groups[on_complement].emplace_back(encode_index(on_subset, d), term.phase);
  }

  std::vector<std::int64_t> coeffs(dim * dim * d, 0);
  for (const auto& [_, members] : groups) {
    for (const auto& [x, phase_x] : members) {
      for (const auto& [y, phase_y] : members) {
        const std::uint32_t rel = (phase_x + d - phase_y) % d;
        ++coeffs[(x * dim + y) * d + rel];
      }
    }
  }
  return DensityMatrix::exact(d, dim, state.terms.size(), std::move(coeffs));
}

DensityMatrix dense_reduced_density(const DenseState& state,
                                    std::span<const std::uint32_t> subset,
                                    std::uint64_t enum_cap) {
  check_subset(subset, state.parties);
  const std::uint32_t d = state.d;
  const std::uint32_t m = static_cast<std::uint32_t>(subset.size());
  const std::uint64_t dim = checked_power(d, m, enum_cap);
  checked_power(d, state.parties - m, enum_cap);

  std::vector<bool> keep(state.parties + 1, false);
  for (std::uint32_t p : subset) keep[p] = true;

  // Positional weights of each party digit in the subset / complement flat
  // indices, in the big-endian order used everywhere.
  std::vector<std::uint64_t> weight_subset(state.parties, 0);
  std::vector<std::uint64_t> weight_complement(state.parties, 0);
  {
    std::uint64_t w = 1;
    for (std::uint32_t p = state.parties; p >= 1; --p) {
      if (keep[p]) {
        weight_subset[p - 1] = w;
        w *= d;
      }
    }
    w = 1;
    for (std::uint32_t p = state.parties; p >= 1; --p) {
      if (!keep[p]) {
        weight_complement[p - 1] = w;
        w *= d;
      }
    }
  }

  // Single pass over the full amplitude vector, bucketing nonzero entries by
  // complement index; each bucket contributes an outer product.
  std::vector<std::uint32_t> digits(state.parties, 0);
  std::uint64_t sub_flat = 0;
  std::uint64_t comp_flat = 0;
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::complex<double>>> nonzero;
  const std::uint64_t total = state.amplitudes.size();
  for (std::uint64_t g = 0;; ++g) {
    const std::complex<double>& amp = state.amplitudes[g];
    if (amp.real() != 0.0 || amp.imag() != 0.0) {
      nonzero.emplace_back(comp_flat, sub_flat, amp);
    }
    if (g + 1 == total) break;
    // Odometer step, updating both flat projections incrementally.
    std::size_t pos = state.parties;
    while (pos-- > 0) {
      const std::uint64_t w = keep[pos + 1] ? weight_subset[pos] : weight_complement[pos];
      std::uint64_t& flat = keep[pos + 1] ? sub_flat : comp_flat;
      if (++digits[pos] < d) {
        flat += w;
        break;
      }
      digits[pos] = 0;
      flat -= w * (d - 1);
    }
  }

  std::sort(nonzero.begin(), nonzero.end(),
            [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });

  std::vector<std::complex<double>> values(dim * dim, {0.0, 0.0});
  std::size_t i = 0;
  while (i < nonzero.size()) {
    std::size_t j = i;
    while (j < nonzero.size() && std::get<0>(nonzero[j]) == std::get<0>(nonzero[i])) ++j;
    for (std::size_t u = i; u < j; ++u) {
      for (std::size_t v = i; v < j; ++v) {
        values[std::get<1>(nonzero[u]) * dim + std::get<1>(nonzero[v])] +=
            std::get<2>(nonzero[u]) * std::conj(std::get<2>(nonzero[v]));
      }
    }
    i = j;
  }
  return DensityMatrix::numeric(d, dim, std::move(values));
}

bool is_maximally_mixed(const DensityMatrix& rho, std::uint32_t d, std::uint32_t m) {
  const std::uint64_t dim = checked_power(d, m, std::uint64_t{1} << 62);
  if (rho.dim() != dim || rho.local_dim() != d) {
    throw Error(Errc::invalid_input, "density matrix dimension is not d^m");
  }
  if (rho.is_exact()) {
    const std::uint64_t denom = rho.denominator();
    const bool divisible = denom % dim == 0;
    std::vector<std::int64_t> shifted(d);
    for (std::uint64_t i = 0; i < dim; ++i) {
      for (std::uint64_t j = 0; j < dim; ++j) {
        auto coeffs = rho.coefficients(i, j);
        if (i == j) {
          if (divisible) {
            std::copy(coeffs.begin(), coeffs.end(), shifted.begin());
            shifted[0] -= static_cast<std::int64_t>(denom / dim);
            if (!cyclotomic_is_zero(shifted, d, denom)) return false;
          } else {
            const double expect = 1.0 / static_cast<double>(dim);
            if (std::abs(rho.value(i, j) - expect) >= kZeroTol) return false;
          }
        } else {
          if (!cyclotomic_is_zero(coeffs, d, denom)) return false;
        }
      }
    }
    return true;
  }
  const double expect = 1.0 / static_cast<double>(dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    for (std::uint64_t j = 0; j < dim; ++j) {
      std::complex<double> target = (i == j) ? std::complex<double>{expect, 0.0}
                                             : std::complex<double>{0.0, 0.0};
      if (std::abs(rho.value(i, j) - target) >= kZeroTol) return false;
    }
  }
  return true;
}

UniformityReport verify_planar_k_uniform(const SparseState& state, std::uint32_t k,
                                         std::uint64_t enum_cap) {
  if (k < 1 || k > state.parties / 2) {
    throw Error(Errc::invalid_input,
                "window size must lie in [1, floor(N/2)], got " + std::to_string(k));
  }
  UniformityReport report;
  report.k = k;
  std::vector<std::uint32_t> window(k);
  for (std::uint32_t start = 1; start <= state.parties; ++start) {
    for (std::uint32_t w = 0; w < k; ++w) {
      window[w] = (start - 1 + w) % state.parties + 1;
    }
    std::sort(window.begin(), window.end());
    const DensityMatrix rho = reduced_density(state, window, enum_cap);
    const bool ok = is_maximally_mixed(rho, state.d, k);
    report.windows.push_back({start, ok});
    if (!ok) report.all_passed = false;
  }
  return report;
}

double entropy_of(const DensityMatrix& rho, std::uint32_t d, EntropyUnits units) {
  const std::size_t n = static_cast<std::size_t>(rho.dim());
  std::vector<double> eigenvalues = hermitian_eigenvalues(rho.to_complex(), n);
  double entropy = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < kEigenClamp) continue;  // 0 log 0 := 0, clamp rounding noise
    entropy -= lambda * std::log(lambda);
  }
  if (units == EntropyUnits::log_d) entropy /= std::log(static_cast<double>(d));
  return entropy;
}

double von_neumann_entropy(const SparseState& state, const Bipartition& bp,
                           EntropyUnits units, std::uint64_t enum_cap) {
  if (bp.parties != state.parties) {
    throw Error(Errc::invalid_bipartition, "bipartition party count mismatch");
  }
  check_subset(bp.part_a, state.parties);
  std::vector<std::uint32_t> side = bp.part_a;
  if (side.size() > state.parties - side.size()) side = bp.part_b();
  const DensityMatrix rho = reduced_density(state, side, enum_cap);
  return entropy_of(rho, state.d, units);
}

bool is_genuinely_entangled(const SparseState& state, std::uint32_t max_parties,
                            std::uint64_t enum_cap) {
  if (state.parties < 2) {
    throw Error(Errc::invalid_input, "need at least two parties");
  }
  if (state.parties > max_parties) {
    throw Error(Errc::too_large,
                "bipartition sweep over " + std::to_string(state.parties) +
                    " parties exceeds the configured cap");
  }
  // Enumerate subsets of {1..N-1}: party N stays in B, covering each
  // bipartition exactly once.
  const std::uint64_t limit = std::uint64_t{1} << (state.parties - 1);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    Bipartition bp;
    bp.parties = state.parties;
    for (std::uint32_t p = 1; p < state.parties; ++p) {
      if (mask & (std::uint64_t{1} << (p - 1))) bp.part_a.push_back(p);
    }
    if (von_neumann_entropy(state, bp, EntropyUnits::log_d, enum_cap) <= 1e-9) {
      return false;
    }
  }
  return true;
}

}  // namespace planark
