#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "planark/poa.hpp"
#include "planark/zd.hpp"

namespace planark {

/// One computational-basis term: the party indices and a phase exponent m,
/// standing for the amplitude omega^m / sqrt(r) with omega = exp(2*pi*i/d).
struct SparseTerm {
  std::vector<std::uint32_t> index;  // length N, entries in [0, d)
  std::uint32_t phase = 0;           // exponent mod d

  bool operator==(const SparseTerm&) const = default;
};

/// Uniform-magnitude superposition over r distinct basis states. Phases are
/// kept as exact exponents mod d; floats only appear after to_dense().
/// Terms are kept sorted by basis index (lexicographic == flat order).
struct SparseState {
  std::uint32_t d = 0;
  std::uint32_t parties = 0;  // N
  std::vector<SparseTerm> terms;
  bool certified = false;  // built from a strength- and irredundancy-certified array

  std::size_t support_size() const { return terms.size(); }
  bool operator==(const SparseState& o) const {
    return d == o.d && parties == o.parties && terms == o.terms;
  }
};

/// Sorts terms into canonical order; throws invalid_array on duplicates.
void normalize_terms(SparseState& state);

/// One zero-phase term per array row; r = d^k terms when the array is a
/// block-generated POA.
SparseState state_from_poa(const PlanarOrthogonalArray& array);

/// 2n parties, party k paired with party n+k carrying the same index.
SparseState build_pme_even(std::uint32_t n, std::uint32_t d);

/// 2n+1 parties: the even layout plus a final party carrying the mod-d sum
/// of all n indices. n = 1 gives the GHZ state on 3 parties.
SparseState build_pme_odd(std::uint32_t n, std::uint32_t d);

/// Generalized GHZ state: sum_i |i...i> / sqrt(d) on `parties` qudits.
SparseState build_ghz(std::uint32_t parties, std::uint32_t d);

/// Literal constructions of the worked example states:
///   eq4: d=2, N=5,  terms |i,j,i,j,i+j>
///   eq5: d=2, N=7,  terms |i,j,k,i,j,k,i+j+k>
///   eq7: d=3, N=8,  terms |i1,i2,i3,i1+i2+i3,i1,i2,i3,i1+i2+i3>
///   eq8: d=5, N=10, terms |i1..i4,i1..i4,i1+i3,i2+i4>
SparseState build_fixture(std::string_view id);

struct DenseState {
  std::uint32_t d = 0;
  std::uint32_t parties = 0;
  std::vector<std::complex<double>> amplitudes;  // length d^N
};

DenseState to_dense(const SparseState& state,
                    std::uint64_t dense_cap = kDefaultDenseCap);

/// Splits |Psi> = (1/sqrt(d)) sum_k |k>_a |S_k> at the given 1-based party.
/// Requires each local value to appear in exactly r/d terms.
std::vector<SparseState> extract_shares(const SparseState& state,
                                        std::uint32_t party);

/// Inverse of extract_shares: reinserts the party coordinate.
SparseState reassemble_shares(const std::vector<SparseState>& shares,
                              std::uint32_t party);

}  // namespace planark
