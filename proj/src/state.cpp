#include "planark/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace planark {

void normalize_terms(SparseState& state) {
  std::sort(state.terms.begin(), state.terms.end(),
            [](const SparseTerm& a, const SparseTerm& b) { return a.index < b.index; });
  auto dup = std::adjacent_find(
      state.terms.begin(), state.terms.end(),
      [](const SparseTerm& a, const SparseTerm& b) { return a.index == b.index; });
  if (dup != state.terms.end()) {
    throw Error(Errc::invalid_array, "duplicate basis terms in state support");
  }
}

SparseState state_from_poa(const PlanarOrthogonalArray& array) {
  SparseState state;
  state.d = array.levels;
  state.parties = array.factors;
  state.certified = array.certified_strength.value_or(false) &&
                    array.certified_irredundant.value_or(false);
  state.terms.reserve(array.runs);
  for (std::uint32_t row = 0; row < array.runs; ++row) {
    SparseTerm term;
    term.index.assign(array.data.begin() + std::size_t{row} * array.factors,
                      array.data.begin() + std::size_t{row + 1} * array.factors);
    state.terms.push_back(std::move(term));
  }
  normalize_terms(state);
  return state;
}

SparseState build_pme_even(std::uint32_t n, std::uint32_t d) {
  if (n < 1) throw Error(Errc::invalid_input, "need at least one pair");
  SparseState state;
  state.d = d;
  state.parties = 2 * n;
  TupleEnumerator it(n, d);
  state.terms.reserve(it.size());
  while (const auto* tuple = it.next()) {
    SparseTerm term;
    term.index.reserve(2 * n);
    term.index.insert(term.index.end(), tuple->begin(), tuple->end());
    term.index.insert(term.index.end(), tuple->begin(), tuple->end());
    state.terms.push_back(std::move(term));
  }
  return state;
}

SparseState build_pme_odd(std::uint32_t n, std::uint32_t d) {
  if (n < 1) throw Error(Errc::invalid_input, "need at least one pair");
  SparseState state;
  state.d = d;
  state.parties = 2 * n + 1;
  TupleEnumerator it(n, d);
  state.terms.reserve(it.size());
  while (const auto* tuple = it.next()) {
    SparseTerm term;
    term.index.reserve(2 * n + 1);
    term.index.insert(term.index.end(), tuple->begin(), tuple->end());
    term.index.insert(term.index.end(), tuple->begin(), tuple->end());
    std::uint32_t parity = 0;
    for (std::uint32_t v : *tuple) parity = mod_add(parity, v, d);
    term.index.push_back(parity);
    state.terms.push_back(std::move(term));
  }
  return state;
}

SparseState build_ghz(std::uint32_t parties, std::uint32_t d) {
  if (parties < 1) throw Error(Errc::invalid_input, "need at least one party");
  if (d < 2) throw Error(Errc::invalid_dimension, "local dimension must be >= 2");
  SparseState state;
  state.d = d;
  state.parties = parties;
  for (std::uint32_t v = 0; v < d; ++v) {
    SparseTerm term;
    term.index.assign(parties, v);
    state.terms.push_back(std::move(term));
  }
  return state;
}

SparseState build_fixture(std::string_view id) {
  auto xor3 = [](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    return mod_add(mod_add(a, b, d), c, d);
  };
  SparseState state;
  if (id == "eq4") {
    state.d = 2;
    state.parties = 5;
    for (std::uint32_t i = 0; i < 2; ++i)
      for (std::uint32_t j = 0; j < 2; ++j)
        state.terms.push_back({{i, j, i, j, mod_add(i, j, 2)}, 0});
  } else if (id == "eq5") {
    state.d = 2;
    state.parties = 7;
    for (std::uint32_t i = 0; i < 2; ++i)
      for (std::uint32_t j = 0; j < 2; ++j)
        for (std::uint32_t k = 0; k < 2; ++k)
          state.terms.push_back({{i, j, k, i, j, k, xor3(i, j, k, 2)}, 0});
  } else if (id == "eq7") {
    state.d = 3;
    state.parties = 8;
    for (std::uint32_t i = 0; i < 3; ++i)
      for (std::uint32_t j = 0; j < 3; ++j)
        for (std::uint32_t k = 0; k < 3; ++k) {
          const std::uint32_t p = xor3(i, j, k, 3);
          state.terms.push_back({{i, j, k, p, i, j, k, p}, 0});
        }
  } else if (id == "eq8") {
    state.d = 5;
    state.parties = 10;
    for (std::uint32_t i1 = 0; i1 < 5; ++i1)
      for (std::uint32_t i2 = 0; i2 < 5; ++i2)
        for (std::uint32_t i3 = 0; i3 < 5; ++i3)
          for (std::uint32_t i4 = 0; i4 < 5; ++i4)
            state.terms.push_back({{i1, i2, i3, i4, i1, i2, i3, i4,
                                    mod_add(i1, i3, 5), mod_add(i2, i4, 5)},
                                   0});
  } else {
    throw Error(Errc::unknown_fixture, "unknown fixture id: " + std::string(id));
  }
  normalize_terms(state);
  return state;
}

DenseState to_dense(const SparseState& state, std::uint64_t dense_cap) {
  const std::uint64_t dim = checked_power(state.d, state.parties, dense_cap);
  DenseState dense;
  dense.d = state.d;
  dense.parties = state.parties;
  dense.amplitudes.assign(dim, {0.0, 0.0});
  const double magnitude = 1.0 / std::sqrt(static_cast<double>(state.terms.size()));
  const double step = 2.0 * std::numbers::pi / state.d;
  for (const SparseTerm& term : state.terms) {
    const std::uint64_t flat = encode_index(term.index, state.d);
    dense.amplitudes[flat] = std::polar(magnitude, step * term.phase);
  }
  return dense;
}

std::vector<SparseState> extract_shares(const SparseState& state,
                                        std::uint32_t party) {
  if (party < 1 || party > state.parties) {
    throw Error(Errc::invalid_input, "party index out of range");
  }
  if (state.parties < 2) {
    throw Error(Errc::not_extractable, "need at least two parties to split");
  }
  const std::size_t r = state.terms.size();
  if (r % state.d != 0) {
    throw Error(Errc::not_extractable,
                "support size not divisible by d: marginal cannot be uniform");
  }
  const std::size_t per_value = r / state.d;

  std::vector<SparseState> shares(state.d);
  for (auto& share : shares) {
    share.d = state.d;
    share.parties = state.parties - 1;
    share.terms.reserve(per_value);
  }
  for (const SparseTerm& term : state.terms) {
    const std::uint32_t value = term.index[party - 1];
    SparseTerm rest;
    rest.phase = term.phase;
    rest.index.reserve(state.parties - 1);
    for (std::uint32_t p = 0; p < state.parties; ++p) {
      if (p != party - 1) rest.index.push_back(term.index[p]);
    }
    shares[value].terms.push_back(std::move(rest));
  }
  for (auto& share : shares) {
    if (share.terms.size() != per_value) {
      throw Error(Errc::not_extractable,
                  "marginal at party " + std::to_string(party) +
                      " is not uniform over Z_d");
    }
    normalize_terms(share);
  }
  return shares;
}

SparseState reassemble_shares(const std::vector<SparseState>& shares,
                              std::uint32_t party) {
  if (shares.empty()) throw Error(Errc::invalid_input, "no shares given");
  const std::uint32_t d = shares.front().d;
  if (shares.size() != d) {
    throw Error(Errc::invalid_input, "need exactly d shares");
  }
  SparseState state;
  state.d = d;
  state.parties = shares.front().parties + 1;
  if (party < 1 || party > state.parties) {
    throw Error(Errc::invalid_input, "party index out of range");
  }
  for (std::uint32_t value = 0; value < d; ++value) {
    const SparseState& share = shares[value];
    if (share.d != d || share.parties + 1 != state.parties) {
      throw Error(Errc::invalid_input, "shares disagree on d or party count");
    }
    for (const SparseTerm& term : share.terms) {
      SparseTerm full;
      full.phase = term.phase;
      full.index = term.index;
      full.index.insert(full.index.begin() + (party - 1), value);
      state.terms.push_back(std::move(full));
    }
  }
  normalize_terms(state);
  return state;
}

}  // namespace planark
