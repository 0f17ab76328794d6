#include <doctest.h>

#include <algorithm>
#include <complex>
#include <string>
#include <vector>

#include "planark/lu_basis.hpp"
#include "planark/serialization.hpp"
#include "planark/state.hpp"

using namespace planark;

namespace {

std::complex<double> dense_dot(const DenseState& a, const DenseState& b) {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    sum += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return sum;
}

SparseState permute_parties(const SparseState& state,
                            const std::vector<std::uint32_t>& order) {
  SparseState out = state;
  for (std::size_t t = 0; t < state.terms.size(); ++t) {
    for (std::size_t p = 0; p < order.size(); ++p) {
      out.terms[t].index[p] = state.terms[t].index[order[p] - 1];
    }
  }
  normalize_terms(out);
  return out;
}

}  // namespace

TEST_CASE("state_from_poa carries rows verbatim") {
  PlanarOrthogonalArray array = poa_from_block(block_for_length(2, 5), 2);
  certify(array);
  const SparseState state = state_from_poa(array);
  CHECK(state == build_fixture("eq4"));
  CHECK(state.certified);

  PlanarOrthogonalArray single;
  single.runs = 1;
  single.factors = 3;
  single.levels = 2;
  single.strength = 1;
  single.data = {1, 0, 1};
  const SparseState product = state_from_poa(single);
  CHECK(product.support_size() == 1);
  CHECK(product.terms.front().index == std::vector<std::uint32_t>{1, 0, 1});

  PlanarOrthogonalArray dup = single;
  dup.runs = 2;
  dup.data = {1, 0, 1, 1, 0, 1};
  CHECK_THROWS_AS(state_from_poa(dup), Error);
}

TEST_CASE("even-family construction") {
  const SparseState bell = build_pme_even(1, 2);
  CHECK(bell.parties == 2);
  REQUIRE(bell.support_size() == 2);
  CHECK(bell.terms[0].index == std::vector<std::uint32_t>{0, 0});
  CHECK(bell.terms[1].index == std::vector<std::uint32_t>{1, 1});

  // Oracle for n=2: two Bell pairs laid out as (1,2)(3,4), parties reordered
  // to the k <-> n+k pairing.
  const SparseState two = build_pme_even(2, 2);
  SparseState pairs;
  pairs.d = 2;
  pairs.parties = 4;
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j)
      pairs.terms.push_back({{i, i, j, j}, 0});
  normalize_terms(pairs);
  CHECK(two == permute_parties(pairs, {1, 3, 2, 4}));

  CHECK(build_pme_even(3, 3).support_size() == 27);
}

TEST_CASE("odd-family construction") {
  CHECK(build_pme_odd(2, 2) == build_fixture("eq4"));
  CHECK(build_pme_odd(3, 2) == build_fixture("eq5"));
  CHECK(build_pme_odd(1, 2) == build_ghz(3, 2));
}

TEST_CASE("families coincide with their circle-block arrays") {
  for (std::uint32_t n = 2; n <= 3; ++n) {
    for (std::uint32_t d : {2u, 3u}) {
      const CircleBlock identity = build_canonical_block(n, 0);
      const SparseState even =
          state_from_poa(poa_from_block(paste_blocks(identity, identity), d));
      CHECK(even == build_pme_even(n, d));

      const SparseState odd = state_from_poa(
          poa_from_block(paste_blocks(identity, build_canonical_block(n, 1)), d));
      CHECK(odd == build_pme_odd(n, d));
    }
  }
}

TEST_CASE("fixtures have minimal support d^k") {
  CHECK(build_fixture("eq4").support_size() == 4);
  CHECK(build_fixture("eq5").support_size() == 8);
  CHECK(build_fixture("eq7").support_size() == 27);
  CHECK(build_fixture("eq8").support_size() == 625);
  CHECK_THROWS_AS(build_fixture("eq9"), Error);

  // eq8's support is exactly the (4,10) block array.
  CHECK(build_fixture("eq8") ==
        state_from_poa(poa_from_block(block_for_length(4, 10), 5)));
}

TEST_CASE("to_dense places amplitudes at flat indices") {
  const DenseState bell = to_dense(build_pme_even(1, 2));
  REQUIRE(bell.amplitudes.size() == 4);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(bell.amplitudes[0].real() == doctest::Approx(inv_sqrt2).epsilon(1e-12));
  CHECK(std::abs(bell.amplitudes[1]) == 0.0);
  CHECK(std::abs(bell.amplitudes[2]) == 0.0);
  CHECK(bell.amplitudes[3].real() == doctest::Approx(inv_sqrt2).epsilon(1e-12));

  const DenseState eq4 = to_dense(build_fixture("eq4"));
  REQUIRE(eq4.amplitudes.size() == 32);
  for (std::uint64_t flat = 0; flat < 32; ++flat) {
    const bool support = flat == 0 || flat == 11 || flat == 21 || flat == 30;
    CHECK(std::abs(eq4.amplitudes[flat] -
                   (support ? std::complex<double>{0.5, 0.0}
                            : std::complex<double>{0.0, 0.0})) < 1e-15);
  }

  for (const char* id : {"eq4", "eq5", "eq7"}) {
    const DenseState dense = to_dense(build_fixture(id));
    double norm = 0.0;
    for (const auto& amp : dense.amplitudes) norm += std::norm(amp);
    CHECK(std::abs(norm - 1.0) < 1e-12);
  }

  CHECK_THROWS_AS(to_dense(build_fixture("eq8")), Error);     // default cap
  CHECK_NOTHROW(to_dense(build_fixture("eq8"), 10'000'000));  // raised cap
}

TEST_CASE("sparse inner products agree with dense dot products") {
  const SparseState eq4 = build_fixture("eq4");
  std::vector<SparseState> probes = {eq4};
  probes.push_back(apply_z(eq4, 1, 1));
  probes.push_back(apply_x(eq4, 5, 1));
  probes.push_back(apply_u(eq4, LocalUnitaryLabel{{1, 0, 1, 1, 0}, 2}));
  for (const SparseState& a : probes) {
    for (const SparseState& b : probes) {
      const std::complex<double> sparse = inner_product(a, b);
      const std::complex<double> dense = dense_dot(to_dense(a), to_dense(b));
      CHECK(std::abs(sparse - dense) < 1e-12);
    }
  }
}

TEST_CASE("share extraction splits by the party value") {
  const SparseState bell = build_pme_even(1, 2);
  const auto bell_shares = extract_shares(bell, 1);
  REQUIRE(bell_shares.size() == 2);
  CHECK(bell_shares[0].terms ==
        std::vector<SparseTerm>{{std::vector<std::uint32_t>{0}, 0}});
  CHECK(bell_shares[1].terms ==
        std::vector<SparseTerm>{{std::vector<std::uint32_t>{1}, 0}});

  const SparseState eq4 = build_fixture("eq4");
  const auto shares = extract_shares(eq4, 5);
  REQUIRE(shares.size() == 2);
  SparseState s0;
  s0.d = 2;
  s0.parties = 4;
  s0.terms = {{{0, 0, 0, 0}, 0}, {{1, 1, 1, 1}, 0}};
  SparseState s1;
  s1.d = 2;
  s1.parties = 4;
  s1.terms = {{{0, 1, 0, 1}, 0}, {{1, 0, 1, 0}, 0}};
  CHECK(shares[0] == s0);
  CHECK(shares[1] == s1);

  // Orthonormal shares reassemble to the input exactly.
  CHECK(std::abs(inner_product(shares[0], shares[0]) - 1.0) < 1e-12);
  CHECK(std::abs(inner_product(shares[1], shares[1]) - 1.0) < 1e-12);
  CHECK(std::abs(inner_product(shares[0], shares[1])) < 1e-12);
  CHECK(reassemble_shares(shares, 5) == eq4);

  // Shares of every party of an odd-family state stay orthonormal.
  const SparseState eq5 = build_fixture("eq5");
  for (std::uint32_t party = 1; party <= eq5.parties; ++party) {
    const auto parts = extract_shares(eq5, party);
    for (std::uint32_t a = 0; a < parts.size(); ++a) {
      for (std::uint32_t b = 0; b < parts.size(); ++b) {
        const double expect = a == b ? 1.0 : 0.0;
        CHECK(std::abs(inner_product(parts[a], parts[b]) - expect) < 1e-12);
      }
    }
    CHECK(reassemble_shares(parts, party) == eq5);
  }
}

TEST_CASE("extraction needs a uniform marginal") {
  SparseState lopsided;
  lopsided.d = 3;
  lopsided.parties = 2;
  lopsided.terms = {{{0, 0}, 0}, {{0, 1}, 0}, {{0, 2}, 0},
                    {{1, 2}, 0}, {{2, 1}, 0}, {{2, 2}, 0}};
  CHECK_THROWS_AS(extract_shares(lopsided, 1), Error);
  try {
    extract_shares(lopsided, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_extractable);
  }
}

TEST_CASE("state JSON form") {
  const SparseState bell = build_pme_even(1, 2);
  CHECK(state_to_json(bell) ==
        R"({"N":2,"d":2,"terms":[{"idx":[0,0],"phase":0},{"idx":[1,1],"phase":0}]})");

  const std::string csv = dense_to_csv(to_dense(bell));
  CHECK(csv.find("0,0.7071") == 0);
  CHECK(csv.find("\n3,0.7071") != std::string::npos);
}
