#include <doctest.h>

#include <string>
#include <vector>

#include "planark/poa.hpp"
#include "planark/serialization.hpp"

using namespace planark;

namespace {

PlanarOrthogonalArray eq4_support() {
  return poa_from_block(block_for_length(2, 5), 2);
}

}  // namespace

TEST_CASE("poa_from_block materializes rows in flat input order") {
  const PlanarOrthogonalArray array = eq4_support();
  CHECK(array.runs == 4);
  CHECK(array.factors == 5);
  CHECK(array.strength == 2);
  CHECK(array.lambda == 1);
  CHECK(array.data == std::vector<std::uint32_t>{0, 0, 0, 0, 0,  //
                                                 0, 1, 0, 1, 1,  //
                                                 1, 0, 1, 0, 1,  //
                                                 1, 1, 1, 1, 0});

  const PlanarOrthogonalArray identity = poa_from_block(build_canonical_block(3, 0), 2);
  CHECK(identity.runs == 8);
  CHECK(identity.factors == 3);
  for (std::uint32_t row = 0; row < 8; ++row) {
    CHECK(encode_index(std::vector<std::uint32_t>{identity.at(row, 0),
                                                  identity.at(row, 1),
                                                  identity.at(row, 2)},
                       2) == row);
  }
}

TEST_CASE("verify_strength on the worked arrays") {
  const StrengthReport good = verify_strength(eq4_support());
  CHECK(good.passed);
  CHECK(good.windows_checked == 5);

  // A duplicated adjacent column can never carry a bijective window.
  PlanarOrthogonalArray bad;
  bad.runs = 4;
  bad.factors = 4;
  bad.levels = 2;
  bad.strength = 2;
  bad.data = {0, 0, 0, 0,  //
              0, 0, 1, 1,  //
              1, 1, 0, 1,  //
              1, 1, 1, 0};
  const StrengthReport report = verify_strength(bad);
  CHECK_FALSE(report.passed);
  REQUIRE(report.violation.has_value());

  const PlanarOrthogonalArray big = poa_from_block(block_for_length(4, 10), 5);
  CHECK(big.runs == 625);
  const StrengthReport wide = verify_strength(big);
  CHECK(wide.passed);
  CHECK(wide.windows_checked == 10);
}

TEST_CASE("verify_irredundant") {
  const IrredundancyReport good = verify_irredundant(eq4_support());
  CHECK(good.passed);
  CHECK(good.windows_checked == 5);

  // s = 0: removing all k columns leaves empty, equal rows.
  const PlanarOrthogonalArray identity = poa_from_block(build_canonical_block(3, 0), 2);
  const IrredundancyReport report = verify_irredundant(identity);
  CHECK_FALSE(report.passed);
  REQUIRE(report.duplicate.has_value());
  CHECK(report.duplicate->row_a == 0);
  CHECK(report.duplicate->row_b == 1);

  const PlanarOrthogonalArray eq7ish = poa_from_block(block_for_length(3, 8), 3);
  CHECK(eq7ish.runs == 27);
  CHECK(verify_irredundant(eq7ish).passed);
}

TEST_CASE("block soundness: verified blocks yield certified arrays") {
  for (std::uint32_t k = 2; k <= 4; ++k) {
    for (std::uint32_t d : {2u, 3u}) {
      for (std::uint32_t n = 2 * k; n <= 2 * k + 2 && n <= 10; ++n) {
        const CircleBlock block = block_for_length(k, n);
        REQUIRE(verify_block(block, d).passed);
        PlanarOrthogonalArray array = poa_from_block(block, d);
        CHECK(verify_strength(array).passed);
        CHECK(verify_irredundant(array).passed);
        certify(array);
        CHECK(array.certified_strength == true);
        CHECK(array.certified_irredundant == true);
      }
    }
  }
}

TEST_CASE("strength monotonicity") {
  PlanarOrthogonalArray array = poa_from_block(block_for_length(3, 7), 2);
  REQUIRE(verify_strength(array).passed);
  for (std::uint32_t weaker = 1; weaker < 3; ++weaker) {
    PlanarOrthogonalArray redeclared = array;
    redeclared.strength = weaker;
    redeclared.lambda = array.lambda;
    for (std::uint32_t i = weaker; i < 3; ++i) redeclared.lambda *= array.levels;
    CHECK(verify_strength(redeclared).passed);
  }
}

TEST_CASE("CSV and JSON round trips") {
  const PlanarOrthogonalArray array = eq4_support();
  const std::string csv = poa_to_csv(array);
  CHECK(csv == "0,0,0,0,0\n0,1,0,1,1\n1,0,1,0,1\n1,1,1,1,0\n");
  CHECK(poa_from_csv(csv, 2, 2) == array);

  const std::string json = poa_to_json(array);
  CHECK(poa_from_json(json) == array);
}

TEST_CASE("import rejects malformed input") {
  CHECK_THROWS_AS(poa_from_csv("0,1\n0,2\n", 2, 1), Error);
  try {
    poa_from_csv("0,1\n0,x\n", 2, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(poa_from_csv("0,1\n0\n", 2, 1), Error);

  // Header r disagreeing with the data is a parse error.
  CHECK_THROWS_AS(
      poa_from_json(R"({"r":3,"N":2,"d":2,"k":1,"lambda":1,"data":[[0,1],[1,0]]})"),
      Error);
  CHECK_THROWS_AS(poa_from_json("not json"), Error);
}
