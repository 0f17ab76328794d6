// Acceptance suite: one pass/fail line per criterion, exit 0 only when every
// criterion holds at its stated tolerance and within its runtime budget.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "planark/entanglement.hpp"
#include "planark/lu_basis.hpp"
#include "planark/serialization.hpp"

using namespace planark;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  const std::string command =
      std::string(PLANARK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::uint32_t> window_of(std::uint32_t start, std::uint32_t k,
                                     std::uint32_t parties) {
  std::vector<std::uint32_t> subset;
  for (std::uint32_t w = 0; w < k; ++w) {
    subset.push_back((start - 1 + w) % parties + 1);
  }
  std::sort(subset.begin(), subset.end());
  return subset;
}

const char* kExpectedBlock116 =
    "(e1, e2, e3, e4, e5, e6, e7, e8, e9, e10, e11, "
    "e1+e7, e2+e8, e3+e9, e4+e10, e5+e11, e6+e7+e8+e9+e10+e11)\n";

const char* kTable116 =
    "1,2,3,4,5,6,7,8,9,10,11,,,,,,\n"
    ",2,3,4,5,6,7,8,9,10,11,1,,,,,\n"
    ",,3,4,5,6,7,8,9,10,11,1,2,,,,\n"
    ",,,4,5,6,7,8,9,10,11,1,2,3,,,\n"
    ",,,,5,6,7,8,9,10,11,1,2,3,4,,\n"
    ",,,,,6,7,8,9,10,11,1,2,3,4,5,\n"
    ",,,,,,7,8,9,10,11,1,2,3,4,5,6\n"
    "1,,,,,,,8,9,10,11,7,2,3,4,5,6\n"
    "1,2,,,,,,,9,10,11,7,8,3,4,5,6\n"
    "1,2,3,,,,,,,10,11,7,8,9,4,5,6\n"
    "1,2,3,4,,,,,,,11,7,8,9,10,5,6\n"
    "1,2,3,4,5,,,,,,,7,8,9,10,11,6\n"
    "1,2,3,4,5,6,,,,,,,8,9,10,11,7\n"
    "1,2,3,4,5,6,7,,,,,,,9,10,11,8\n"
    "1,2,3,4,5,6,7,8,,,,,,,10,11,9\n"
    "1,2,3,4,5,6,7,8,9,,,,,,,11,10\n"
    "1,2,3,4,5,6,7,8,9,10,,,,,,,11\n";

bool criterion_worked_example(std::string& detail) {
  const CliResult block = run_cli("block build --k 11 --s 6");
  if (block.exit_code != 0 || block.output != kExpectedBlock116) {
    detail = "block build output mismatch";
    return false;
  }
  const CliResult table = run_cli("block table --k 11 --s 6");
  if (table.exit_code != 0 || table.output != kTable116) {
    detail = "construction table mismatch";
    return false;
  }
  return true;
}

bool criterion_block_sweep(std::string& detail) {
  for (std::uint32_t k = 2; k <= 4; ++k) {
    for (std::uint32_t s = 0; s < k; ++s) {
      const CircleBlock block = build_canonical_block(k, s);
      for (std::uint32_t d : {2u, 3u}) {
        const BlockReport report = verify_block(block, d);
        if (!report.passed) {
          detail = "(" + std::to_string(k) + "," + std::to_string(s) +
                   ") fails at d=" + std::to_string(d);
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_poa_certification(std::string& detail) {
  for (std::uint32_t k : {2u, 3u}) {
    for (std::uint32_t n = 2 * k; n <= 2 * k + 3; ++n) {
      for (std::uint32_t d : {2u, 3u}) {
        const PlanarOrthogonalArray array =
            poa_from_block(block_for_length(k, n), d);
        if (!verify_strength(array).passed || !verify_irredundant(array).passed) {
          detail = "POA from (k=" + std::to_string(k) + ", N=" + std::to_string(n) +
                   ", d=" + std::to_string(d) + ") failed certification";
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_fixture_uniformity(std::string& detail) {
  const std::array<std::pair<const char*, std::uint32_t>, 4> cases = {
      std::pair{"eq4", 2u}, {"eq5", 3u}, {"eq7", 3u}, {"eq8", 4u}};
  for (const auto& [id, k] : cases) {
    const SparseState state = build_fixture(id);
    const UniformityReport report = verify_planar_k_uniform(state, k);
    if (!report.all_passed) {
      detail = std::string(id) + " is not planar " + std::to_string(k) + "-uniform";
      return false;
    }
    // The report runs on the exact path; double-check one window's matrix.
    const DensityMatrix rho = reduced_density(state, window_of(1, k, state.parties));
    if (!rho.is_exact() || !is_maximally_mixed(rho, state.d, k)) {
      detail = std::string(id) + ": exact density check failed";
      return false;
    }
  }
  return true;
}

bool criterion_entropy_formulas(std::string& detail) {
  for (std::uint32_t n : {2u, 3u}) {
    for (std::uint32_t d : {2u, 3u}) {
      for (const StateFamily family : {StateFamily::pme_even, StateFamily::pme_odd}) {
        const bool even = family == StateFamily::pme_even;
        const SparseState state = even ? build_pme_even(n, d) : build_pme_odd(n, d);
        const std::uint32_t parties = state.parties;
        const std::uint64_t limit = std::uint64_t{1} << (parties - 1);
        for (std::uint64_t mask = 1; mask < limit; ++mask) {
          Bipartition bp;
          bp.parties = parties;
          for (std::uint32_t p = 1; p < parties; ++p) {
            if (mask & (std::uint64_t{1} << (p - 1))) bp.part_a.push_back(p);
          }
          const double numeric = von_neumann_entropy(state, bp);
          const double expected =
              predicted_entropy(bipartition_profile(bp, family), family);
          if (std::abs(numeric - expected) >= 1e-9) {
            std::ostringstream out;
            out << (even ? "even" : "odd") << " n=" << n << " d=" << d
                << " mask=" << mask << ": " << numeric << " vs " << expected;
            detail = out.str();
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool criterion_genuine_entanglement(std::string& detail) {
  if (!is_genuinely_entangled(build_pme_odd(2, 2))) {
    detail = "odd family n=2 d=2 not reported genuinely entangled";
    return false;
  }
  if (!is_genuinely_entangled(build_pme_odd(3, 2))) {
    detail = "odd family n=3 d=2 not reported genuinely entangled";
    return false;
  }
  const SparseState even = build_pme_even(2, 2);
  if (is_genuinely_entangled(even)) {
    detail = "even family n=2 d=2 wrongly reported genuinely entangled";
    return false;
  }
  const double product_cut = von_neumann_entropy(even, Bipartition{4, {1, 3}});
  if (std::abs(product_cut) >= 1e-9) {
    detail = "product cut {1,3} has nonzero entropy";
    return false;
  }
  return true;
}

bool criterion_basis(std::string& detail) {
  const SparseState eq4 = build_fixture("eq4");
  const auto basis = generate_basis(eq4, 2);
  if (basis.size() != 32) {
    detail = "expected 32 basis states for eq4";
    return false;
  }
  double max_offdiag = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      max_offdiag = std::max(
          max_offdiag, std::abs(inner_product(basis[i].second, basis[j].second)));
    }
  }
  if (max_offdiag >= 1e-10) {
    detail = "eq4 basis off-diagonal " + std::to_string(max_offdiag);
    return false;
  }
  for (const auto& [label, state] : basis) {
    if (!verify_planar_k_uniform(state, 2).all_passed) {
      detail = "an eq4 basis state is not planar 2-uniform";
      return false;
    }
  }

  const SparseState eq7 = build_fixture("eq7");
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint64_t> pick(0, 6560);
  for (int rep = 0; rep < 100; ++rep) {
    std::uint64_t fa = pick(rng);
    std::uint64_t fb = pick(rng);
    if (fa == fb) fb = (fb + 1) % 6561;
    const SparseState sa = apply_u(eq7, {decode_index(fa, 3, 8), 3});
    const SparseState sb = apply_u(eq7, {decode_index(fb, 3, 8), 3});
    if (std::abs(inner_product(sa, sb)) >= 1e-10) {
      detail = "sampled eq7 pair not orthogonal";
      return false;
    }
  }
  for (int rep = 0; rep < 20; ++rep) {
    const SparseState s = apply_u(eq7, {decode_index(pick(rng), 3, 8), 3});
    if (!verify_planar_k_uniform(s, 3).all_passed) {
      detail = "sampled eq7 basis state is not planar 3-uniform";
      return false;
    }
  }
  return true;
}

bool criterion_support_levels(std::string& detail) {
  const auto levels = classify_support_levels(8, 2, 2);
  if (levels.size() != 3) {
    detail = "expected 3 levels, got " + std::to_string(levels.size());
    return false;
  }
  const std::array<std::size_t, 3> supports = {4, 8, 16};
  for (std::size_t i = 0; i < 3; ++i) {
    if (levels[i].state.support_size() != supports[i]) {
      detail = "support size mismatch at level " + std::to_string(i);
      return false;
    }
    if (!levels[i].is_kmin_uniform) {
      detail = "level " + std::to_string(i) + " is not planar 2-uniform";
      return false;
    }
  }
  if (levels[0].fails_next_level != true || levels[1].fails_next_level != true) {
    detail = "lower levels do not fail the next uniformity order";
    return false;
  }
  return true;
}

bool criterion_share_extraction(std::string& detail) {
  const SparseState eq4 = build_fixture("eq4");
  const auto shares = extract_shares(eq4, 5);
  if (shares.size() != 2) {
    detail = "expected two shares";
    return false;
  }
  for (std::size_t i = 0; i < shares.size(); ++i) {
    for (std::size_t j = 0; j < shares.size(); ++j) {
      const double expect = i == j ? 1.0 : 0.0;
      if (std::abs(inner_product(shares[i], shares[j]) -
                   std::complex<double>{expect, 0.0}) >= 1e-10) {
        detail = "share Gram matrix is not the identity";
        return false;
      }
    }
  }
  if (!(reassemble_shares(shares, 5) == eq4)) {
    detail = "shares do not reassemble to eq4";
    return false;
  }
  return true;
}

bool criterion_oracle_agreement(std::string& detail) {
  for (const char* id : {"eq4", "eq5", "eq7", "eq8"}) {
    const SparseState state = build_fixture(id);
    const DenseState dense = to_dense(state, std::uint64_t{16} << 20);
    const std::uint32_t k = std::string(id) == "eq4"   ? 2
                            : std::string(id) == "eq8" ? 4
                                                       : 3;
    std::vector<std::vector<std::uint32_t>> subsets;
    for (std::uint32_t start = 1; start <= state.parties; ++start) {
      subsets.push_back(window_of(start, k, state.parties));
    }
    subsets.push_back({1, 3});
    subsets.push_back({1, state.parties});
    for (const auto& subset : subsets) {
      const DensityMatrix exact = reduced_density(state, subset);
      const DensityMatrix oracle = dense_reduced_density(dense, subset);
      for (std::uint64_t i = 0; i < exact.dim(); ++i) {
        for (std::uint64_t j = 0; j < exact.dim(); ++j) {
          if (std::abs(exact.value(i, j) - oracle.value(i, j)) >= 1e-12) {
            detail = std::string(id) + ": exact and dense densities disagree";
            return false;
          }
        }
      }
    }
  }
  return true;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example: (11,6) block and construction table", 0.1,
       criterion_worked_example},
      {2, "block correctness sweep (k<=4, d in {2,3})", 5.0, criterion_block_sweep},
      {3, "POA strength and irredundancy certification", 10.0,
       criterion_poa_certification},
      {4, "fixture uniformity with exact reduced densities", 30.0,
       criterion_fixture_uniformity},
      {5, "entropy formulas across all bipartitions", 60.0,
       criterion_entropy_formulas},
      {6, "genuine entanglement verdicts", 10.0, criterion_genuine_entanglement},
      {7, "orthogonal basis generation (eq4 full, eq7 sampled)", 60.0,
       criterion_basis},
      {8, "support levels for N=8, d=2", 10.0, criterion_support_levels},
      {9, "share extraction and reassembly for eq4", 1.0,
       criterion_share_extraction},
      {10, "exact vs dense reduced-density agreement", 30.0,
       criterion_oracle_agreement},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = elapsed < criterion.budget_seconds;
    const bool passed = ok && in_budget;
    if (!passed) ++failures;

    std::printf("[%s] criterion %2d: %s (%.3f s / budget %.1f s)\n",
                passed ? "PASS" : "FAIL", criterion.id, criterion.name, elapsed,
                criterion.budget_seconds);
    if (!ok && !detail.empty()) std::printf("       %s\n", detail.c_str());
    if (ok && !in_budget) std::printf("       over runtime budget\n");
  }

  if (failures == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
