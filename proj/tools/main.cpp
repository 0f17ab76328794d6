// planark: build and certify circle blocks, planar orthogonal arrays, and
// planar k-uniform states from the command line.
//
// Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
// input error.

#include <chrono>
#include <complex>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "planark/entanglement.hpp"
#include "planark/lu_basis.hpp"
#include "planark/serialization.hpp"
#include "planark/version.hpp"

using json = nlohmann::json;
using namespace planark;

namespace {

struct GlobalOptions {
  bool json_errors = false;
  std::uint64_t cap_enum = kDefaultEnumCap;
  std::uint64_t cap_dense = kDefaultDenseCap;
  std::string out;
  std::string log;
};

int fail_verification() { return 1; }
int fail_usage() { return 2; }

void write_sidecar_log(const GlobalOptions& global, const std::string& command) {
  if (global.log.empty()) return;
  std::ofstream log(global.log, std::ios::app);
  const auto now = std::chrono::system_clock::now();
  const std::time_t stamp = std::chrono::system_clock::to_time_t(now);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%FT%TZ", std::gmtime(&stamp));
  log << buffer << ' ' << command << '\n';
}

void emit(const GlobalOptions& global, const std::string& command,
          const std::string& content) {
  if (global.out.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream file(global.out, std::ios::binary);
    if (!file) {
      throw Error(Errc::invalid_input, "cannot open output file " + global.out);
    }
    file << content;
    std::cout << "wrote " << global.out << '\n';
  }
  write_sidecar_log(global, command);
}

json report_header(const std::string& command, const json& config) {
  json root;
  root["version"] = kVersion;
  json resolved = config;
  resolved["command"] = command;
  root["config"] = std::move(resolved);
  return root;
}

std::vector<std::uint32_t> parse_party_list(const std::string& text) {
  std::vector<std::uint32_t> parties;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    parties.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  std::sort(parties.begin(), parties.end());
  if (parties.empty()) {
    throw Error(Errc::invalid_input, "empty party list");
  }
  return parties;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(Errc::invalid_input, "cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

// Shared state selection: either a fixture id or a family with (n, d).
struct StateSelector {
  std::string fixture;
  std::string family;
  std::uint32_t n = 0;
  std::uint32_t d = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--fixture", fixture, "state fixture: eq4, eq5, eq7 or eq8");
    cmd->add_option("--family", family,
                    "state family: pme-even or pme-odd (needs --n and --d)");
    cmd->add_option("--n", n, "pair count for family states");
    cmd->add_option("--d", d, "local dimension for family states");
  }

  SparseState build() const {
    if (!fixture.empty()) return build_fixture(fixture);
    if (family.empty()) {
      throw Error(Errc::invalid_input, "need --fixture or --family");
    }
    if (n == 0 || d == 0) {
      throw Error(Errc::invalid_input, "--family needs --n and --d");
    }
    if (family == "pme-even" || family == "even") return build_pme_even(n, d);
    if (family == "pme-odd" || family == "odd") return build_pme_odd(n, d);
    throw Error(Errc::invalid_input, "unknown family " + family);
  }

  std::optional<StateFamily> family_kind() const {
    if (family == "pme-even" || family == "even") return StateFamily::pme_even;
    if (family == "pme-odd" || family == "odd") return StateFamily::pme_odd;
    return std::nullopt;
  }

  json config() const {
    json cfg;
    if (!fixture.empty()) cfg["fixture"] = fixture;
    if (!family.empty()) {
      cfg["family"] = family;
      cfg["n"] = n;
      cfg["d"] = d;
    }
    return cfg;
  }
};

// Block selection by (k, s) or (k, N).
struct BlockSelector {
  std::uint32_t k = 0;
  std::int64_t s = -1;
  std::uint32_t total = 0;  // N

  void attach(CLI::App* cmd, bool require_k = true) {
    auto* opt_k = cmd->add_option("--k", k, "block strength");
    if (require_k) opt_k->required();
    cmd->add_option("--s", s, "overhang (0 <= s < k)");
    cmd->add_option("--N", total, "total map count (uses the pasting decomposition)");
  }

  CircleBlock build() const {
    if (total > 0) return block_for_length(k, total);
    if (s < 0) {
      throw Error(Errc::invalid_input, "need --s or --N");
    }
    return build_canonical_block(k, static_cast<std::uint32_t>(s));
  }

  json config() const {
    json cfg;
    cfg["k"] = k;
    if (s >= 0) cfg["s"] = s;
    if (total > 0) cfg["N"] = total;
    return cfg;
  }
};

json block_as_json(const CircleBlock& block) {
  json maps = json::array();
  for (const CoordinateMap& map : block.maps) maps.push_back(map.indices);
  return json{{"k", block.strength},
              {"s", block.overhang},
              {"canonical", block.canonical},
              {"maps", std::move(maps)}};
}

int run_block_build(const GlobalOptions& global, const BlockSelector& sel,
                    const std::string& format) {
  const CircleBlock block = sel.build();
  std::string content;
  if (format == "json") {
    json root = report_header("block build", sel.config());
    root["block"] = block_as_json(block);
    content = root.dump(2) + "\n";
  } else {
    content = to_string(block) + "\n";
  }
  emit(global, "block build", content);
  return 0;
}

int run_block_verify(const GlobalOptions& global, const BlockSelector& sel,
                     std::uint32_t d, const std::string& format) {
  const CircleBlock block = sel.build();
  const BlockReport report = verify_block(block, d, global.cap_enum);

  json cfg = sel.config();
  cfg["d"] = d;
  json root = report_header("block verify", cfg);
  root["passed"] = report.passed;
  root["windows_checked"] = report.windows_checked;
  json collisions = json::array();
  for (const WindowCollision& c : report.collisions) {
    collisions.push_back({{"window", c.window_start},
                          {"first_input", c.first_input},
                          {"second_input", c.second_input}});
  }
  root["collisions"] = std::move(collisions);

  std::string content;
  if (format == "json") {
    content = root.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "block " << to_string(block) << "\n"
        << "windows checked: " << report.windows_checked << "\n"
        << (report.passed ? "PASS: every cyclic window is bijective\n"
                          : "FAIL: collisions found\n");
    for (const WindowCollision& c : report.collisions) {
      out << "  window " << c.window_start << ": inputs " << c.first_input
          << " and " << c.second_input << " collide\n";
    }
    content = out.str();
  }
  emit(global, "block verify", content);
  return report.passed ? 0 : fail_verification();
}

int run_block_table(const GlobalOptions& global, std::uint32_t k, std::uint32_t s,
                    const std::string& stage) {
  const ConstructionTable table =
      stage == "seed" ? build_initial_table(k, s) : build_construction_table(k, s);
  emit(global, "block table", table.to_csv());
  return 0;
}

int run_poa_build(const GlobalOptions& global, const BlockSelector& sel,
                  std::uint32_t d, const std::string& format, bool certify_it) {
  PlanarOrthogonalArray array = poa_from_block(sel.build(), d, global.cap_enum);
  if (certify_it) certify(array, global.cap_enum);
  std::string content;
  if (format == "json") {
    content = poa_to_json(array) + "\n";
  } else {
    content = poa_to_csv(array);
  }
  emit(global, "poa build", content);
  return 0;
}

int run_poa_certify(const GlobalOptions& global, const PlanarOrthogonalArray& array,
                    const json& config, const std::string& format) {
  const StrengthReport strength = verify_strength(array, global.cap_enum);
  const IrredundancyReport irredundant = verify_irredundant(array);
  const bool passed = strength.passed && irredundant.passed;

  json root = report_header("poa certify", config);
  root["r"] = array.runs;
  root["N"] = array.factors;
  root["d"] = array.levels;
  root["k"] = array.strength;
  root["lambda"] = array.lambda;
  root["strength"] = {{"passed", strength.passed},
                      {"windows_checked", strength.windows_checked}};
  if (!strength.note.empty()) root["strength"]["note"] = strength.note;
  if (strength.violation) {
    root["strength"]["violation"] = {{"window", strength.violation->window_start},
                                     {"tuple", strength.violation->tuple},
                                     {"count", strength.violation->count}};
  }
  root["irredundant"] = {{"passed", irredundant.passed},
                         {"windows_checked", irredundant.windows_checked}};
  if (irredundant.duplicate) {
    root["irredundant"]["duplicate"] = {
        {"window", irredundant.duplicate->window_start},
        {"row_a", irredundant.duplicate->row_a},
        {"row_b", irredundant.duplicate->row_b}};
  }
  root["passed"] = passed;

  std::string content;
  if (format == "json") {
    content = root.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "POA(" << array.runs << "," << array.factors << "," << array.levels
        << "," << array.strength << ") lambda=" << array.lambda << "\n"
        << (strength.passed ? "PASS" : "FAIL") << ": strength (windows: "
        << strength.windows_checked << ")\n"
        << (irredundant.passed ? "PASS" : "FAIL") << ": irredundancy (windows: "
        << irredundant.windows_checked << ")\n";
    content = out.str();
  }
  emit(global, "poa certify", content);
  return passed ? 0 : fail_verification();
}

int run_state_build(const GlobalOptions& global, const StateSelector& sel,
                    const std::string& format) {
  const SparseState state = sel.build();
  std::string content;
  if (format == "csv") {
    content = dense_to_csv(to_dense(state, global.cap_dense));
  } else {
    content = state_to_json(state) + "\n";
  }
  emit(global, "state build", content);
  return 0;
}

int run_state_verify(const GlobalOptions& global, const StateSelector& sel,
                     std::uint32_t k, const std::string& format) {
  const SparseState state = sel.build();
  const UniformityReport report = verify_planar_k_uniform(state, k, global.cap_enum);

  json cfg = sel.config();
  cfg["k"] = k;
  json root = report_header("state verify", cfg);
  root["passed"] = report.all_passed;
  json windows = json::array();
  for (const WindowCheck& w : report.windows) {
    windows.push_back({{"start", w.start}, {"passed", w.passed}});
  }
  root["windows"] = std::move(windows);

  std::string content;
  if (format == "json") {
    content = root.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "planar " << k << "-uniformity over " << report.windows.size()
        << " windows\n";
    for (const WindowCheck& w : report.windows) {
      out << "  window at party " << w.start << ": "
          << (w.passed ? "pass" : "FAIL") << "\n";
    }
    out << (report.all_passed ? "PASS" : "FAIL") << ": state is "
        << (report.all_passed ? "" : "NOT ") << "planar " << k << "-uniform\n";
    content = out.str();
  }
  emit(global, "state verify", content);
  return report.all_passed ? 0 : fail_verification();
}

int run_state_entropy(const GlobalOptions& global, const StateSelector& sel,
                      const std::string& partition, bool all_bipartitions,
                      bool check_formula, const std::string& units_name,
                      const std::string& format) {
  const SparseState state = sel.build();
  const EntropyUnits units =
      units_name == "nat" ? EntropyUnits::natural : EntropyUnits::log_d;
  const std::optional<StateFamily> family = sel.family_kind();
  if (check_formula && !family) {
    throw Error(Errc::invalid_input, "--check-formula needs --family");
  }

  std::vector<Bipartition> cuts;
  if (all_bipartitions) {
    const std::uint64_t limit = std::uint64_t{1} << (state.parties - 1);
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      Bipartition bp;
      bp.parties = state.parties;
      for (std::uint32_t p = 1; p < state.parties; ++p) {
        if (mask & (std::uint64_t{1} << (p - 1))) bp.part_a.push_back(p);
      }
      cuts.push_back(std::move(bp));
    }
  } else if (!partition.empty()) {
    cuts.push_back(Bipartition{state.parties, parse_party_list(partition)});
  } else {
    throw Error(Errc::invalid_input, "need --partition or --all-bipartitions");
  }

  json cfg = sel.config();
  cfg["units"] = units_name;
  cfg["check_formula"] = check_formula;
  if (!partition.empty()) cfg["partition"] = partition;
  cfg["all_bipartitions"] = all_bipartitions;
  json root = report_header("state entropy", cfg);

  bool all_match = true;
  json rows = json::array();
  std::ostringstream text;
  for (const Bipartition& bp : cuts) {
    const double numeric = von_neumann_entropy(state, bp, units, global.cap_enum);
    json row;
    row["part_a"] = bp.part_a;
    row["entropy"] = numeric;
    text << "A={";
    for (std::size_t i = 0; i < bp.part_a.size(); ++i) {
      text << (i ? "," : "") << bp.part_a[i];
    }
    text << "} S=" << numeric;
    if (check_formula) {
      const BipartitionProfile profile = bipartition_profile(bp, *family);
      double expected = predicted_entropy(profile, *family);
      if (units == EntropyUnits::natural) {
        expected *= std::log(static_cast<double>(state.d));
      }
      const bool match = std::abs(numeric - expected) < 1e-9;
      all_match = all_match && match;
      row["s"] = profile.unpaired;
      row["t"] = profile.pairs;
      row["predicted"] = expected;
      row["match"] = match;
      text << " predicted=" << expected << (match ? " ok" : " MISMATCH");
    }
    text << "\n";
    rows.push_back(std::move(row));
  }
  root["rows"] = std::move(rows);
  if (check_formula) root["all_match"] = all_match;

  std::string content = format == "json" ? root.dump(2) + "\n" : text.str();
  if (format != "json" && check_formula) {
    content += all_match ? "PASS: all bipartitions match the formula\n"
                         : "FAIL: formula mismatch\n";
  }
  emit(global, "state entropy", content);
  return (!check_formula || all_match) ? 0 : fail_verification();
}

int run_state_shares(const GlobalOptions& global, const StateSelector& sel,
                     std::uint32_t party, const std::string& format) {
  const SparseState state = sel.build();
  const std::vector<SparseState> shares = extract_shares(state, party);

  double max_offdiag = 0.0;
  double max_norm_gap = 0.0;
  for (std::size_t i = 0; i < shares.size(); ++i) {
    for (std::size_t j = 0; j < shares.size(); ++j) {
      const double value = std::abs(inner_product(shares[i], shares[j]));
      if (i == j) {
        max_norm_gap = std::max(max_norm_gap, std::abs(value - 1.0));
      } else {
        max_offdiag = std::max(max_offdiag, value);
      }
    }
  }
  const bool reassembles = reassemble_shares(shares, party) == state;
  const bool passed = reassembles && max_offdiag < 1e-10 && max_norm_gap < 1e-10;

  json cfg = sel.config();
  cfg["party"] = party;
  json root = report_header("state shares", cfg);
  json share_list = json::array();
  for (const SparseState& share : shares) {
    share_list.push_back(json::parse(state_to_json(share)));
  }
  root["shares"] = std::move(share_list);
  root["max_abs_offdiag"] = max_offdiag;
  root["max_norm_gap"] = max_norm_gap;
  root["reassembles"] = reassembles;
  root["passed"] = passed;

  std::string content;
  if (format == "json") {
    content = root.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << shares.size() << " shares at party " << party << "\n"
        << "max |<Si|Sj>| off-diagonal: " << max_offdiag << "\n"
        << "reassembles exactly: " << (reassembles ? "yes" : "NO") << "\n"
        << (passed ? "PASS\n" : "FAIL\n");
    content = out.str();
  }
  emit(global, "state shares", content);
  return passed ? 0 : fail_verification();
}

int run_basis(const GlobalOptions& global, const StateSelector& sel, std::uint32_t k,
              const std::string& check, std::uint64_t sample_pairs,
              std::uint64_t sample_states, const std::string& format) {
  const SparseState state = sel.build();
  const std::uint64_t n_states =
      checked_power(state.d, state.parties, std::uint64_t{1} << 62);

  json cfg = sel.config();
  cfg["k"] = k;
  if (!check.empty()) cfg["check"] = check;
  json root = report_header("basis", cfg);
  root["n_states"] = n_states;

  bool passed = true;
  if (check == "gram") {
    double max_abs_offdiag = 0.0;
    double max_norm_gap = 0.0;
    json failures = json::array();
    json indeterminate = json::array();

    auto record_pair = [&](const LocalUnitaryLabel& a, const LocalUnitaryLabel& b,
                           double value) {
      max_abs_offdiag = std::max(max_abs_offdiag, value);
      if (value >= 1e-6) {
        failures.push_back({{"a", a.exponents}, {"b", b.exponents}, {"abs", value}});
      } else if (value > 1e-10) {
        // Tolerance gray zone: surfaced rather than silently passed.
        indeterminate.push_back(
            {{"a", a.exponents}, {"b", b.exponents}, {"abs", value}});
      }
    };

    if (n_states <= 1024) {
      const auto basis = generate_basis(state, k, global.cap_enum);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        max_norm_gap = std::max(
            max_norm_gap,
            std::abs(std::abs(inner_product(basis[i].second, basis[i].second)) -
                     1.0));
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
          record_pair(basis[i].first, basis[j].first,
                      std::abs(inner_product(basis[i].second, basis[j].second)));
        }
      }
    } else {
      // Label space too big for the full Gram matrix: sample pairs.
      std::mt19937_64 rng(12345);
      std::uniform_int_distribution<std::uint64_t> pick(0, n_states - 1);
      for (std::uint64_t rep = 0; rep < sample_pairs; ++rep) {
        std::uint64_t fa = pick(rng);
        std::uint64_t fb = pick(rng);
        if (fa == fb) fb = (fb + 1) % n_states;
        const LocalUnitaryLabel a{decode_index(fa, state.d, state.parties), k};
        const LocalUnitaryLabel b{decode_index(fb, state.d, state.parties), k};
        record_pair(a, b,
                    std::abs(inner_product(apply_u(state, a), apply_u(state, b))));
      }
    }
    root["max_abs_offdiag"] = max_abs_offdiag;
    root["max_norm_gap"] = max_norm_gap;
    root["failures"] = failures;
    root["indeterminate"] = indeterminate;
    passed = failures.empty() && indeterminate.empty() && max_norm_gap < 1e-10;
  }

  if (sample_states > 0) {
    std::mt19937_64 rng(54321);
    std::uniform_int_distribution<std::uint64_t> pick(0, n_states - 1);
    json checked = json::array();
    for (std::uint64_t rep = 0; rep < sample_states; ++rep) {
      const LocalUnitaryLabel label{decode_index(pick(rng), state.d, state.parties),
                                    k};
      const bool uniform =
          verify_planar_k_uniform(apply_u(state, label), k, global.cap_enum)
              .all_passed;
      checked.push_back({{"label", label.exponents}, {"uniform", uniform}});
      passed = passed && uniform;
    }
    root["uniformity_samples"] = std::move(checked);
  }
  root["passed"] = passed;

  std::string content;
  if (format == "json") {
    content = root.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "basis of " << n_states << " states";
    if (root.contains("max_abs_offdiag")) {
      out << ", max |<a|b>| = " << root["max_abs_offdiag"].get<double>();
    }
    out << "\n" << (passed ? "PASS\n" : "FAIL\n");
    content = out.str();
  }
  emit(global, "basis", content);
  return passed ? 0 : fail_verification();
}

int run_classify(const GlobalOptions& global, std::uint32_t parties, std::uint32_t d,
                 std::uint32_t k_min, const std::string& format) {
  const auto levels = classify_support_levels(parties, d, k_min, global.cap_enum);

  json root =
      report_header("classify", json{{"N", parties}, {"d", d}, {"k_min", k_min}});
  bool passed = true;
  json rows = json::array();
  std::ostringstream text;
  text << levels.size() << " inequivalent levels (K in [" << k_min << ", "
       << parties / 2 << "])\n";
  for (const SupportLevel& level : levels) {
    json row;
    row["K"] = level.strength;
    row["support"] = level.state.support_size();
    row["kmin_uniform"] = level.is_kmin_uniform;
    passed = passed && level.is_kmin_uniform;
    text << "  K=" << level.strength << " support=" << level.state.support_size()
         << " planar-" << k_min
         << "-uniform=" << (level.is_kmin_uniform ? "yes" : "NO");
    if (level.fails_next_level.has_value()) {
      row["fails_next_level"] = *level.fails_next_level;
      passed = passed && *level.fails_next_level;
      text << " fails-" << level.strength + 1
           << "-uniformity=" << (*level.fails_next_level ? "yes" : "NO");
    }
    text << "\n";
    rows.push_back(std::move(row));
  }
  root["levels"] = std::move(rows);
  root["count"] = levels.size();
  root["passed"] = passed;
  text << (passed ? "PASS\n" : "FAIL\n");

  emit(global, "classify", format == "json" ? root.dump(2) + "\n" : text.str());
  return passed ? 0 : fail_verification();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar k-uniform state constructor and verifier"};
  app.set_version_flag("--version", std::string("planark ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_flag("--json", global.json_errors, "machine-readable errors on stderr");
  app.add_option("--cap-enum", global.cap_enum, "enumeration ceiling (d^k values)");
  app.add_option("--cap-dense", global.cap_dense, "dense vector ceiling (entries)");
  app.add_option("--out", global.out, "write the artifact to this file");
  app.add_option("--log", global.log, "append a timestamped line to this sidecar log");

  std::string format = "text";

  // block
  auto* block = app.add_subcommand("block", "circle block construction");
  auto* block_build = block->add_subcommand("build", "build a canonical block");
  BlockSelector bb_sel;
  bb_sel.attach(block_build);
  block_build->add_option("--format", format, "text or json");

  auto* block_verify = block->add_subcommand("verify", "check window bijectivity");
  BlockSelector bv_sel;
  std::uint32_t bv_d = 2;
  bv_sel.attach(block_verify);
  block_verify->add_option("--d", bv_d, "local dimension")->required();
  block_verify->add_option("--format", format, "text or json");

  auto* block_table = block->add_subcommand("table", "construction table as CSV");
  std::uint32_t bt_k = 0, bt_s = 0;
  std::string bt_stage = "final";
  block_table->add_option("--k", bt_k, "strength")->required();
  block_table->add_option("--s", bt_s, "overhang")->required();
  block_table->add_option("--stage", bt_stage, "seed or final");

  // poa
  auto* poa = app.add_subcommand("poa", "planar orthogonal arrays");
  auto* poa_build = poa->add_subcommand("build", "materialize an array from a block");
  BlockSelector pb_sel;
  std::uint32_t pb_d = 2;
  bool pb_certify = false;
  pb_sel.attach(poa_build);
  poa_build->add_option("--d", pb_d, "local dimension")->required();
  poa_build->add_option("--format", format, "csv or json");
  poa_build->add_flag("--certify", pb_certify, "certify before export");

  auto* poa_certify =
      poa->add_subcommand("certify", "verify strength and irredundancy");
  BlockSelector pc_sel;
  std::uint32_t pc_d = 0, pc_strength = 0, pc_lambda = 1;
  std::string pc_in, pc_in_format = "json";
  pc_sel.attach(poa_certify, /*require_k=*/false);
  poa_certify->add_option("--d", pc_d, "local dimension");
  poa_certify->add_option("--in", pc_in, "certify an imported array instead");
  poa_certify->add_option("--in-format", pc_in_format, "csv or json");
  poa_certify->add_option("--strength", pc_strength, "declared strength (csv import)");
  poa_certify->add_option("--lambda", pc_lambda, "declared index (csv import)");
  poa_certify->add_option("--format", format, "text or json");

  auto* poa_export = poa->add_subcommand("export", "build and write an array");
  BlockSelector pe_sel;
  std::uint32_t pe_d = 2;
  pe_sel.attach(poa_export);
  poa_export->add_option("--d", pe_d, "local dimension")->required();
  poa_export->add_option("--format", format, "csv or json");

  auto* poa_import = poa->add_subcommand("import", "parse, validate and certify");
  std::uint32_t pi_d = 0, pi_strength = 0, pi_lambda = 1;
  std::string pi_in, pi_in_format = "json";
  poa_import->add_option("--in", pi_in, "input file")->required();
  poa_import->add_option("--in-format", pi_in_format, "csv or json");
  poa_import->add_option("--d", pi_d, "levels (csv import)");
  poa_import->add_option("--strength", pi_strength, "declared strength (csv import)");
  poa_import->add_option("--lambda", pi_lambda, "declared index (csv import)");
  poa_import->add_option("--format", format, "text or json");

  // state
  auto* state = app.add_subcommand("state", "state construction and verification");
  auto* state_build = state->add_subcommand("build", "construct a state");
  StateSelector sb_sel;
  sb_sel.attach(state_build);
  state_build->add_option("--format", format, "json (sparse) or csv (dense)");

  auto* state_verify = state->add_subcommand("verify", "planar k-uniformity check");
  StateSelector sv_sel;
  std::uint32_t sv_k = 0;
  sv_sel.attach(state_verify);
  state_verify->add_option("--k", sv_k, "uniformity order")->required();
  state_verify->add_option("--format", format, "text or json");

  auto* state_entropy = state->add_subcommand("entropy", "Von Neumann entropies");
  StateSelector se_sel;
  std::string se_partition;
  bool se_all = false, se_check = false;
  std::string se_units = "logd";
  se_sel.attach(state_entropy);
  state_entropy->add_option("--partition", se_partition, "A-side parties, e.g. 1,2,5");
  state_entropy->add_flag("--all-bipartitions", se_all, "sweep every bipartition");
  state_entropy->add_flag("--check-formula", se_check,
                          "compare against the family formula");
  state_entropy->add_option("--units", se_units, "logd or nat");
  state_entropy->add_option("--format", format, "text or json");

  auto* state_shares = state->add_subcommand("shares", "secret-sharing share states");
  StateSelector sh_sel;
  std::uint32_t sh_party = 0;
  sh_sel.attach(state_shares);
  state_shares->add_option("--party", sh_party, "dealer party")->required();
  state_shares->add_option("--format", format, "text or json");

  auto* state_export = state->add_subcommand("export", "write a state artifact");
  StateSelector sx_sel;
  sx_sel.attach(state_export);
  state_export->add_option("--format", format, "json (sparse) or csv (dense)");

  // basis
  auto* basis = app.add_subcommand("basis", "local unitary orbit of a state");
  auto* basis_generate = basis->add_subcommand("generate", "enumerate U(a)|psi>");
  StateSelector bg_sel;
  std::uint32_t bg_k = 0;
  std::string bg_check;
  std::uint64_t bg_pairs = 100, bg_states = 0;
  bg_sel.attach(basis_generate);
  basis_generate->add_option("--k", bg_k, "Z/X split position")->required();
  basis_generate->add_option("--check", bg_check, "gram");
  basis_generate->add_option("--sample-pairs", bg_pairs,
                             "pair samples when the label space is large");
  basis_generate->add_option("--sample-states", bg_states,
                             "uniformity samples over generated states");
  basis_generate->add_option("--format", format, "text or json");

  auto* basis_check = basis->add_subcommand("check", "gram + uniformity sampling");
  StateSelector bc_sel;
  std::uint32_t bc_k = 0;
  std::uint64_t bc_pairs = 100, bc_states = 20;
  bc_sel.attach(basis_check);
  basis_check->add_option("--k", bc_k, "Z/X split position")->required();
  basis_check->add_option("--sample-pairs", bc_pairs, "pair samples");
  basis_check->add_option("--sample-states", bc_states, "uniformity samples");
  basis_check->add_option("--format", format, "text or json");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "support levels per strength");
  std::uint32_t cl_n = 0, cl_d = 2, cl_kmin = 1;
  classify_cmd->add_option("--N", cl_n, "party count")->required();
  classify_cmd->add_option("--d", cl_d, "local dimension")->required();
  classify_cmd->add_option("--k-min", cl_kmin, "lowest uniformity order");
  classify_cmd->add_option("--format", format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return fail_usage();
  }

  try {
    if (block_build->parsed()) return run_block_build(global, bb_sel, format);
    if (block_verify->parsed()) return run_block_verify(global, bv_sel, bv_d, format);
    if (block_table->parsed()) return run_block_table(global, bt_k, bt_s, bt_stage);

    if (poa_build->parsed()) {
      if (format == "text") format = "csv";
      return run_poa_build(global, pb_sel, pb_d, format, pb_certify);
    }
    if (poa_certify->parsed()) {
      PlanarOrthogonalArray array;
      json cfg;
      if (!pc_in.empty()) {
        const std::string text = read_file(pc_in);
        array = pc_in_format == "csv"
                    ? poa_from_csv(text, pc_d, pc_strength, pc_lambda)
                    : poa_from_json(text);
        cfg["in"] = pc_in;
      } else {
        if (pc_d == 0) throw Error(Errc::invalid_input, "need --d");
        array = poa_from_block(pc_sel.build(), pc_d, global.cap_enum);
        cfg = pc_sel.config();
        cfg["d"] = pc_d;
      }
      return run_poa_certify(global, array, cfg, format);
    }
    if (poa_export->parsed()) {
      if (global.out.empty()) {
        throw Error(Errc::invalid_input, "poa export needs --out");
      }
      if (format == "text") format = "csv";
      return run_poa_build(global, pe_sel, pe_d, format, /*certify=*/true);
    }
    if (poa_import->parsed()) {
      const std::string text = read_file(pi_in);
      PlanarOrthogonalArray array =
          pi_in_format == "csv" ? poa_from_csv(text, pi_d, pi_strength, pi_lambda)
                                : poa_from_json(text);
      return run_poa_certify(global, array, json{{"in", pi_in}}, format);
    }

    if (state_build->parsed()) return run_state_build(global, sb_sel, format);
    if (state_verify->parsed()) return run_state_verify(global, sv_sel, sv_k, format);
    if (state_entropy->parsed()) {
      return run_state_entropy(global, se_sel, se_partition, se_all, se_check,
                               se_units == "nat" ? "nat" : "logd", format);
    }
    if (state_shares->parsed()) {
      return run_state_shares(global, sh_sel, sh_party, format);
    }
    if (state_export->parsed()) {
      if (global.out.empty()) {
        throw Error(Errc::invalid_input, "state export needs --out");
      }
      return run_state_build(global, sx_sel, format);
    }

    if (basis_generate->parsed()) {
      return run_basis(global, bg_sel, bg_k, bg_check, bg_pairs, bg_states, format);
    }
    if (basis_check->parsed()) {
      return run_basis(global, bc_sel, bc_k, "gram", bc_pairs, bc_states, format);
    }

    if (classify_cmd->parsed()) {
      return run_classify(global, cl_n, cl_d, cl_kmin, format);
    }

    std::cerr << "no subcommand selected\n";
    return fail_usage();
  } catch (const Error& e) {
    if (global.json_errors) {
      std::cerr << json{{"error",
                         {{"code", errc_name(e.code())}, {"message", e.what()}}}}
                       .dump()
                << '\n';
    } else {
      std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << '\n';
    }
    return fail_usage();
  } catch (const std::exception& e) {
    if (global.json_errors) {
      std::cerr
          << json{{"error", {{"code", "internal"}, {"message", e.what()}}}}.dump()
          << '\n';
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    return fail_usage();
  }
}
