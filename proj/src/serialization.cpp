#include "planark/serialization.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace planark {

using nlohmann::json;

std::string block_to_json(const CircleBlock& block) {
  json maps = json::array();
  for (const CoordinateMap& map : block.maps) {
    maps.push_back(map.indices);
  }
  return maps.dump();
}

std::string poa_to_csv(const PlanarOrthogonalArray& array) {
  std::ostringstream out;
  for (std::uint32_t row = 0; row < array.runs; ++row) {
    for (std::uint32_t col = 0; col < array.factors; ++col) {
      if (col > 0) out << ',';
      out << array.at(row, col);
    }
    out << '\n';
  }
  return out.str();
}

std::string poa_to_json(const PlanarOrthogonalArray& array) {
  json root;
  root["r"] = array.runs;
  root["N"] = array.factors;
  root["d"] = array.levels;
  root["k"] = array.strength;
  root["lambda"] = array.lambda;
  json data = json::array();
  for (std::uint32_t row = 0; row < array.runs; ++row) {
    json line = json::array();
    for (std::uint32_t col = 0; col < array.factors; ++col) {
      line.push_back(array.at(row, col));
    }
    data.push_back(std::move(line));
  }
  root["data"] = std::move(data);
  return root.dump();
}

PlanarOrthogonalArray poa_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  PlanarOrthogonalArray array;
  try {
    array.levels = root.at("d").get<std::uint32_t>();
    array.strength = root.at("k").get<std::uint32_t>();
    array.lambda = root.value("lambda", 1u);
    const json& data = root.at("data");
    if (!data.is_array() || data.empty()) {
      throw Error(Errc::parse_error, "data must be a non-empty array of rows");
    }
    array.runs = static_cast<std::uint32_t>(data.size());
    array.factors = static_cast<std::uint32_t>(data.front().size());
    array.data.reserve(std::size_t{array.runs} * array.factors);
    for (const json& row : data) {
      if (!row.is_array() || row.size() != array.factors) {
        throw Error(Errc::parse_error, "ragged data rows");
      }
      for (const json& cell : row) {
        const auto v = cell.get<std::uint32_t>();
        if (v >= array.levels) {
          throw Error(Errc::parse_error,
                      "entry " + std::to_string(v) + " out of range for d=" +
                          std::to_string(array.levels));
        }
        array.data.push_back(v);
      }
    }
    if (root.contains("r") && root.at("r").get<std::uint32_t>() != array.runs) {
      throw Error(Errc::parse_error, "header r disagrees with the data");
    }
    if (root.contains("N") && root.at("N").get<std::uint32_t>() != array.factors) {
      throw Error(Errc::parse_error, "header N disagrees with the data");
    }
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad POA JSON: ") + e.what());
  }
  return array;
}

PlanarOrthogonalArray poa_from_csv(const std::string& text, std::uint32_t d,
                                   std::uint32_t strength, std::uint32_t lambda) {
  PlanarOrthogonalArray array;
  array.levels = d;
  array.strength = strength;
  array.lambda = lambda;

  std::uint32_t line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::uint32_t col_no = 0;
    std::uint32_t cols = 0;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      ++col_no;
      std::size_t end = line.find(',', pos);
      if (end == std::string::npos) end = line.size();
      const std::string cell = line.substr(pos, end - pos);
      char* tail = nullptr;
      const unsigned long value = std::strtoul(cell.c_str(), &tail, 10);
      if (cell.empty() || tail == nullptr || *tail != '\0') {
        throw Error(Errc::parse_error,
                    "line " + std::to_string(line_no) + ", column " +
                        std::to_string(col_no) + ": not a digit string");
      }
      if (value >= d) {
        throw Error(Errc::parse_error,
                    "line " + std::to_string(line_no) + ", column " +
                        std::to_string(col_no) + ": entry out of range for d=" +
                        std::to_string(d));
      }
      array.data.push_back(static_cast<std::uint32_t>(value));
      ++cols;
      pos = end + 1;
      if (end == line.size()) break;
    }
    if (array.factors == 0) {
      array.factors = cols;
    } else if (cols != array.factors) {
      throw Error(Errc::parse_error,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(array.factors) + " columns, got " +
                      std::to_string(cols));
    }
    ++array.runs;
  }
  if (array.runs == 0) {
    throw Error(Errc::parse_error, "empty CSV input");
  }
  return array;
}

std::string state_to_json(const SparseState& state) {
  json root;
  root["d"] = state.d;
  root["N"] = state.parties;
  json terms = json::array();
  for (const SparseTerm& term : state.terms) {
    terms.push_back(json{{"idx", term.index}, {"phase", term.phase}});
  }
  root["terms"] = std::move(terms);
  return root.dump();
}

std::string dense_to_csv(const DenseState& state) {
  std::string out;
  char buffer[96];
  for (std::uint64_t flat = 0; flat < state.amplitudes.size(); ++flat) {
    const std::complex<double>& amp = state.amplitudes[flat];
    if (amp.real() == 0.0 && amp.imag() == 0.0) continue;
    std::snprintf(buffer, sizeof buffer, "%" PRIu64 ",%.17g,%.17g\n", flat,
                  amp.real(), amp.imag());
    out += buffer;
  }
  return out;
}

}  // namespace planark
