#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planark/entanglement.hpp"
#include "planark/lu_basis.hpp"
#include "planark/serialization.hpp"
#include "planark/version.hpp"

namespace py = pybind11;
using namespace planark;

namespace {

StateFamily family_from_name(const std::string& name) {
  if (name == "pme-even" || name == "even") return StateFamily::pme_even;
  if (name == "pme-odd" || name == "odd") return StateFamily::pme_odd;
  throw Error(Errc::invalid_input, "unknown family " + name);
}

py::array_t<std::complex<double>> density_to_numpy(const DensityMatrix& rho) {
  const auto dim = static_cast<py::ssize_t>(rho.dim());
  py::array_t<std::complex<double>> out({dim, dim});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < dim; ++i) {
    for (py::ssize_t j = 0; j < dim; ++j) {
      view(i, j) = rho.value(static_cast<std::uint64_t>(i),
                             static_cast<std::uint64_t>(j));
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_planark, m) {
  m.doc() = "planar k-uniform states: circle blocks, planar orthogonal arrays, "
            "and verification oracles";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "PlanarkError");

  // qudit core
  m.def("mod_add", &mod_add, py::arg("a"), py::arg("b"), py::arg("d"));
  m.def(
      "encode_index",
      [](const std::vector<std::uint32_t>& digits, std::uint32_t d) {
        return encode_index(digits, d);
      },
      py::arg("digits"), py::arg("d"));
  m.def("decode_index", &decode_index, py::arg("value"), py::arg("d"),
        py::arg("length"));
  m.def("enumerate_tuples", &enumerate_tuples, py::arg("k"), py::arg("d"),
        py::arg("cap") = kDefaultEnumCap);

  // circle blocks
  py::class_<CoordinateMap>(m, "CoordinateMap")
      .def_readonly("arity", &CoordinateMap::arity)
      .def_readonly("indices", &CoordinateMap::indices)
      .def("__repr__", [](const CoordinateMap& map) { return to_string(map); });

  py::class_<CircleBlock>(m, "CircleBlock")
      .def_readonly("k", &CircleBlock::strength)
      .def_readonly("s", &CircleBlock::overhang)
      .def_readonly("canonical", &CircleBlock::canonical)
      .def_readonly("maps", &CircleBlock::maps)
      .def("index_sets",
           [](const CircleBlock& block) {
             std::vector<std::vector<std::uint32_t>> sets;
             for (const CoordinateMap& map : block.maps) sets.push_back(map.indices);
             return sets;
           })
      .def("__len__", [](const CircleBlock& block) { return block.length(); })
      .def("__repr__", [](const CircleBlock& block) { return to_string(block); });

  py::class_<WindowCollision>(m, "WindowCollision")
      .def_readonly("window_start", &WindowCollision::window_start)
      .def_readonly("first_input", &WindowCollision::first_input)
      .def_readonly("second_input", &WindowCollision::second_input);

  py::class_<BlockReport>(m, "BlockReport")
      .def_readonly("passed", &BlockReport::passed)
      .def_readonly("windows_checked", &BlockReport::windows_checked)
      .def_readonly("collisions", &BlockReport::collisions);

  m.def("build_canonical_block", &build_canonical_block, py::arg("k"), py::arg("s"));
  m.def("block_for_length", &block_for_length, py::arg("k"), py::arg("n"));
  m.def("paste_blocks", &paste_blocks, py::arg("first"), py::arg("second"));
  m.def("verify_block", &verify_block, py::arg("block"), py::arg("d"),
        py::arg("cap") = kDefaultEnumCap);
  m.def(
      "construction_table_csv",
      [](std::uint32_t k, std::uint32_t s, bool seed_only) {
        return (seed_only ? build_initial_table(k, s) : build_construction_table(k, s))
            .to_csv();
      },
      py::arg("k"), py::arg("s"), py::arg("seed_only") = false);
  m.def("block_to_json", &block_to_json, py::arg("block"));

  // planar orthogonal arrays
  py::class_<PlanarOrthogonalArray>(m, "PlanarOrthogonalArray")
      .def_readonly("r", &PlanarOrthogonalArray::runs)
      .def_readonly("n", &PlanarOrthogonalArray::factors)
      .def_readonly("d", &PlanarOrthogonalArray::levels)
      .def_readonly("k", &PlanarOrthogonalArray::strength)
      .def_readonly("lam", &PlanarOrthogonalArray::lambda)
      .def_readonly("certified_strength", &PlanarOrthogonalArray::certified_strength)
      .def_readonly("certified_irredundant",
                    &PlanarOrthogonalArray::certified_irredundant)
      .def("rows",
           [](const PlanarOrthogonalArray& array) {
             std::vector<std::vector<std::uint32_t>> rows;
             for (std::uint32_t i = 0; i < array.runs; ++i) {
               rows.emplace_back(
                   array.data.begin() + std::size_t{i} * array.factors,
                   array.data.begin() + std::size_t{i + 1} * array.factors);
             }
             return rows;
           })
      .def("__repr__", [](const PlanarOrthogonalArray& array) {
        return "POA(" + std::to_string(array.runs) + "," +
               std::to_string(array.factors) + "," + std::to_string(array.levels) +
               "," + std::to_string(array.strength) + ")";
      });

  py::class_<StrengthViolation>(m, "StrengthViolation")
      .def_readonly("window_start", &StrengthViolation::window_start)
      .def_readonly("tuple", &StrengthViolation::tuple)
      .def_readonly("count", &StrengthViolation::count);

  py::class_<StrengthReport>(m, "StrengthReport")
      .def_readonly("passed", &StrengthReport::passed)
      .def_readonly("windows_checked", &StrengthReport::windows_checked)
      .def_readonly("violation", &StrengthReport::violation)
      .def_readonly("note", &StrengthReport::note);

  py::class_<DuplicatePair>(m, "DuplicatePair")
      .def_readonly("window_start", &DuplicatePair::window_start)
      .def_readonly("row_a", &DuplicatePair::row_a)
      .def_readonly("row_b", &DuplicatePair::row_b);

  py::class_<IrredundancyReport>(m, "IrredundancyReport")
      .def_readonly("passed", &IrredundancyReport::passed)
      .def_readonly("windows_checked", &IrredundancyReport::windows_checked)
      .def_readonly("duplicate", &IrredundancyReport::duplicate);

  m.def("poa_from_block", &poa_from_block, py::arg("block"), py::arg("d"),
        py::arg("cap") = kDefaultEnumCap);
  m.def("verify_strength", &verify_strength, py::arg("array"),
        py::arg("cap") = kDefaultEnumCap);
  m.def("verify_irredundant", &verify_irredundant, py::arg("array"));
  m.def("certify", &certify, py::arg("array"), py::arg("cap") = kDefaultEnumCap);
  m.def("poa_to_csv", &poa_to_csv, py::arg("array"));
  m.def("poa_to_json", &poa_to_json, py::arg("array"));
  m.def("poa_from_csv", &poa_from_csv, py::arg("text"), py::arg("d"), py::arg("k"),
        py::arg("lam") = 1);
  m.def("poa_from_json", &poa_from_json, py::arg("text"));

  // states
  py::class_<SparseTerm>(m, "SparseTerm")
      .def_readonly("index", &SparseTerm::index)
      .def_readonly("phase", &SparseTerm::phase);

  py::class_<SparseState>(m, "SparseState")
      .def_readonly("d", &SparseState::d)
      .def_readonly("parties", &SparseState::parties)
      .def_readonly("terms", &SparseState::terms)
      .def_readonly("certified", &SparseState::certified)
      .def("support_size", &SparseState::support_size)
      .def("__eq__", [](const SparseState& a, const SparseState& b) { return a == b; })
      .def("__repr__", [](const SparseState& state) {
        return "SparseState(d=" + std::to_string(state.d) +
               ", parties=" + std::to_string(state.parties) +
               ", terms=" + std::to_string(state.terms.size()) + ")";
      });

  m.def("state_from_poa", &state_from_poa, py::arg("array"));
  m.def("build_pme_even", &build_pme_even, py::arg("n"), py::arg("d"));
  m.def("build_pme_odd", &build_pme_odd, py::arg("n"), py::arg("d"));
  m.def("build_ghz", &build_ghz, py::arg("parties"), py::arg("d"));
  m.def("build_fixture", &build_fixture, py::arg("id"));
  m.def("state_to_json", &state_to_json, py::arg("state"));
  m.def(
      "to_dense",
      [](const SparseState& state, std::uint64_t cap) {
        const DenseState dense = to_dense(state, cap);
        const std::vector<py::ssize_t> shape{
            static_cast<py::ssize_t>(dense.amplitudes.size())};
        return py::array_t<std::complex<double>>(shape, dense.amplitudes.data());
      },
      py::arg("state"), py::arg("cap") = kDefaultDenseCap);
  m.def("extract_shares", &extract_shares, py::arg("state"), py::arg("party"));
  m.def("reassemble_shares", &reassemble_shares, py::arg("shares"), py::arg("party"));

  // entanglement
  py::class_<BipartitionProfile>(m, "BipartitionProfile")
      .def_readonly("s", &BipartitionProfile::unpaired)
      .def_readonly("t", &BipartitionProfile::pairs)
      .def_readonly("a_unpaired", &BipartitionProfile::a_unpaired)
      .def_readonly("a_paired", &BipartitionProfile::a_paired)
      .def_readonly("b_unpaired", &BipartitionProfile::b_unpaired)
      .def_readonly("b_paired", &BipartitionProfile::b_paired)
      .def_property_readonly("delta", &BipartitionProfile::delta);

  py::class_<WindowCheck>(m, "WindowCheck")
      .def_readonly("start", &WindowCheck::start)
      .def_readonly("passed", &WindowCheck::passed);

  py::class_<UniformityReport>(m, "UniformityReport")
      .def_readonly("k", &UniformityReport::k)
      .def_readonly("all_passed", &UniformityReport::all_passed)
      .def_readonly("windows", &UniformityReport::windows);

  m.def(
      "bipartition_profile",
      [](std::uint32_t parties, std::vector<std::uint32_t> part_a,
         const std::string& family) {
        return bipartition_profile(Bipartition{parties, std::move(part_a)},
                                   family_from_name(family));
      },
      py::arg("parties"), py::arg("part_a"), py::arg("family"));
  m.def(
      "predicted_entropy",
      [](const BipartitionProfile& profile, const std::string& family) {
        return predicted_entropy(profile, family_from_name(family));
      },
      py::arg("profile"), py::arg("family"));
  m.def(
      "reduced_density",
      [](const SparseState& state, const std::vector<std::uint32_t>& subset,
         std::uint64_t cap) {
        return density_to_numpy(reduced_density(state, subset, cap));
      },
      py::arg("state"), py::arg("subset"), py::arg("cap") = kDefaultEnumCap,
      "Exact-path reduced density matrix, evaluated to complex floats.");
  m.def(
      "dense_reduced_density",
      [](py::array_t<std::complex<double>, py::array::c_style> amplitudes,
         std::uint32_t d, std::uint32_t parties,
         const std::vector<std::uint32_t>& subset, std::uint64_t cap) {
        DenseState dense;
        dense.d = d;
        dense.parties = parties;
        auto view = amplitudes.unchecked<1>();
        dense.amplitudes.resize(static_cast<std::size_t>(view.shape(0)));
        for (py::ssize_t i = 0; i < view.shape(0); ++i) {
          dense.amplitudes[static_cast<std::size_t>(i)] = view(i);
        }
        return density_to_numpy(dense_reduced_density(dense, subset, cap));
      },
      py::arg("amplitudes"), py::arg("d"), py::arg("parties"), py::arg("subset"),
      py::arg("cap") = kDefaultEnumCap,
      "Independent numeric partial trace over a dense amplitude vector.");
  m.def(
      "is_window_maximally_mixed",
      [](const SparseState& state, const std::vector<std::uint32_t>& subset,
         std::uint64_t cap) {
        return is_maximally_mixed(reduced_density(state, subset, cap), state.d,
                                  static_cast<std::uint32_t>(subset.size()));
      },
      py::arg("state"), py::arg("subset"), py::arg("cap") = kDefaultEnumCap);
  m.def("verify_planar_k_uniform", &verify_planar_k_uniform, py::arg("state"),
        py::arg("k"), py::arg("cap") = kDefaultEnumCap);
  m.def(
      "von_neumann_entropy",
      [](const SparseState& state, std::vector<std::uint32_t> part_a,
         const std::string& units, std::uint64_t cap) {
        return von_neumann_entropy(
            state, Bipartition{state.parties, std::move(part_a)},
            units == "nat" ? EntropyUnits::natural : EntropyUnits::log_d, cap);
      },
      py::arg("state"), py::arg("part_a"), py::arg("units") = "logd",
      py::arg("cap") = kDefaultEnumCap);
  m.def("is_genuinely_entangled", &is_genuinely_entangled, py::arg("state"),
        py::arg("max_parties") = 16, py::arg("cap") = kDefaultEnumCap);

  // local unitary orbit
  py::class_<LocalUnitaryLabel>(m, "LocalUnitaryLabel")
      .def(py::init([](std::vector<std::uint32_t> exponents, std::uint32_t k) {
             return LocalUnitaryLabel{std::move(exponents), k};
           }),
           py::arg("exponents"), py::arg("k"))
      .def_readonly("exponents", &LocalUnitaryLabel::exponents)
      .def_readonly("k", &LocalUnitaryLabel::z_count);

  m.def("apply_x", &apply_x, py::arg("state"), py::arg("party"), py::arg("power"));
  m.def("apply_z", &apply_z, py::arg("state"), py::arg("party"), py::arg("power"));
  m.def("apply_u", &apply_u, py::arg("state"), py::arg("label"));
  m.def("inner_product", &inner_product, py::arg("s1"), py::arg("s2"));
  m.def("generate_basis", &generate_basis, py::arg("state"), py::arg("k"),
        py::arg("cap") = kDefaultEnumCap);

  py::class_<SupportLevel>(m, "SupportLevel")
      .def_readonly("k", &SupportLevel::strength)
      .def_readonly("state", &SupportLevel::state)
      .def_readonly("is_kmin_uniform", &SupportLevel::is_kmin_uniform)
      .def_readonly("fails_next_level", &SupportLevel::fails_next_level);

  m.def("classify_support_levels", &classify_support_levels, py::arg("parties"),
        py::arg("d"), py::arg("k_min"), py::arg("cap") = kDefaultEnumCap);
}
