#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vops/analysis.hpp"
#include "vops/cosetenum.hpp"
#include "vops/errors.hpp"
#include "vops/io.hpp"
#include "vops/operators.hpp"

namespace py = pybind11;
using namespace vops;

PYBIND11_MODULE(_core, m) {
  m.doc() = "voltage operations on premaniplexes";

  py::register_exception<Error>(m, "VopsError");

  // -- words ---------------------------------------------------------------
  py::class_<CoxWord>(m, "CoxWord")
      .def(py::init<int, std::vector<int>>(), py::arg("rank"),
           py::arg("letters"))
      .def_static("identity", &CoxWord::identity)
      .def_property_readonly("rank", &CoxWord::rank)
      .def_property_readonly("letters",
                             [](const CoxWord& w) { return w.letters(); })
      .def("__len__", &CoxWord::length)
      .def("is_identity", &CoxWord::is_identity)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__repr__",
           [](const CoxWord& w) { return to_string(w); });
  m.def("multiply", &multiply);
  m.def("inverse", &inverse);
  m.def("conjugate", &conjugate, py::arg("w"), py::arg("u"));
  m.def("is_involution", &is_involution);
  m.def("substitute", &substitute);
  m.def("parse_word", &parse_word, py::arg("text"), py::arg("rank"));

  // -- premaniplexes -------------------------------------------------------
  py::class_<Premaniplex>(m, "Premaniplex")
      .def(py::init<int, std::vector<std::vector<int>>>(), py::arg("rank"),
           py::arg("perms"))
      .def_property_readonly("rank", &Premaniplex::rank)
      .def_property_readonly("flag_count", &Premaniplex::flag_count)
      .def("adj", &Premaniplex::adj, py::arg("flag"), py::arg("color"))
      .def_property_readonly("perms",
                             [](const Premaniplex& p) { return p.perms(); })
      .def(py::self == py::self)
      .def("__repr__", [](const Premaniplex& p) {
        return "Premaniplex(rank=" + std::to_string(p.rank()) +
               ", flags=" + std::to_string(p.flag_count()) + ")";
      });

  py::enum_<Violation::Kind>(m, "ViolationKind")
      .value("NotInvolution", Violation::Kind::NotInvolution)
      .value("AxiomBroken", Violation::Kind::AxiomBroken);
  py::class_<Violation>(m, "Violation")
      .def_readonly("kind", &Violation::kind)
      .def_readonly("flag", &Violation::flag)
      .def_readonly("color", &Violation::color)
      .def_readonly("color2", &Violation::color2);
  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("violations", &ValidationReport::violations)
      .def("ok", &ValidationReport::ok);
  m.def("validate", &validate);
  m.def("is_connected", &is_connected);
  m.def("is_maniplex", &is_maniplex);
  m.def("apply_word", &apply_word, py::arg("p"), py::arg("flag"),
        py::arg("word"));
  m.def("components", &components);

  py::class_<SchreierSubgroup>(m, "SchreierSubgroup")
      .def_readonly("rank", &SchreierSubgroup::rank)
      .def_readonly("base", &SchreierSubgroup::base)
      .def_readonly("generators", &SchreierSubgroup::generators);
  m.def("schreier_generators", &schreier_generators, py::arg("p"),
        py::arg("base"));

  py::class_<Quotient>(m, "Quotient")
      .def_readonly("graph", &Quotient::graph)
      .def_readonly("orbit_of", &Quotient::orbit_of);
  m.def("quotient", &quotient);

  m.def("one_vertex", &one_vertex);
  m.def("two_flag", &two_flag, py::arg("rank"), py::arg("semi_colors"));
  m.def("polygon", &polygon);

  // -- symmetry ------------------------------------------------------------
  py::class_<FlagPermutation>(m, "FlagPermutation")
      .def(py::init([](std::vector<int> images) {
             return FlagPermutation{std::move(images)};
           }),
           py::arg("images"))
      .def_readonly("images", &FlagPermutation::images)
      .def("__call__", &FlagPermutation::operator())
      .def(py::self == py::self);
  py::class_<AutomorphismGroup>(m, "AutomorphismGroup")
      .def_readonly("elements", &AutomorphismGroup::elements)
      .def_readonly("orbit_of", &AutomorphismGroup::orbit_of)
      .def_readonly("orbit_lists", &AutomorphismGroup::orbit_lists)
      .def("order", &AutomorphismGroup::order);
  m.def("automorphisms", &automorphisms);
  m.def("generated_group", &generated_group);
  m.def("orbits", &orbits);
  m.def("is_isomorphic", &is_isomorphic);
  m.def("covers", &covers);
  m.def("stg", &stg);

  // -- coset enumeration ---------------------------------------------------
  py::class_<Presentation>(m, "Presentation")
      .def(py::init([](int gens, std::vector<std::vector<int>> relators,
                       bool string_commutations) {
             return Presentation{gens, std::move(relators),
                                 string_commutations};
           }),
           py::arg("generator_count"), py::arg("relators"),
           py::arg("string_commutations") = false)
      .def_readwrite("generator_count", &Presentation::generator_count)
      .def_readwrite("relators", &Presentation::relators)
      .def_readwrite("string_commutations", &Presentation::string_commutations);
  py::enum_<CosetTable::Status>(m, "EnumStatus")
      .value("Complete", CosetTable::Status::Complete)
      .value("Capped", CosetTable::Status::Capped);
  py::class_<CosetTable>(m, "CosetTable")
      .def_readonly("status", &CosetTable::status)
      .def_readonly("rows", &CosetTable::rows)
      .def_readonly("cosets", &CosetTable::cosets);
  m.def("todd_coxeter", &todd_coxeter, py::arg("presentation"),
        py::arg("subgroup"), py::arg("cap") = kDefaultCosetCap);
  m.def("coxeter_flag_graph", &coxeter_flag_graph, py::arg("schlafli"),
        py::arg("extra") = std::vector<std::vector<int>>{},
        py::arg("cap") = kDefaultCosetCap);
  py::class_<SchreierRealization>(m, "SchreierRealization")
      .def_readonly("status", &SchreierRealization::status)
      .def_readonly("graph", &SchreierRealization::graph)
      .def_readonly("cosets", &SchreierRealization::cosets)
      .def("ok", &SchreierRealization::ok);
  m.def("realize_schreier", &realize_schreier, py::arg("rank"),
        py::arg("generators"), py::arg("cap") = kDefaultCosetCap);

  // -- voltage operators ---------------------------------------------------
  py::class_<VoltageOperator>(m, "VoltageOperator")
      .def(py::init([](int source_rank, Premaniplex y,
                       std::vector<std::vector<CoxWord>> voltages, int base) {
             return VoltageOperator{source_rank, std::move(y),
                                    std::move(voltages), base};
           }),
           py::arg("source_rank"), py::arg("y"), py::arg("voltages"),
           py::arg("base") = 0)
      .def_readonly("source_rank", &VoltageOperator::source_rank)
      .def_readonly("y", &VoltageOperator::y)
      .def_readonly("voltages", &VoltageOperator::voltages)
      .def_readonly("base", &VoltageOperator::base)
      .def_property_readonly("target_rank", &VoltageOperator::target_rank)
      .def("voltage", &VoltageOperator::voltage, py::arg("flag"),
           py::arg("color"));
  py::enum_<OperatorViolation::Kind>(m, "OperatorViolationKind")
      .value("BadRank", OperatorViolation::Kind::BadRank)
      .value("InverseMismatch", OperatorViolation::Kind::InverseMismatch)
      .value("NotInvolution", OperatorViolation::Kind::NotInvolution)
      .value("HomotopyBroken", OperatorViolation::Kind::HomotopyBroken);
  py::class_<OperatorViolation>(m, "OperatorViolation")
      .def_readonly("kind", &OperatorViolation::kind)
      .def_readonly("flag", &OperatorViolation::flag)
      .def_readonly("color", &OperatorViolation::color)
      .def_readonly("color2", &OperatorViolation::color2);
  py::class_<OperatorReport>(m, "OperatorReport")
      .def_readonly("violations", &OperatorReport::violations)
      .def("ok", &OperatorReport::ok);
  m.def("validate_operator", &validate_operator);
  m.def(
      "voltage_of_path",
      [](const VoltageOperator& op, int start, const CoxWord& word) {
        return voltage_of_path(op, Path{start, word});
      },
      py::arg("op"), py::arg("start"), py::arg("word"));
  m.def("product", &product, py::arg("x"), py::arg("op"));
  m.def("normalize", &normalize);
  m.def("compose", &compose, py::arg("first"), py::arg("second"));
  m.def("zeta", &zeta, py::arg("op"), py::arg("word"));
  py::enum_<Tri>(m, "Tri")
      .value("Yes", Tri::Yes)
      .value("No", Tri::No)
      .value("Inconclusive", Tri::Inconclusive);
  py::class_<ConnectivityCheck>(m, "ConnectivityCheck")
      .def_readonly("verdict", &ConnectivityCheck::verdict)
      .def_readonly("index", &ConnectivityCheck::index)
      .def_readonly("abelian_witness", &ConnectivityCheck::abelian_witness)
      .def_readonly("cosets", &ConnectivityCheck::cosets);
  m.def("preserves_connectivity", &preserves_connectivity, py::arg("op"),
        py::arg("cap") = kDefaultCosetCap);

  // -- built-in operators --------------------------------------------------
  m.def("medial", &medial);
  m.def("truncation", &truncation);
  m.def("petrie", &petrie);
  m.def("omnitruncation", &omnitruncation);
  m.def("dual", &dual);
  m.def("d_operator", &d_operator, py::arg("n"), py::arg("images"));
  m.def("double_cover", &double_cover);
  m.def("prism", &prism);
  m.def("pyramid", &pyramid);
  m.def("builtin_names", &builtin_names);
  m.def("builtin", &builtin);

  // -- analysis ------------------------------------------------------------
  m.def("embed_x_automorphism", &embed_x_automorphism, py::arg("g"),
        py::arg("y_size"));
  py::class_<OrbitAccount>(m, "OrbitAccount")
      .def_readonly("x_orbits", &OrbitAccount::x_orbits)
      .def_readonly("y_size", &OrbitAccount::y_size)
      .def_readonly("x_aut_order", &OrbitAccount::x_aut_order)
      .def_readonly("lifted_aut_order", &OrbitAccount::lifted_aut_order)
      .def_readonly("product_aut_order", &OrbitAccount::product_aut_order)
      .def_readonly("index", &OrbitAccount::index)
      .def_readonly("product_orbits", &OrbitAccount::product_orbits)
      .def_readonly("t", &OrbitAccount::t);
  m.def("orbit_accounting", &orbit_accounting, py::arg("x"), py::arg("op"));
  py::class_<ZResult>(m, "ZResult")
      .def_readonly("status", &ZResult::status)
      .def_readonly("graph", &ZResult::graph)
      .def_readonly("cosets", &ZResult::cosets)
      .def("ok", &ZResult::ok);
  m.def("z_upsilon", &z_upsilon, py::arg("op"), py::arg("y1"),
        py::arg("cap") = kDefaultCosetCap);
  py::enum_<Verdict>(m, "Verdict")
      .value("NoExtra", Verdict::NoExtra)
      .value("NoExtraBeyondLifts", Verdict::NoExtraBeyondLifts)
      .value("ExtraPresent", Verdict::ExtraPresent)
      .value("Inconclusive", Verdict::Inconclusive);
  py::class_<ZRecord>(m, "ZRecord")
      .def_readonly("y1", &ZRecord::y1)
      .def_readonly("in_base_orbit", &ZRecord::in_base_orbit)
      .def_readonly("capped", &ZRecord::capped)
      .def_readonly("z_flags", &ZRecord::z_flags)
      .def_readonly("covered", &ZRecord::covered);
  py::class_<ExtraSymmetryCertificate>(m, "ExtraSymmetryCertificate")
      .def_readonly("verdict", &ExtraSymmetryCertificate::verdict)
      .def_readonly("records", &ExtraSymmetryCertificate::records)
      .def_readonly("direct_checked", &ExtraSymmetryCertificate::direct_checked)
      .def_readonly("product_aut_order",
                    &ExtraSymmetryCertificate::product_aut_order)
      .def_readonly("lifted_order", &ExtraSymmetryCertificate::lifted_order);
  m.def("certify", &certify, py::arg("x"), py::arg("op"),
        py::arg("cap") = kDefaultCosetCap);
  m.def("aut_preserving", &aut_preserving);
  m.def("find_lift", &find_lift, py::arg("x"), py::arg("op"), py::arg("tau"));
  py::class_<LiftedGroup>(m, "LiftedGroup")
      .def_readonly("group", &LiftedGroup::group)
      .def_readonly("lifting_taus", &LiftedGroup::lifting_taus)
      .def_readonly("y_aut_order", &LiftedGroup::y_aut_order)
      .def_readonly("equals_full", &LiftedGroup::equals_full);
  m.def("lifted_group", &lifted_group, py::arg("x"), py::arg("op"));
  m.def("same_result_check", &same_result_check, py::arg("x"), py::arg("op"),
        py::arg("tau"), py::arg("images"));

  // -- serialization -------------------------------------------------------
  m.def("read_pmx_text", &read_pmx_text);
  m.def("write_pmx_text", &write_pmx_text);
  m.def("read_vop_text", &read_vop_text);
  m.def("write_vop_text", &write_vop_text);
  m.def("write_dot_text", &write_dot_text);
}
