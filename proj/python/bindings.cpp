#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "hymcg/hyp_dictionary.hpp"
#include "hymcg/json_io.hpp"
#include "hymcg/rand_util.hpp"
#include "hymcg/strata.hpp"
#include "hymcg/surface.hpp"
#include "hymcg/symplectic.hpp"
#include "hymcg/words.hpp"

namespace py = pybind11;
using namespace hymcg;

namespace pybind11::detail {

// cpp_int <-> python int, routed through decimal strings.
template <>
struct type_caster<BigInt> {
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = BigInt(std::string(py::str(src)));
    return true;
  }

  static handle cast(const BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

std::optional<std::int64_t> optMod(const py::object& mod) {
  if (mod.is_none()) return std::nullopt;
  return mod.cast<std::int64_t>();
}

std::string jsonStr(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_hymcg, m) {
  m.doc() = "Exact combinatorics of surfaces with an order-2 symmetry";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<Surface>(m, "Surface")
      .def(py::init<int, int, int>(), py::arg("genus"), py::arg("punctures"),
           py::arg("boundary"))
      .def_property_readonly("genus", &Surface::genus)
      .def_property_readonly("punctures", &Surface::punctures)
      .def_property_readonly("boundary", &Surface::boundary)
      .def_property_readonly("euler_characteristic",
                             &Surface::eulerCharacteristic)
      .def_property_readonly("hyperbolic", &Surface::hyperbolic)
      .def("filled", &Surface::filled)
      .def("interior", &Surface::interior)
      .def("to_json", [](const Surface& s) { return jsonStr(toJson(s)); })
      .def(py::self == py::self)
      .def("__repr__", [](const Surface& s) {
        return "Surface(" + std::to_string(s.genus()) + "," +
               std::to_string(s.punctures()) + "," +
               std::to_string(s.boundary()) + ")";
      });

  py::class_<HyperellipticSurface>(m, "HyperellipticSurface")
      .def_property_readonly("base", &HyperellipticSurface::base)
      .def_property_readonly("w_points", &HyperellipticSurface::wPoints)
      .def_property_readonly("w_punctures", &HyperellipticSurface::wPunctures)
      .def_property_readonly("w_boundary", &HyperellipticSurface::wBoundary)
      .def("to_json",
           [](const HyperellipticSurface& h) { return jsonStr(toJson(h)); });

  py::class_<QuotientProfile>(m, "QuotientProfile")
      .def_readonly("quotient", &QuotientProfile::quotient)
      .def_readonly("branch_points", &QuotientProfile::branchPoints)
      .def("to_json",
           [](const QuotientProfile& q) { return jsonStr(toJson(q)); });

  m.def("make_surface", &makeSurface, py::arg("genus"), py::arg("punctures"),
        py::arg("boundary"));
  m.def("make_hyperelliptic", &makeHyperelliptic, py::arg("surface"),
        py::arg("w_points"), py::arg("w_punctures"), py::arg("w_boundary"));
  m.def("quotient_surface", &quotientSurface, py::arg("surface"));

  py::class_<TwistWord>(m, "TwistWord")
      .def(py::init([](int genus, const std::string& literal) {
             return TwistWord::parse(genus, literal);
           }),
           py::arg("genus"), py::arg("literal"))
      .def_property_readonly("genus", &TwistWord::genus)
      .def("length", &TwistWord::length)
      .def("concat", &TwistWord::concat)
      .def("inverse", &TwistWord::inverse)
      .def("__str__", &TwistWord::str)
      .def(py::self == py::self)
      .def("__repr__",
           [](const TwistWord& w) { return "TwistWord('" + w.str() + "')"; });

  m.def("parse_word", &TwistWord::parse, py::arg("genus"), py::arg("literal"));
  m.def("reduce", &reduce, py::arg("word"));
  m.def("involution_word", &involutionWord, py::arg("genus"));

  py::class_<Permutation>(m, "Permutation")
      .def("apply", &Permutation::apply, py::arg("point"))
      .def("then", &Permutation::then)
      .def("inverse", &Permutation::inverse)
      .def("is_identity", &Permutation::isIdentity)
      .def_property_readonly("degree", &Permutation::degree)
      .def("cycles", &Permutation::cycles)
      .def(py::self == py::self)
      .def("__repr__",
           [](const Permutation& p) { return "Permutation" + p.cycles(); });

  m.def("rho_w", &rhoW, py::arg("word"));
  m.def("perm_group_order", &permGroupOrder, py::arg("genus"));

  py::class_<SympMatrix>(m, "SympMatrix")
      .def_property_readonly("size", &SympMatrix::size)
      .def_property_readonly(
          "modulus",
          [](const SympMatrix& m2) -> py::object {
            if (!m2.modulus()) return py::none();
            return py::cast(*m2.modulus());
          })
      .def("rows",
           [](const SympMatrix& m2) {
             std::vector<std::vector<BigInt>> rows(m2.size());
             for (int r = 0; r < m2.size(); ++r)
               for (int c = 0; c < m2.size(); ++c)
                 rows[r].push_back(m2.at(r, c));
             return rows;
           })
      .def("is_identity", &SympMatrix::isIdentity)
      .def("is_minus_identity", &SympMatrix::isMinusIdentity)
      .def("is_symplectic", &SympMatrix::isSymplectic)
      .def("inverse", &SympMatrix::inverse)
      .def("negated", &SympMatrix::negated)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("to_json", [](const SympMatrix& m2) { return jsonStr(toJson(m2)); });

  m.def("identity_matrix", &SympMatrix::identity, py::arg("size"),
        py::arg("modulus") = std::nullopt);
  m.def(
      "evaluate",
      [](const TwistWord& w, const py::object& mod) {
        return evaluate(w, optMod(mod));
      },
      py::arg("word"), py::arg("modulus") = py::none());
  m.def("level_membership", &levelMembership, py::arg("word"), py::arg("modulus"));
  m.def(
      "chain_classes",
      [](int genus) { return chainClasses(genus).vectors; },
      py::arg("genus"));
  m.def(
      "transvection",
      [](const std::vector<BigInt>& v, const py::object& mod) {
        return transvection(v, optMod(mod));
      },
      py::arg("vector"), py::arg("modulus") = py::none());
  m.def(
      "chain_transvections",
      [](int genus, const py::object& mod, bool squares) {
        return chainTransvections(genus, optMod(mod), squares);
      },
      py::arg("genus"), py::arg("modulus") = py::none(),
      py::arg("squares") = false);
  m.def(
      "braid_relations_hold",
      [](int genus, const py::object& mod) {
        return braidRelationsHold(genus, optMod(mod));
      },
      py::arg("genus"), py::arg("modulus") = py::none());
  m.def("sp_order", &spOrder, py::arg("genus"), py::arg("p"));

  py::class_<GroupClosure>(m, "GroupClosure")
      .def_property_readonly("order", &GroupClosure::order)
      .def("contains", &GroupClosure::contains);
  m.def("group_closure", &groupClosure, py::arg("generators"),
        py::arg("cap") = 10'000'000);

  py::class_<LaminarFamily>(m, "LaminarFamily")
      .def(py::init<int, std::vector<std::vector<int>>>(), py::arg("n"),
           py::arg("members"))
      .def_property_readonly("n", &LaminarFamily::n)
      .def_property_readonly("members", &LaminarFamily::members)
      .def("__len__", &LaminarFamily::size)
      .def("__str__", &LaminarFamily::str)
      .def(py::self == py::self)
      .def("to_json", [](const LaminarFamily& f) { return jsonStr(toJson(f)); })
      .def("__repr__", [](const LaminarFamily& f) {
        return "LaminarFamily(" + std::to_string(f.n()) + ", " + f.str() + ")";
      });
  m.def("parse_family", &LaminarFamily::parse, py::arg("n"), py::arg("literal"));

  m.def(
      "count_vertex_orbits",
      [](int n, const std::string& variant, const std::string& group) {
        return countVertexOrbits(n, parseVariant(variant), parseOrbitGroup(group));
      },
      py::arg("n"), py::arg("variant") = "full", py::arg("group") = "pure");
  m.def(
      "enumerate_simplices",
      [](int n, int dim, const std::string& variant, const std::string& group) {
        return enumerateSimplices(n, dim, parseVariant(variant),
                                  parseOrbitGroup(group));
      },
      py::arg("n"), py::arg("dim"), py::arg("variant") = "full",
      py::arg("group") = "pure");
  m.def(
      "complex_dimension",
      [](int n, const std::string& variant) {
        return complexDimension(n, parseVariant(variant));
      },
      py::arg("n"), py::arg("variant") = "full");
  m.def(
      "homology",
      [](int n, const std::string& variant, int max_dim) {
        const auto h = homology(n, parseVariant(variant), max_dim);
        py::dict out;
        out["f_vector"] = h.fVector;
        out["betti"] = h.betti;
        out["euler_characteristic"] = h.eulerCharacteristic;
        return out;
      },
      py::arg("n"), py::arg("variant") = "full", py::arg("max_dim") = -1);

  py::class_<TreeVertex>(m, "TreeVertex")
      .def_readonly("legs", &TreeVertex::legs);
  py::class_<StableTree>(m, "StableTree")
      .def_readonly("n", &StableTree::n)
      .def_readonly("vertices", &StableTree::vertices)
      .def_readonly("edges", &StableTree::edges)
      .def("degree", &StableTree::degree)
      .def("stable", &StableTree::stable)
      .def("dot", &StableTree::dot)
      .def("to_json", [](const StableTree& t) { return jsonStr(toJson(t)); });
  m.def("family_to_tree", &familyToTree, py::arg("family"));
  m.def("tree_to_family", &treeToFamily, py::arg("tree"));
  m.def(
      "random_laminar_family",
      [](int n, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return randomLaminarFamily(n, rng);
      },
      py::arg("n"), py::arg("seed"));

  py::class_<SymmetricCurveClass>(m, "SymmetricCurveClass")
      .def_property_readonly(
          "kind",
          [](const SymmetricCurveClass& c) { return curveKindName(c.kind); })
      .def_readonly("subset", &SymmetricCurveClass::subset)
      .def_readonly("genus_left", &SymmetricCurveClass::genusLeft)
      .def_readonly("genus_right", &SymmetricCurveClass::genusRight)
      .def("__str__", &SymmetricCurveClass::str)
      .def("to_json",
           [](const SymmetricCurveClass& c) { return jsonStr(toJson(c)); });
  m.def("classify_curve", &classifyCurve, py::arg("subset"), py::arg("g"));

  py::class_<LiftResult>(m, "LiftResult")
      .def_readonly("classes", &LiftResult::classes)
      .def_readonly("upstairs_simplex_size", &LiftResult::upstairsSimplexSize);
  m.def("lift_multicurve", &liftMulticurve, py::arg("family"), py::arg("g"));

  py::class_<CutComponent>(m, "CutComponent")
      .def_readonly("genus", &CutComponent::genus)
      .def_readonly("boundary", &CutComponent::boundary)
      .def_readonly("branch", &CutComponent::branch)
      .def_property_readonly(
          "action",
          [](const CutComponent& c) {
            return c.action == ComponentAction::Invariant
                       ? std::string("invariant")
                       : std::string("swapped");
          })
      .def_readonly("partner", &CutComponent::partner);

  py::class_<HypCutProfile>(m, "HypCutProfile")
      .def_readonly("classes", &HypCutProfile::classes)
      .def_readonly("components", &HypCutProfile::components)
      .def_readonly("upstairs_simplex_size", &HypCutProfile::upstairsSimplexSize)
      .def("to_json",
           [](const HypCutProfile& p) { return jsonStr(toJson(p)); });
  m.def("cut_profile", &cutProfile, py::arg("family"), py::arg("g"),
        py::arg("merge_annuli") = true);

  py::class_<TwistGenerator>(m, "TwistGenerator")
      .def_readonly("curve_class", &TwistGenerator::curveClass)
      .def_property_readonly("lattice", [](const TwistGenerator& t) {
        return t.lattice == TwistLattice::Z ? std::string("Z")
                                            : std::string("2Z");
      });
  py::class_<StabilizerProfile>(m, "StabilizerProfile")
      .def_readonly("twists", &StabilizerProfile::twists)
      .def_readonly("cut_factors", &StabilizerProfile::cutFactors)
      .def_readonly("symmetry_part", &StabilizerProfile::symmetryPart)
      .def("to_json",
           [](const StabilizerProfile& p) { return jsonStr(toJson(p)); });
  m.def(
      "stabilizer_profile",
      [](const LaminarFamily& f, int g, const std::string& flavor) {
        return stabilizerProfile(f, g, parseStabilizerFlavor(flavor));
      },
      py::arg("family"), py::arg("g"), py::arg("flavor") = "pure");
}
