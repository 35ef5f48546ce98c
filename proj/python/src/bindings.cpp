#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coh1/jsonio.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const coh1::json& j) {
  switch (j.type()) {
    case coh1::json::value_t::null:
      return py::none();
    case coh1::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case coh1::json::value_t::number_integer:
    case coh1::json::value_t::number_unsigned:
      return py::int_(j.get<long long>());
    case coh1::json::value_t::number_float:
      return py::float_(j.get<double>());
    case coh1::json::value_t::string:
      return py::str(j.get<std::string>());
    case coh1::json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(json_to_py(x));
      return out;
    }
    case coh1::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

coh1::SymmetricSpaceRecord get(const std::string& name,
                               std::optional<long long> param) {
  return coh1::builtin_database().lookup(name, param);
}

coh1::PhiSet phi_of(const std::vector<int>& phi, int rank) {
  coh1::PhiSet p = coh1::PhiSet::empty(rank);
  for (int i : phi) p.insert(i);
  return p;
}

}  // namespace

PYBIND11_MODULE(_coh1, m) {
  m.doc() = "exact parabolic and cohomogeneity-one computations for "
            "noncompact symmetric spaces";
  m.attr("__version__") = "0.1.0";

  m.def("list_spaces", [] {
    return coh1::builtin_database().list_names();
  });

  m.def(
      "space_info",
      [](const std::string& name, std::optional<long long> param) {
        return json_to_py(coh1::to_json(get(name, param)));
      },
      py::arg("name"), py::arg("param") = py::none());

  m.def(
      "dim_space",
      [](const std::string& name, std::optional<long long> param) {
        return coh1::dim_space(get(name, param));
      },
      py::arg("name"), py::arg("param") = py::none());

  m.def(
      "root_system",
      [](const std::string& family, int rank) {
        auto f = coh1::family_from_string(family);
        if (!f) throw coh1::DomainError("unknown family '" + family + "'");
        return json_to_py(coh1::to_json(coh1::build_root_system(*f, rank)));
      },
      py::arg("family"), py::arg("rank"));

  m.def(
      "parabolic",
      [](const std::string& name, const std::vector<int>& phi,
         std::optional<long long> param) {
        auto rec = get(name, param);
        return json_to_py(
            coh1::to_json(coh1::langlands(rec, phi_of(phi, rec.system.rank))));
      },
      py::arg("name"), py::arg("phi"), py::arg("param") = py::none());

  m.def(
      "gradation",
      [](const std::string& name, const std::vector<int>& phi,
         std::optional<long long> param) {
        auto rec = get(name, param);
        return json_to_py(
            coh1::to_json(coh1::gradation(rec, phi_of(phi, rec.system.rank))));
      },
      py::arg("name"), py::arg("phi"), py::arg("param") = py::none());

  m.def(
      "boundary",
      [](const std::string& name, const std::vector<int>& phi,
         std::optional<long long> param) {
        auto rec = get(name, param);
        return json_to_py(coh1::to_json(coh1::boundary_component(
            rec, phi_of(phi, rec.system.rank), coh1::builtin_database())));
      },
      py::arg("name"), py::arg("phi"), py::arg("param") = py::none());

  m.def(
      "enumerate_parabolics",
      [](const std::string& name, std::optional<long long> param) {
        auto rec = get(name, param);
        py::list out;
        for (const auto& e : coh1::enumerate_parabolics(rec)) {
          py::dict d;
          d["phi"] = e.phi.indices();
          d["class_rep"] = e.class_rep.indices();
          d["class_id"] = e.class_id;
          d["data"] = json_to_py(coh1::to_json(e.data));
          out.append(d);
        }
        return out;
      },
      py::arg("name"), py::arg("param") = py::none());

  m.def(
      "nilpotent_candidates",
      [](const std::string& name, const std::vector<int>& phi,
         std::optional<long long> param) {
        auto rec = get(name, param);
        py::list out;
        for (const auto& c :
             coh1::nilpotent_candidates(rec, phi_of(phi, rec.system.rank))) {
          py::dict d;
          d["v"] = json_to_py(coh1::to_json(c.v));
          d["check_i"] = coh1::to_string(c.check_i);
          d["check_ii"] = coh1::to_string(c.check_ii);
          d["verdict"] = c.verdict == coh1::NilpotentCandidate::Verdict::Pass
                             ? "pass"
                             : c.verdict == coh1::NilpotentCandidate::Verdict::Fail
                                   ? "fail"
                                   : "undetermined";
          d["orbit"] = json_to_py(coh1::to_json(c.orbit));
          d["duplicate_of"] = c.dup_of;
          out.append(d);
        }
        return out;
      },
      py::arg("name"), py::arg("phi"), py::arg("param") = py::none());

  m.def(
      "extend",
      [](const std::string& name, const std::vector<int>& phi,
         const std::string& inner_json, std::optional<long long> param) {
        auto rec = get(name, param);
        auto inner = coh1::descriptor_from_json(coh1::json::parse(inner_json),
                                                rec.system.rank);
        auto res =
            coh1::canonical_extend(rec, phi_of(phi, rec.system.rank), inner);
        py::dict d;
        d["action"] = json_to_py(coh1::to_json(res.action));
        d["support"] = json_to_py(coh1::to_json(res.support));
        d["orbit"] = json_to_py(coh1::to_json(res.orbit));
        return d;
      },
      py::arg("name"), py::arg("phi"), py::arg("inner_json"),
      py::arg("param") = py::none());

  m.def(
      "classify",
      [](const std::string& name, std::optional<long long> param) {
        auto rec = get(name, param);
        return json_to_py(
            coh1::to_json(coh1::classify(coh1::builtin_database(), rec)));
      },
      py::arg("name"), py::arg("param") = py::none());

  m.def(
      "diff_against_reference",
      [](const std::string& name, std::optional<long long> param) {
        auto rec = get(name, param);
        auto rep = coh1::classify(coh1::builtin_database(), rec);
        auto corpus = coh1::corpus_for(rep.space);
        if (!corpus)
          throw coh1::DomainError("no bundled reference corpus for '" +
                                  rep.space + "'");
        return json_to_py(
            coh1::to_json(coh1::diff_against_reference(rep, *corpus)));
      },
      py::arg("name"), py::arg("param") = py::none());

  m.def("database_text", [] { return coh1::builtin_database_text(); });

  m.def("database_roundtrip_ok", [] {
    const std::string& text = coh1::builtin_database_text();
    return coh1::Database::parse(text).serialize() == text;
  });

  py::register_exception<coh1::DomainError>(m, "DomainError");
  py::register_exception<coh1::UsageError>(m, "CohUsageError");
}
