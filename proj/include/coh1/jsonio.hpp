#pragma once

#include <json.hpp>

#include "coh1/classify.hpp"

namespace coh1 {

// Stable output: insertion-ordered keys, no timestamps.
using json = nlohmann::ordered_json;

inline json to_json(const RootVector& r) {
  json a = json::array();
  for (int x : r.c) a.push_back(x);
  return a;
}

inline json to_json(const RootSystem& sys) {
  json j;
  j["family"] = to_string(sys.family);
  j["rank"] = sys.rank;
  json roots = json::array();
  for (const auto& r : sys.positive) roots.push_back(to_json(r));
  j["positive_roots"] = roots;
  j["highest"] = to_json(sys.highest);
  return j;
}

inline json to_json(const SymmetricSpaceRecord& rec) {
  json j;
  j["name"] = rec.name;
  j["template"] = rec.template_name;
  if (rec.param_value) j["param"] = *rec.param_value;
  if (!rec.group_name.empty()) {
    j["group"] = rec.group_name;
    j["isotropy"] = rec.isotropy_name;
  }
  j["family"] = to_string(rec.system.family);
  j["rank"] = rec.system.rank;
  j["dim"] = dim_space(rec);
  j["dim_k0"] = rec.dim_k0;
  j["split_real_form"] = rec.split_real_form();
  json mult = json::array();
  for (size_t k = 0; k < rec.system.positive.size(); ++k) {
    json entry;
    entry["root"] = to_json(rec.system.positive[k]);
    entry["mult"] = rec.mult[k];
    mult.push_back(entry);
  }
  j["multiplicities"] = mult;
  if (!rec.notes.empty()) j["notes"] = rec.notes;
  return j;
}

inline json to_json(const ParabolicData& pd) {
  json j;
  j["phi"] = pd.phi.indices();
  j["dim_n_phi"] = pd.dim_n_phi;
  j["dim_a_phi"] = pd.dim_a_phi;
  j["dim_a_upper_phi"] = pd.dim_a_upper_phi;
  j["dim_l_phi"] = pd.dim_l_phi;
  j["dim_m_phi"] = pd.dim_m_phi;
  j["dim_k_phi"] = pd.dim_k_phi;
  j["dim_b_phi"] = pd.dim_b_phi;
  j["dim_q_phi"] = pd.dim_q_phi;
  if (pd.dim_z_phi)
    j["dim_z_phi"] = *pd.dim_z_phi;
  else
    j["dim_z_phi"] = "unknown";
  j["is_minimal"] = pd.is_minimal;
  j["is_maximal"] = pd.is_maximal;
  return j;
}

inline json to_json(const Gradation& g) {
  json j;
  j["level_dims"] = g.level_dims;
  j["depth"] = g.depth;
  return j;
}

inline json to_json(const StructuralSignature& sig) {
  json comps = json::array();
  for (const auto& c : sig.components) {
    json jc;
    jc["family"] = to_string(c.family);
    jc["rank"] = c.rank;
    json lm = json::array();
    for (const auto& [len, m] : c.len_mult) {
      json e;
      e["len_num"] = len.first;
      e["len_den"] = len.second;
      e["mult"] = m;
      lm.push_back(e);
    }
    jc["length_mult"] = lm;
    comps.push_back(jc);
  }
  json j;
  j["components"] = comps;
  j["display"] = sig.str();
  return j;
}

inline json to_json(const BoundaryDescriptor& bd) {
  json j;
  j["phi"] = bd.phi.indices();
  j["rank"] = bd.rank;
  j["dim"] = bd.dim;
  j["dim_f"] = bd.dim_f;
  j["signature"] = to_json(bd.signature);
  j["name_candidates"] = bd.name_candidates;
  return j;
}

inline json to_json(const OrbitData& o) {
  json j;
  j["singular_codim"] = o.singular_codim;
  j["totally_geodesic"] = to_string(o.totally_geodesic);
  j["minimal"] = to_string(o.minimal);
  j["contains_f_phi"] = o.contains_f_phi;
  if (!o.orbit_name.empty()) j["orbit_name"] = o.orbit_name;
  return j;
}

json to_json(const ActionDescriptor& d);

inline json to_json(const SubspaceDescriptor& v) {
  json j;
  j["phi"] = v.phi.indices();
  j["family"] = v.family;
  j["host"] = v.host;
  j["dim"] = v.dim_v;
  return j;
}

inline json to_json(const ActionDescriptor& d) {
  json j;
  if (const auto* fa = std::get_if<FoliationA>(&d.node)) {
    j["kind"] = "foliation-a";
    j["line"] = fa->line;
  } else if (const auto* fn = std::get_if<FoliationN>(&d.node)) {
    j["kind"] = "foliation-n";
    j["i"] = fn->i;
  } else if (const auto* tg = std::get_if<ReductiveTG>(&d.node)) {
    j["kind"] = "reductive-tg";
    j["key"] = tg->key;
  } else if (const auto* ce = std::get_if<CanonicalExtension>(&d.node)) {
    j["kind"] = "canonical-extension";
    j["phi"] = ce->phi.indices();
    j["inner"] = to_json(*ce->inner);
  } else {
    const auto& nc = std::get<NilpotentConstruction>(d.node);
    j["kind"] = "nilpotent";
    j["phi"] = nc.phi.indices();
    j["v"] = to_json(nc.v);
  }
  j["key"] = d.key();
  return j;
}

/// Parses the descriptor JSON accepted by the CLI (`--inner`).
inline ActionDescriptor descriptor_from_json(const json& j, int rank) {
  if (!j.is_object() || !j.contains("kind"))
    throw UsageError("descriptor JSON needs a \"kind\" field");
  std::string kind = j.at("kind").get<std::string>();
  auto parse_phi = [&](const json& v) {
    PhiSet phi = PhiSet::empty(rank);
    for (const auto& x : v) phi.insert(x.get<int>());
    return phi;
  };
  if (kind == "foliation-a") {
    std::vector<long long> line;
    for (const auto& x : j.at("line")) line.push_back(x.get<long long>());
    return ActionDescriptor::foliation_a(std::move(line));
  }
  if (kind == "foliation-n")
    return ActionDescriptor::foliation_n(j.at("i").get<int>());
  if (kind == "reductive-tg")
    return ActionDescriptor::reductive(j.at("key").get<std::string>());
  if (kind == "canonical-extension")
    return ActionDescriptor::extension(parse_phi(j.at("phi")),
                                       descriptor_from_json(j.at("inner"), rank));
  if (kind == "nilpotent") {
    const json& v = j.at("v");
    SubspaceDescriptor sd;
    sd.phi = parse_phi(j.at("phi"));
    sd.family = v.at("family").get<std::string>();
    sd.host = v.value("host", std::string("n1"));
    sd.dim_v = v.at("dim").get<long long>();
    return ActionDescriptor::nilpotent(sd.phi, sd);
  }
  throw UsageError("unknown descriptor kind '" + kind + "'");
}

inline json to_json(const SubalgebraSupport& s) {
  json j;
  j["tags"] = s.tags();
  j["exact"] = s.exact;
  return j;
}

inline json to_json(const ReportItem& it) {
  json j;
  j["item"] = it.item_key;
  j["group"] = it.group_label;
  j["provenance"] = it.provenance;
  j["descriptor"] = to_json(it.descriptor);
  j["orbit"] = to_json(it.orbit);
  if (!it.moduli_note.empty()) j["moduli"] = it.moduli_note;
  if (!it.note.empty()) j["note"] = it.note;
  return j;
}

inline json to_json(const ClassificationReport& rep) {
  json j;
  j["space"] = rep.space;
  j["dim"] = rep.dim;
  j["complete"] = rep.complete;
  j["group_count"] = rep.group_count();
  json items = json::array();
  for (const auto& it : rep.items) items.push_back(to_json(it));
  j["items"] = items;
  json log = json::array();
  for (const auto& d : rep.dedup_log) {
    json e;
    e["merged"] = d.merged_key;
    e["into"] = d.kept_key;
    e["reason"] = d.reason;
    log.push_back(e);
  }
  j["dedup_log"] = log;
  json adv = json::array();
  for (const auto& a : rep.advisory) {
    json e;
    e["candidate"] = a.key;
    e["check_i"] = to_string(a.check_i);
    e["check_ii"] = to_string(a.check_ii);
    e["note"] = a.note;
    adv.push_back(e);
  }
  j["advisory"] = adv;
  j["warnings"] = rep.warnings;
  return j;
}

inline json to_json(const ClassificationDiff& d) {
  json j;
  j["missing"] = d.missing;
  j["extra"] = d.extra;
  j["mismatched"] = d.mismatched;
  j["empty"] = d.empty();
  return j;
}

}  // namespace coh1
