// coh1 — exact computations for parabolic subalgebras of noncompact
// symmetric spaces and cohomogeneity one action candidates.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "coh1/jsonio.hpp"

namespace {

using coh1::json;

constexpr const char* kVersion = "0.1.0";

struct GlobalOpts {
  std::string format = "text";
  std::vector<std::string> warnings;
};

std::string quote_command(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

void emit(const GlobalOpts& g, const std::string& command, const json& payload,
          const std::string& text_form) {
  if (g.format == "json") {
    json env;
    env["version"] = kVersion;
    env["command"] = command;
    env["payload"] = payload;
    env["warnings"] = g.warnings;
    std::cout << env.dump(2) << "\n";
  } else {
    std::cout << text_form;
    for (const auto& w : g.warnings) std::cerr << "warning: " << w << "\n";
  }
}

coh1::Database load_db() {
  if (const char* path = std::getenv("COHOMO_DB")) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw coh1::DomainError(std::string("cannot open COHOMO_DB file ") + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return coh1::Database::parse(text);
  }
  return coh1::builtin_database();
}

coh1::SymmetricSpaceRecord resolve(const coh1::Database& db, const std::string& name,
                                   std::optional<long long> param) {
  return db.lookup(name, param);
}

coh1::PhiSet parse_phi(const std::string& text, const coh1::SymmetricSpaceRecord& rec) {
  return coh1::PhiSet::parse(text, rec.system.rank);
}

std::string table_line(const std::string& key, const std::string& value) {
  std::string s = "  " + key;
  if (s.size() < 22) s.resize(22, ' ');
  return s + value + "\n";
}

std::string space_conventions(const coh1::SymmetricSpaceRecord& rec) {
  switch (rec.system.family) {
    case coh1::Family::G2:
      return "labeling: alpha_1 is short; the highest root is 3a1+2a2\n";
    case coh1::Family::B:
      return "labeling: alpha_1 is long; positive roots a1, a2, a1+a2, a1+2a2 "
             "in rank 2\n";
    case coh1::Family::BC:
      return "labeling: non-reduced system; a and 2a are both roots\n";
    default:
      return "";
  }
}

std::string describe_items(const coh1::ClassificationReport& rep) {
  std::string out;
  out += "space " + rep.space + "  (dim " + std::to_string(rep.dim) + ", " +
         std::to_string(rep.items.size()) + " items in " +
         std::to_string(rep.group_count()) + " groups" +
         (rep.complete ? "" : ", INCOMPLETE") + ")\n";
  std::string last_group;
  for (const auto& it : rep.items) {
    if (it.group_label != last_group) {
      out += "group: " + it.group_label + "\n";
      last_group = it.group_label;
    }
    out += "  " + it.item_key;
    if (it.orbit.singular_codim > 0)
      out += "  [singular codim " + std::to_string(it.orbit.singular_codim) +
             (it.orbit.orbit_name.empty() ? "" : ", orbit " + it.orbit.orbit_name) +
             "]";
    else
      out += "  [foliation]";
    out += "\n";
    if (!it.note.empty()) out += "      " + it.note + "\n";
  }
  if (!rep.dedup_log.empty()) {
    out += "merged:\n";
    for (const auto& d : rep.dedup_log)
      out += "  " + d.merged_key + " -> " + d.kept_key + " (" + d.reason + ")\n";
  }
  if (!rep.advisory.empty()) {
    out += "advisory (undetermined candidates, not items):\n";
    for (const auto& a : rep.advisory)
      out += "  " + a.key + "  [i: " + coh1::to_string(a.check_i) +
             ", ii: " + coh1::to_string(a.check_ii) + "] " + a.note + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact parabolic and cohomogeneity-one computations for "
               "noncompact symmetric spaces"};
  app.set_version_flag("--version", kVersion);
  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  std::string name, phi_text, inner_text, db_path;
  long long param = -1;
  bool diff_paper = false;
  auto add_space_opts = [&](CLI::App* cmd, bool with_phi) {
    cmd->add_option("name", name, "space name")->required();
    cmd->add_option("--param", param, "parameter for parametric spaces");
    if (with_phi)
      cmd->add_option("--phi", phi_text,
                      "comma list of 1-based simple root indices ('' or 'none' "
                      "for the empty set)");
  };

  CLI::App* space = app.add_subcommand("space", "database queries");
  CLI::App* space_list = space->add_subcommand("list", "list bundled spaces");
  CLI::App* space_info = space->add_subcommand("info", "show one space");
  add_space_opts(space_info, false);

  CLI::App* parab = app.add_subcommand("parabolic", "decomposition dimensions");
  add_space_opts(parab, true);
  CLI::App* grad = app.add_subcommand("gradation", "graded nilpotent radical");
  add_space_opts(grad, true);
  CLI::App* bound = app.add_subcommand("boundary", "boundary component data");
  add_space_opts(bound, true);
  CLI::App* ext = app.add_subcommand("extend", "canonical extension of an inner action");
  add_space_opts(ext, true);
  ext->add_option("--inner", inner_text, "inner action descriptor (JSON or @file)")
      ->required();
  CLI::App* nilp = app.add_subcommand("nilpotent", "nilpotent construction candidates");
  add_space_opts(nilp, true);
  CLI::App* cls = app.add_subcommand("classify", "assemble the classification");
  add_space_opts(cls, false);
  cls->add_flag("--diff-paper", diff_paper,
                "diff against the bundled reference corpus");
  CLI::App* dbv = app.add_subcommand("db", "database utilities");
  CLI::App* dbval = dbv->add_subcommand("validate", "validate a database file");
  dbval->add_option("path", db_path, "database file path")->required();

  app.require_subcommand(1);
  // Let global flags such as --format appear after the subcommand.
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    app.exit(e);
    return 2;
  }

  std::string command = quote_command(argc, argv);
  std::optional<long long> param_opt =
      param >= 0 ? std::optional<long long>(param) : std::nullopt;

  try {
    coh1::Database db = load_db();

    if (space_list->parsed()) {
      json payload;
      payload["spaces"] = json::array();
      std::string text;
      for (const auto& t : db.templates()) {
        json e;
        e["name"] = t.name;
        e["family"] = coh1::to_string(t.family);
        e["rank"] = t.rank;
        if (t.param)
          e["param"] = t.param->var + ":" + std::to_string(t.param->lo) + ".." +
                       std::to_string(t.param->hi);
        payload["spaces"].push_back(e);
        text += t.name;
        if (t.param)
          text += "  (" + t.param->var + "=" + std::to_string(t.param->lo) +
                  ".." + std::to_string(t.param->hi) + ")";
        text += "\n";
      }
      emit(g, command, payload, text);
      return 0;
    }

    if (space_info->parsed()) {
      auto rec = resolve(db, name, param_opt);
      json payload = coh1::to_json(rec);
      std::string text = rec.name + "\n";
      std::string fam = coh1::to_string(rec.system.family);
      if (fam.find_first_of("0123456789") == std::string::npos)
        fam += std::to_string(rec.system.rank);
      text += table_line("family", fam);
      text += table_line("dim", std::to_string(coh1::dim_space(rec)));
      text += table_line("dim_k0", std::to_string(rec.dim_k0));
      text += table_line("split", rec.split_real_form() ? "yes" : "no");
      text += table_line("positive roots", std::to_string(rec.system.positive.size()));
      for (size_t k = 0; k < rec.system.positive.size(); ++k)
        text += table_line("m" + rec.system.positive[k].str(),
                           std::to_string(rec.mult[k]));
      text += space_conventions(rec);
      if (!rec.notes.empty()) text += "notes: " + rec.notes + "\n";
      emit(g, command, payload, text);
      return 0;
    }

    if (parab->parsed()) {
      auto rec = resolve(db, name, param_opt);
      auto pd = coh1::langlands(rec, parse_phi(phi_text, rec));
      json payload = coh1::to_json(pd);
      std::string text = rec.name + ", phi=" + pd.phi.str() + "\n";
      for (auto& [k, v] : payload.items())
        if (v.is_number())
          text += table_line(k, std::to_string(v.get<long long>()));
      text += table_line("minimal", pd.is_minimal ? "yes" : "no");
      text += table_line("maximal", pd.is_maximal ? "yes" : "no");
      emit(g, command, payload, text);
      return 0;
    }

    if (grad->parsed()) {
      auto rec = resolve(db, name, param_opt);
      auto gr = coh1::gradation(rec, parse_phi(phi_text, rec));
      json payload = coh1::to_json(gr);
      std::string dims;
      for (size_t i = 0; i < gr.level_dims.size(); ++i)
        dims += (i ? "," : "") + std::to_string(gr.level_dims[i]);
      std::string text = rec.name + ", phi=" + phi_text + "\n";
      text += table_line("level_dims", "(" + dims + ")");
      text += table_line("depth", std::to_string(gr.depth));
      emit(g, command, payload, text);
      return 0;
    }

    if (bound->parsed()) {
      auto rec = resolve(db, name, param_opt);
      auto bd = coh1::boundary_component(rec, parse_phi(phi_text, rec), db);
      json payload = coh1::to_json(bd);
      std::string text = rec.name + ", phi=" + bd.phi.str() + "\n";
      text += table_line("rank", std::to_string(bd.rank));
      text += table_line("dim", std::to_string(bd.dim));
      text += table_line("dim_f", std::to_string(bd.dim_f));
      text += table_line("signature", bd.signature.str());
      std::string cands;
      for (const auto& c : bd.name_candidates) cands += (cands.empty() ? "" : ", ") + c;
      text += table_line("candidates", cands.empty() ? "(none)" : cands);
      emit(g, command, payload, text);
      return 0;
    }

    if (ext->parsed()) {
      auto rec = resolve(db, name, param_opt);
      auto phi = parse_phi(phi_text, rec);
      std::string inner_json = inner_text;
      if (!inner_text.empty() && inner_text[0] == '@') {
        std::ifstream in(inner_text.substr(1));
        if (!in) throw coh1::UsageError("cannot open " + inner_text.substr(1));
        inner_json.assign((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
      }
      json parsed;
      try {
        parsed = json::parse(inner_json);
      } catch (const std::exception& e) {
        throw coh1::UsageError(std::string("bad --inner JSON: ") + e.what());
      }
      auto inner = coh1::descriptor_from_json(parsed, rec.system.rank);
      auto res = coh1::canonical_extend(rec, phi, inner);
      json payload;
      payload["action"] = coh1::to_json(res.action);
      payload["support"] = coh1::to_json(res.support);
      payload["orbit"] = coh1::to_json(res.orbit);
      std::string text = res.action.key() + "\n";
      text += table_line("singular codim", std::to_string(res.orbit.singular_codim));
      std::string tags;
      for (const auto& t : res.support.tags()) tags += (tags.empty() ? "" : " ") + t;
      text += table_line("support", tags);
      emit(g, command, payload, text);
      return 0;
    }

    if (nilp->parsed()) {
      auto rec = resolve(db, name, param_opt);
      auto phi = parse_phi(phi_text, rec);
      auto cands = coh1::nilpotent_candidates(rec, phi);
      if (cands.empty() && !coh1::has_module_catalog(rec, phi))
        g.warnings.push_back("no module decomposition recorded for this space");
      json payload;
      payload["phi"] = phi.indices();
      payload["candidates"] = json::array();
      std::string text = rec.name + ", phi=" + phi.str() + ", " +
                         std::to_string(cands.size()) + " candidates\n";
      for (const auto& c : cands) {
        json e;
        e["v"] = coh1::to_json(c.v);
        e["check_i"] = coh1::to_string(c.check_i);
        e["check_ii"] = coh1::to_string(c.check_ii);
        e["verdict"] = c.verdict == coh1::NilpotentCandidate::Verdict::Pass ? "pass"
                       : c.verdict == coh1::NilpotentCandidate::Verdict::Fail
                           ? "fail"
                           : "undetermined";
        e["orbit"] = coh1::to_json(c.orbit);
        if (!c.dup_of.empty()) e["duplicate_of"] = c.dup_of;
        if (!c.note.empty()) e["note"] = c.note;
        payload["candidates"].push_back(e);
        text += "  " + c.v.family + " dim " + std::to_string(c.v.dim_v) + " in " +
                c.v.host + ": i=" + coh1::to_string(c.check_i) +
                ", ii=" + coh1::to_string(c.check_ii) + " -> " +
                e["verdict"].get<std::string>();
        if (!c.dup_of.empty()) text += " (duplicate of " + c.dup_of + ")";
        text += "\n";
      }
      emit(g, command, payload, text);
      return 0;
    }

    if (cls->parsed()) {
      auto rec = resolve(db, name, param_opt);
      auto rep = coh1::classify(db, rec);
      g.warnings = rep.warnings;
      json payload = coh1::to_json(rep);
      std::string text = describe_items(rep);
      if (diff_paper) {
        auto corpus = coh1::corpus_for(rep.space);
        if (!corpus)
          throw coh1::DomainError("no bundled reference corpus for '" +
                                  rep.space + "'");
        auto diff = coh1::diff_against_reference(rep, *corpus);
        payload["diff"] = coh1::to_json(diff);
        payload["corpus_groups"] = corpus->groups;
        text += diff.empty() ? "diff against the bundled corpus: empty\n"
                             : "diff against the bundled corpus: NOT empty\n";
        for (const auto& m : diff.missing) text += "  missing: " + m + "\n";
        for (const auto& m : diff.extra) text += "  extra: " + m + "\n";
        for (const auto& m : diff.mismatched) text += "  mismatch: " + m + "\n";
        emit(g, command, payload, text);
        return diff.empty() ? 0 : 1;
      }
      emit(g, command, payload, text);
      return 0;
    }

    if (dbval->parsed()) {
      std::ifstream in(db_path, std::ios::binary);
      if (!in) throw coh1::DomainError("cannot open " + db_path);
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      auto parsed = coh1::Database::parse(text);
      auto problems = parsed.validate();
      bool canonical = parsed.serialize() == text;
      json payload;
      payload["records"] = parsed.templates().size();
      payload["problems"] = problems;
      payload["canonical"] = canonical;
      std::string out = std::to_string(parsed.templates().size()) + " records, " +
                        std::to_string(problems.size()) + " problems, " +
                        (canonical ? "canonical" : "not canonical (re-serialization differs)") +
                        "\n";
      for (const auto& p : problems) out += "  " + p + "\n";
      emit(g, command, payload, out);
      return problems.empty() ? 0 : 1;
    }
  } catch (const coh1::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const coh1::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
