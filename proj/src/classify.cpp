#include "coh1/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coh1 {

int ClassificationReport::group_count() const {
  std::set<std::string> groups;
  for (const auto& it : items) groups.insert(it.group_label);
  return (int)groups.size();
}

namespace {

struct ClassifyContext {
  const Database* db = nullptr;
  ClassifyOptions opts;
  std::map<std::string, ClassificationReport> memo;
};

ClassificationReport classify_impl(ClassifyContext& ctx,
                                   const SymmetricSpaceRecord& rec);

void add_foliation_items(const SymmetricSpaceRecord& rec,
                         const ClassifyOptions& opts,
                         const std::string& group_a,
                         const std::string& group_n,
                         ClassificationReport& rep) {
  FoliationModuli fm = foliation_moduli(rec);
  int r = rec.system.rank;
  bool rank_one = r == 1;

  ReportItem fol_a;
  std::vector<long long> line(r, 0);
  line[0] = 1;
  fol_a.descriptor = ActionDescriptor::foliation_a(line);
  fol_a.item_key = "fol-a";
  fol_a.group_label = group_a;
  fol_a.provenance = "foliation";
  fol_a.moduli_note = rank_one ? "" : fm.moduli_note;
  fol_a.note = rank_one
                   ? "horosphere foliation"
                   : "one family of foliations, all orbits congruent; lines in "
                     "the flat up to the diagram symmetries";
  rep.items.push_back(std::move(fol_a));

  if (opts.dedup) {
    for (const auto& cls : fm.index_classes()) {
      ReportItem it;
      it.descriptor = ActionDescriptor::foliation_n(cls.front());
      it.item_key = it.descriptor.key();
      it.group_label = group_n;
      it.provenance = "foliation";
      it.orbit.minimal = TriState::Yes;
      it.note = "foliation with exactly one minimal orbit";
      rep.items.push_back(std::move(it));
      for (size_t j = 1; j < cls.size(); ++j)
        rep.dedup_log.push_back(
            {"fol-n:i=" + std::to_string(cls[j]),
             "fol-n:i=" + std::to_string(cls.front()),
             "diagram automorphism identifies the simple roots"});
    }
  } else {
    for (int i = 1; i <= r; ++i) {
      ReportItem it;
      it.descriptor = ActionDescriptor::foliation_n(i);
      it.item_key = it.descriptor.key();
      it.group_label = group_n;
      it.provenance = "foliation";
      it.orbit.minimal = TriState::Yes;
      rep.items.push_back(std::move(it));
    }
  }
}

bool item_key_present(const ClassificationReport& rep, const std::string& key) {
  for (const auto& it : rep.items)
    if (it.item_key == key) return true;
  return false;
}

void add_nilpotent_items(ClassifyContext& ctx, const SymmetricSpaceRecord& rec,
                         const PhiSet& phi, ClassificationReport& rep) {
  Gradation g = gradation(rec, phi);
  if (g.level_dims[0] < 2) return;
  if (!has_module_catalog(rec, phi)) {
    rep.warnings.push_back("no module decomposition recorded for phi=" +
                           phi.str() + "; candidates not enumerated");
    rep.complete = false;
    return;
  }
  for (const NilpotentCandidate& c : nilpotent_candidates(rec, phi)) {
    ActionDescriptor desc = ActionDescriptor::nilpotent(phi, c.v);
    std::string key = desc.key();
    switch (c.verdict) {
      case NilpotentCandidate::Verdict::Pass: {
        if (!c.dup_of.empty() && ctx.opts.dedup) {
          if (item_key_present(rep, c.dup_of)) {
            rep.dedup_log.push_back({key, c.dup_of, c.note});
            continue;
          }
        }
        ReportItem it;
        it.descriptor = std::move(desc);
        it.item_key = key;
        it.group_label = key;
        it.provenance = "nilpotent";
        it.orbit = c.orbit;
        it.note = c.note;
        if (!c.dup_of.empty())
          it.note += (it.note.empty() ? "" : "; ") + ("coincides with " + c.dup_of);
        if (c.v.parametric_dim())
          it.moduli_note = "family over subspace dimensions / angles";
        rep.items.push_back(std::move(it));
        break;
      }
      case NilpotentCandidate::Verdict::Undetermined:
        rep.advisory.push_back({key, c.check_i, c.check_ii, c.note});
        break;
      case NilpotentCandidate::Verdict::Fail:
        break;
    }
  }
}

ClassificationReport classify_rank_one_impl(ClassifyContext& ctx,
                                            const SymmetricSpaceRecord& rec) {
  ClassificationReport rep;
  rep.space = rec.name;
  rep.dim = dim_space(rec);

  bool kind_is_real = rec.system.family == Family::A;
  add_foliation_items(rec, ctx.opts, "horospheres",
                      kind_is_real ? "hyperbolic-family" : "foliation-n", rep);

  if (kind_is_real) {
    long long n = rec.mult[0] + 1;
    for (long long k = n - 2; k >= 0; --k) {
      ReportItem it;
      it.descriptor = ActionDescriptor::reductive("RH:k=" + std::to_string(k));
      it.item_key = it.descriptor.key();
      it.group_label = "hyperbolic-family";
      it.provenance = "reductive";
      it.orbit.singular_codim = n - k;
      it.orbit.totally_geodesic = TriState::Yes;
      it.orbit.orbit_name = k == 0 ? "point" : "RH" + std::to_string(k);
      it.note = "singular orbit is a totally geodesic hyperbolic subspace";
      rep.items.push_back(std::move(it));
    }
    rep.warnings.push_back(
        "orbit equivalence for this family is realized inside the identity "
        "component of the isometry group (recorded as a note, not checked)");
  }

  // Nilpotent construction at the (empty) maximal parabolic subset.
  PhiSet phi = PhiSet::empty(1);
  if (rec.mult[0] >= 2) {
    if (has_module_catalog(rec, phi)) {
      add_nilpotent_items(ctx, rec, phi, rep);
    } else {
      rep.warnings.push_back("rank-one record without a recorded module table");
      rep.complete = false;
    }
  }
  if (rec.system.family == Family::BC && rec.mult[1] == 3)
    rep.warnings.push_back(
        "quaternionic constant-angle subspaces are unresolved; see advisory");
  return rep;
}

void add_extension_items(ClassifyContext& ctx, const SymmetricSpaceRecord& rec,
                         const PhiSet& phi, ClassificationReport& rep) {
  BoundaryDescriptor bd = boundary_component(rec, phi, *ctx.db);
  SymmetricSpaceRecord boundary;
  bool resolved = false;
  for (const std::string& cand : bd.name_candidates) {
    try {
      boundary = ctx.db->lookup(cand);
      resolved = true;
      break;
    } catch (const DomainError&) {
    }
  }
  if (!resolved) {
    rep.warnings.push_back("no database match for the boundary component of phi=" +
                           phi.str() + " (signature " + bd.signature.str() + ")");
    rep.complete = false;
    return;
  }

  auto memo_it = ctx.memo.find(boundary.name);
  if (memo_it == ctx.memo.end())
    memo_it = ctx.memo.emplace(boundary.name, classify_impl(ctx, boundary)).first;
  const ClassificationReport& inner_rep = memo_it->second;
  if (!inner_rep.complete) {
    rep.warnings.push_back("boundary classification for phi=" + phi.str() +
                           " (" + boundary.name + ") is incomplete");
    rep.complete = false;
  }

  for (const ReportItem& inner : inner_rep.items) {
    if (inner.orbit.singular_codim < 1) continue;  // foliations extend to foliations
    // Index-bearing inner descriptors (from rank >= 2 boundaries) are kept in
    // the boundary's own labels; the canonical class representatives of the
    // bundled spaces embed with matching indices.
    ReportItem it;
    it.descriptor = ActionDescriptor::extension(phi, inner.descriptor);
    it.item_key = it.descriptor.key();
    it.group_label = it.item_key;
    it.provenance = "canonical-extension";
    it.orbit.singular_codim = inner.orbit.singular_codim;
    it.note = "canonical extension from the boundary component " + boundary.name;
    rep.items.push_back(std::move(it));
  }
}

ClassificationReport classify_impl(ClassifyContext& ctx,
                                   const SymmetricSpaceRecord& rec) {
  if (rec.system.rank == 1) return classify_rank_one_impl(ctx, rec);

  ClassificationReport rep;
  rep.space = rec.name;
  rep.dim = dim_space(rec);

  add_foliation_items(rec, ctx.opts, "foliation-a", "foliation-n", rep);

  if (has_reductive_catalog(rec)) {
    for (const ReductiveTGEntry& e : reductive_tg_catalog(rec)) {
      ReportItem it;
      it.descriptor = ActionDescriptor::reductive(e.key);
      it.item_key = it.descriptor.key();
      it.group_label = it.item_key;
      it.provenance = "reductive";
      it.orbit.singular_codim = e.codim;
      it.orbit.totally_geodesic = TriState::Yes;
      it.orbit.minimal = e.minimal;
      it.orbit.orbit_name = e.orbit_name;
      it.note = e.note;
      rep.items.push_back(std::move(it));
    }
  } else {
    rep.warnings.push_back(
        "no reductive totally-geodesic catalog bundled for this space");
    rep.complete = false;
  }

  // Maximal parabolic classes.
  std::vector<PhiSet> maximal;
  {
    std::set<unsigned> seen;
    for (const PhiSet& phi : all_subsets(rec.system.rank)) {
      if (phi.size() != rec.system.rank - 1) continue;
      PhiSet rep_phi = ctx.opts.dedup ? conjugacy_representative(rec, phi) : phi;
      if (seen.insert(rep_phi.mask).second) maximal.push_back(rep_phi);
      else if (ctx.opts.dedup)
        rep.dedup_log.push_back({"phi=" + phi.str(), "phi=" + rep_phi.str(),
                                 "diagram automorphism identifies the subsets"});
    }
  }
  for (const PhiSet& phi : maximal) add_extension_items(ctx, rec, phi, rep);
  for (const PhiSet& phi : maximal) add_nilpotent_items(ctx, rec, phi, rep);

  return rep;
}

}  // namespace

ClassificationReport classify(const Database& db, const SymmetricSpaceRecord& rec,
                              const ClassifyOptions& opts) {
  ClassifyContext ctx;
  ctx.db = &db;
  ctx.opts = opts;
  return classify_impl(ctx, rec);
}

ClassificationReport classify_rank_one(const Database& db,
                                       const SymmetricSpaceRecord& rec) {
  if (rec.system.rank != 1)
    throw DomainError("classify_rank_one needs a rank-one space, got rank " +
                      std::to_string(rec.system.rank));
  ClassifyContext ctx;
  ctx.db = &db;
  return classify_rank_one_impl(ctx, rec);
}

// ----------------------------------------------------------------- corpora

ReferenceCorpus ReferenceCorpus::parse(const std::string& text) {
  ReferenceCorpus corpus;
  std::vector<std::map<std::string, std::string>> stanzas;
  std::map<std::string, std::string> cur;
  size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    size_t next = text.find('\n', pos);
    std::string line = text.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    ++lineno;
    if (line.empty()) {
      if (!cur.empty()) stanzas.push_back(std::move(cur));
      cur.clear();
    } else if (line[0] != '#') {
      auto eq = line.find('=');
      if (eq == std::string::npos)
        throw DomainError("corpus line " + std::to_string(lineno) +
                          ": expected key=value");
      cur[line.substr(0, eq)] = line.substr(eq + 1);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (!cur.empty()) stanzas.push_back(std::move(cur));
  if (stanzas.empty()) throw DomainError("empty corpus");

  const auto& head = stanzas.front();
  if (!head.count("space") || !head.count("theorem") || !head.count("groups"))
    throw DomainError("corpus header needs space=, theorem=, groups=");
  corpus.space = head.at("space");
  corpus.theorem = head.at("theorem");
  corpus.groups = std::stoi(head.at("groups"));
  for (size_t i = 1; i < stanzas.size(); ++i) {
    const auto& st = stanzas[i];
    CorpusItem item;
    if (!st.count("item") || !st.count("group"))
      throw DomainError("corpus item stanza needs item= and group=");
    item.item_key = st.at("item");
    item.group = std::stoi(st.at("group"));
    if (st.count("codim")) item.codim = std::stoll(st.at("codim"));
    if (st.count("orbit")) item.orbit_name = st.at("orbit");
    if (st.count("cite")) item.cite = st.at("cite");
    corpus.items.push_back(std::move(item));
  }
  return corpus;
}

namespace embedded {
extern const char* corpora;  // concatenated corpus files, '\f' separated
}

namespace {

const std::vector<ReferenceCorpus>& bundled_corpora() {
  static const std::vector<ReferenceCorpus> all = [] {
    std::vector<ReferenceCorpus> out;
    std::string text = embedded::corpora;
    size_t pos = 0;
    while (pos < text.size()) {
      size_t next = text.find('\f', pos);
      std::string one =
          text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (!one.empty()) out.push_back(ReferenceCorpus::parse(one));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return out;
  }();
  return all;
}

}  // namespace

std::optional<ReferenceCorpus> corpus_for(const std::string& space_name) {
  for (const auto& c : bundled_corpora())
    if (c.space == space_name) return c;
  return std::nullopt;
}

std::vector<std::string> corpus_spaces() {
  std::vector<std::string> out;
  for (const auto& c : bundled_corpora()) out.push_back(c.space);
  return out;
}

ClassificationDiff diff_against_reference(const ClassificationReport& report,
                                          const ReferenceCorpus& corpus) {
  if (report.space != corpus.space)
    throw DomainError("report is for '" + report.space + "', corpus for '" +
                      corpus.space + "'");
  ClassificationDiff diff;
  std::multiset<std::string> want, have;
  for (const auto& it : corpus.items) want.insert(it.item_key);
  for (const auto& it : report.items) have.insert(it.item_key);
  for (const auto& k : want)
    if (!have.count(k)) diff.missing.push_back(k);
  for (const auto& k : have)
    if (!want.count(k)) diff.extra.push_back(k);
  // Keys are unique within either side in practice; compare counts anyway.
  for (const auto& k : want)
    if (have.count(k) && have.count(k) != want.count(k))
      diff.mismatched.push_back(k + " (multiplicity)");
  for (const auto& ci : corpus.items) {
    if (ci.codim < 0) continue;
    for (const auto& ri : report.items)
      if (ri.item_key == ci.item_key && ri.orbit.singular_codim != ci.codim)
        diff.mismatched.push_back(ci.item_key + " (codim " +
                                  std::to_string(ri.orbit.singular_codim) +
                                  " vs " + std::to_string(ci.codim) + ")");
  }
  auto dedup = [](std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(diff.missing);
  dedup(diff.extra);
  dedup(diff.mismatched);
  return diff;
}

}  // namespace coh1
