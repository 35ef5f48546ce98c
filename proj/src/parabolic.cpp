#include "coh1/parabolic.hpp"

#include <algorithm>
#include <map>

namespace coh1 {

ParabolicData langlands(const SymmetricSpaceRecord& rec, const PhiSet& phi) {
  const RootSystem& sys = rec.system;
  if (phi.rank != sys.rank) throw DomainError("subset rank mismatch");
  ParabolicData pd;
  pd.phi = phi;
  long long inside = 0;  // sum of multiplicities over Sigma_Phi^+
  for (int k : sys.supported_on(phi)) inside += rec.mult[k];
  long long total = rec.sum_mult();
  int r = sys.rank;
  pd.dim_n_phi = total - inside;
  pd.dim_a_phi = r - phi.size();
  pd.dim_a_upper_phi = phi.size();
  pd.dim_k_phi = rec.dim_k0 + inside;
  pd.dim_b_phi = phi.size() + inside;
  pd.dim_m_phi = pd.dim_k_phi + pd.dim_b_phi;
  pd.dim_l_phi = pd.dim_m_phi + pd.dim_a_phi;
  pd.dim_q_phi = pd.dim_l_phi + pd.dim_n_phi;
  pd.is_minimal = phi.is_empty();
  pd.is_maximal = phi.size() == r - 1;

  // Center of the reductive factor: it sits inside the centralizer of the
  // flat, so it vanishes for split forms; for the full subset the factor is
  // the whole (semisimple) algebra. A few recorded cases are known exactly.
  if (rec.dim_k0 == 0 || phi.is_full()) {
    pd.dim_z_phi = 0;
  } else if (rec.template_name == "G2_C/G2") {
    pd.dim_z_phi = phi.is_empty() ? 2 : 1;
  }
  return pd;
}

Gradation gradation(const SymmetricSpaceRecord& rec, const PhiSet& phi) {
  const RootSystem& sys = rec.system;
  if (phi.rank != sys.rank) throw DomainError("subset rank mismatch");
  if (phi.is_full())
    throw DomainError("gradation undefined for the full simple-root set "
                      "(empty nilpotent radical)");
  Gradation g;
  g.depth = level(sys, sys.highest, phi);
  g.level_dims.assign(g.depth, 0);
  for (size_t k = 0; k < sys.positive.size(); ++k) {
    int lv = level(sys, sys.positive[k], phi);
    if (lv > 0) g.level_dims[lv - 1] += rec.mult[k];
  }
  // A zero interior level would mean the enumeration is broken.
  for (long long dim : g.level_dims)
    if (dim < 1)
      throw DomainError("empty gradation level in " + rec.name +
                        " for phi=" + phi.str());
  return g;
}

BoundaryDescriptor boundary_component(const SymmetricSpaceRecord& rec,
                                      const PhiSet& phi, const Database& db) {
  BoundaryDescriptor bd;
  bd.phi = phi;
  bd.rank = phi.size();
  ParabolicData pd = langlands(rec, phi);
  bd.dim = pd.dim_b_phi;
  bd.dim_f = pd.dim_b_phi + pd.dim_a_phi;
  bd.signature = sub_signature(rec, phi);
  if (!bd.signature.empty()) bd.name_candidates = db.match_signature(bd.signature);
  return bd;
}

std::vector<PhiSet> all_subsets(int rank) {
  std::vector<PhiSet> subsets;
  for (unsigned m = 0; m < (1u << rank); ++m)
    subsets.push_back(PhiSet{m, rank});
  std::sort(subsets.begin(), subsets.end(),
            [](const PhiSet& a, const PhiSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.indices() < b.indices();
            });
  return subsets;
}

PhiSet conjugacy_representative(const SymmetricSpaceRecord& rec,
                                const PhiSet& phi) {
  auto autos = diagram_automorphisms(rec.system, rec.mult);
  PhiSet best = phi;
  auto less = [](const PhiSet& a, const PhiSet& b) {
    return a.indices() < b.indices();
  };
  for (const auto& da : autos) {
    PhiSet image = da.apply(phi);
    if (less(image, best)) best = image;
  }
  return best;
}

std::vector<ParabolicEntry> enumerate_parabolics(const SymmetricSpaceRecord& rec) {
  auto autos = diagram_automorphisms(rec.system, rec.mult);
  std::vector<ParabolicEntry> out;
  std::map<unsigned, int> class_ids;
  for (const PhiSet& phi : all_subsets(rec.system.rank)) {
    ParabolicEntry e;
    e.phi = phi;
    e.data = langlands(rec, phi);
    e.class_rep = phi;
    auto less = [](const PhiSet& a, const PhiSet& b) {
      return a.indices() < b.indices();
    };
    for (const auto& da : autos) {
      PhiSet image = da.apply(phi);
      if (less(image, e.class_rep)) e.class_rep = image;
    }
    auto it = class_ids.find(e.class_rep.mask);
    if (it == class_ids.end())
      it = class_ids.emplace(e.class_rep.mask, (int)class_ids.size()).first;
    e.class_id = it->second;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace coh1
