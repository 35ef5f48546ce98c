#include <doctest.h>

#include <set>

#include "coh1/parabolic.hpp"

using namespace coh1;

namespace {

const Database& db() { return builtin_database(); }

std::vector<SymmetricSpaceRecord> sample_spaces() {
  std::vector<SymmetricSpaceRecord> out;
  for (const SpaceTemplate& t : db().templates()) {
    if (!t.parametric()) {
      out.push_back(db().lookup(t.name));
      continue;
    }
    for (long long n = t.param->lo; n <= std::min(t.param->hi, t.param->lo + 2); ++n) {
      try {
        out.push_back(db().lookup(t.name, n));
      } catch (const DomainError&) {
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("decomposition dimensions for the worked rank-2 cases") {
  auto sl3 = db().lookup("SL3(R)/SO3");
  ParabolicData pd = langlands(sl3, PhiSet::of({1}, 2));
  CHECK(pd.dim_l_phi == 4);
  CHECK(pd.dim_m_phi == 3);
  CHECK(pd.dim_k_phi == 1);
  CHECK(pd.dim_n_phi == 2);
  CHECK(pd.dim_a_phi == 1);
  CHECK(pd.is_maximal);
  CHECK(!pd.is_minimal);

  auto g2c = db().lookup("G2_C/G2");
  ParabolicData qc = langlands(g2c, PhiSet::of({2}, 2));
  CHECK(qc.dim_k_phi == 4);
  CHECK(qc.dim_m_phi == 7);
  CHECK(qc.dim_l_phi == 8);
  CHECK(qc.dim_z_phi == 1);  // the reductive factor splits off a u1 center

  CHECK(pd.dim_z_phi == 0);  // split form: the center sits in a trivial k0
  auto ch3 = db().lookup("CH3");
  CHECK(!langlands(ch3, PhiSet::empty(1)).dim_z_phi.has_value());
  CHECK(langlands(ch3, PhiSet::full(1)).dim_z_phi == 0);
}

TEST_CASE("the full subset gives the whole algebra and no radical") {
  for (const auto& rec : sample_spaces()) {
    PhiSet full = PhiSet::full(rec.system.rank);
    ParabolicData pd = langlands(rec, full);
    CHECK(pd.dim_n_phi == 0);
    CHECK(pd.dim_a_phi == 0);
    long long dim_g = rec.dim_k0 + 2 * rec.sum_mult() + rec.system.rank;
    CHECK(pd.dim_q_phi == dim_g);
  }
}

TEST_CASE("the empty subset gives the minimal parabolic") {
  for (const auto& rec : sample_spaces()) {
    ParabolicData pd = langlands(rec, PhiSet::empty(rec.system.rank));
    CHECK(pd.dim_n_phi == rec.sum_mult());
    CHECK(pd.dim_b_phi == 0);
    CHECK(pd.dim_m_phi == rec.dim_k0);
    CHECK(pd.is_minimal);
  }
}

TEST_CASE("all four dimension identities, exhaustively") {
  for (const auto& rec : sample_spaces()) {
    for (const PhiSet& phi : all_subsets(rec.system.rank)) {
      ParabolicData pd = langlands(rec, phi);
      CHECK(pd.dim_q_phi == pd.dim_l_phi + pd.dim_n_phi);
      CHECK(pd.dim_l_phi == pd.dim_m_phi + pd.dim_a_phi);
      CHECK(pd.dim_m_phi == pd.dim_k_phi + pd.dim_b_phi);
      CHECK(dim_space(rec) == pd.dim_b_phi + pd.dim_a_phi + pd.dim_n_phi);
    }
  }
}

TEST_CASE("monotonicity in the subset") {
  for (const auto& rec : sample_spaces()) {
    int r = rec.system.rank;
    for (const PhiSet& phi : all_subsets(r))
      for (const PhiSet& psi : all_subsets(r)) {
        if (!phi.subset_of(psi)) continue;
        CHECK(langlands(rec, psi).dim_n_phi <= langlands(rec, phi).dim_n_phi);
        auto inside_phi = rec.system.supported_on(phi);
        auto inside_psi = rec.system.supported_on(psi);
        std::set<int> psi_set(inside_psi.begin(), inside_psi.end());
        for (int k : inside_phi) CHECK(psi_set.count(k) == 1);
      }
  }
}

TEST_CASE("gradations of the worked examples") {
  auto g2 = db().lookup("G2_2/SO4");
  Gradation g = gradation(g2, PhiSet::of({2}, 2));
  CHECK(g.level_dims == std::vector<long long>{2, 1, 2});
  CHECK(g.depth == 3);

  auto g2c = db().lookup("G2_C/G2");
  Gradation gc = gradation(g2c, PhiSet::of({2}, 2));
  CHECK(gc.level_dims == std::vector<long long>{4, 2, 4});
  CHECK(gc.depth == 3);

  for (long long n = 1; n <= 4; ++n) {
    auto rec = db().lookup("SO(2,{n+2})/SO2SO{n+2}", n);
    Gradation g1 = gradation(rec, PhiSet::of({2}, 2));
    CHECK(g1.level_dims == std::vector<long long>{n + 2});
    CHECK(g1.depth == 1);
    Gradation g2n = gradation(rec, PhiSet::of({1}, 2));
    CHECK(g2n.level_dims == std::vector<long long>{2 * n, 1});
    CHECK(g2n.depth == 2);
  }

  auto so23 = db().lookup("SO(2,3)/SO2SO3");
  CHECK(gradation(so23, PhiSet::of({2}, 2)).level_dims ==
        std::vector<long long>{3});
  CHECK(gradation(so23, PhiSet::of({1}, 2)).level_dims ==
        std::vector<long long>{2, 1});

  CHECK_THROWS_AS(gradation(g2, PhiSet::full(2)), DomainError);
}

TEST_CASE("gradation structure: depth, no empty levels, generation") {
  for (const auto& rec : sample_spaces()) {
    const RootSystem& sys = rec.system;
    for (const PhiSet& phi : all_subsets(sys.rank)) {
      if (phi.is_full()) continue;
      Gradation g = gradation(rec, phi);
      CHECK(g.depth == level(sys, sys.highest, phi));
      CHECK((long long)g.level_dims.size() == g.depth);
      long long total = 0;
      for (long long d : g.level_dims) {
        CHECK(d >= 1);
        total += d;
      }
      CHECK(total == langlands(rec, phi).dim_n_phi);
      CHECK((g.depth == 1) == (g.level_dims.size() == 1));

      // Every root of level nu+1 splits as level-1 + level-nu.
      for (const RootVector& target : sys.positive) {
        int lv = level(sys, target, phi);
        if (lv < 2) continue;
        bool found = false;
        for (const RootVector& a : sys.positive) {
          if (level(sys, a, phi) != 1) continue;
          for (const RootVector& b : sys.positive) {
            if (level(sys, b, phi) != lv - 1) continue;
            if (a + b == target) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        CHECK_MESSAGE(found, rec.name, " phi=", phi.str(), " root ",
                      target.str());
      }
    }
  }
}

TEST_CASE("boundary components") {
  auto sl4 = db().lookup("SL4(R)/SO4");
  BoundaryDescriptor bd = boundary_component(sl4, PhiSet::of({1, 2}, 3), db());
  CHECK(bd.rank == 2);
  CHECK(bd.dim == 5);
  REQUIRE(!bd.name_candidates.empty());
  CHECK(std::find(bd.name_candidates.begin(), bd.name_candidates.end(),
                  "SL3(R)/SO3") != bd.name_candidates.end());

  BoundaryDescriptor empty_bd = boundary_component(sl4, PhiSet::empty(3), db());
  CHECK(empty_bd.dim == 0);
  CHECK(empty_bd.name_candidates.empty());

  auto g2c = db().lookup("G2_C/G2");
  BoundaryDescriptor bd1 = boundary_component(g2c, PhiSet::of({2}, 2), db());
  CHECK(bd1.rank == 1);
  CHECK(bd1.dim == 3);
  CHECK(std::find(bd1.name_candidates.begin(), bd1.name_candidates.end(),
                  "RH3") != bd1.name_candidates.end());
  CHECK(std::find(bd1.name_candidates.begin(), bd1.name_candidates.end(),
                  "SL2(C)/SU2") != bd1.name_candidates.end());

  // Reducible boundary: no irreducible database record can match.
  BoundaryDescriptor red = boundary_component(sl4, PhiSet::of({1, 3}, 3), db());
  CHECK(red.signature.components.size() == 2);
  CHECK(red.name_candidates.empty());
}

TEST_CASE("parabolic enumeration and conjugacy classes") {
  auto sl3 = db().lookup("SL3(R)/SO3");
  auto entries = enumerate_parabolics(sl3);
  CHECK(entries.size() == 4);
  std::set<int> classes;
  for (const auto& e : entries) classes.insert(e.class_id);
  CHECK(classes.size() == 3);  // {}, {1}~{2}, {1,2}
  CHECK(conjugacy_representative(sl3, PhiSet::of({2}, 2)) == PhiSet::of({1}, 2));

  for (const char* name : {"SO(2,3)/SO2SO3", "G2_2/SO4", "G2_C/G2"}) {
    auto rec = db().lookup(name);
    auto es = enumerate_parabolics(rec);
    CHECK(es.size() == 4);
    std::set<int> cs;
    for (const auto& e : es) cs.insert(e.class_id);
    CHECK_MESSAGE(cs.size() == 4, name);  // no identifications
  }

  auto sl4 = db().lookup("SL4(R)/SO4");
  auto e4 = enumerate_parabolics(sl4);
  CHECK(e4.size() == 8);
  CHECK(conjugacy_representative(sl4, PhiSet::of({3}, 3)) == PhiSet::of({1}, 3));
  CHECK(conjugacy_representative(sl4, PhiSet::of({2}, 3)) == PhiSet::of({2}, 3));
}
