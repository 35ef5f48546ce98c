// Acceptance suite: one line per criterion, exact integer checks only.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "coh1/classify.hpp"

using namespace coh1;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title,
               const std::function<void(std::ostringstream&)>& body) {
  std::ostringstream problems;
  try {
    body(problems);
  } catch (const std::exception& e) {
    problems << " exception: " << e.what();
  }
  std::string p = problems.str();
  if (p.empty()) {
    std::cout << "PASS criterion " << number << ": " << title << "\n";
  } else {
    ++g_failures;
    std::cout << "FAIL criterion " << number << ": " << title << " --" << p
              << "\n";
  }
}

#define EXPECT(cond, what)                 \
  do {                                     \
    if (!(cond)) out << " [" << what << "]"; \
  } while (0)

const Database& db() { return builtin_database(); }

std::vector<SymmetricSpaceRecord> all_db_instances() {
  std::vector<SymmetricSpaceRecord> out;
  for (const SpaceTemplate& t : db().templates()) {
    if (!t.parametric()) {
      out.push_back(db().lookup(t.name));
      continue;
    }
    for (long long n = t.param->lo; n <= std::min(t.param->hi, t.param->lo + 2);
         ++n) {
      try {
        out.push_back(db().lookup(t.name, n));
      } catch (const DomainError&) {
      }
    }
  }
  return out;
}

std::vector<std::pair<Family, int>> systems_up_to(int max_rank) {
  std::vector<std::pair<Family, int>> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::BC, r});
  out.push_back({Family::G2, 2});
  if (max_rank >= 4) out.push_back({Family::F4, 4});
  return out;
}

}  // namespace

int main() {
  criterion(1, "dimension corpus", [](std::ostringstream& out) {
    EXPECT(dim_space(db().lookup("SL3(R)/SO3")) == 5, "SL3(R)/SO3");
    EXPECT(dim_space(db().lookup("SL4(R)/SO4")) == 9, "SL4(R)/SO4");
    EXPECT(dim_space(db().lookup("SO(2,3)/SO2SO3")) == 6, "SO(2,3)");
    EXPECT(dim_space(db().lookup("G2_2/SO4")) == 8, "G2_2/SO4");
    EXPECT(dim_space(db().lookup("G2_C/G2")) == 14, "G2_C/G2");
    for (long long n = 1; n <= 8; ++n)
      EXPECT(dim_space(db().lookup("SO(2,{n+2})/SO2SO{n+2}", n)) == 2 * n + 4,
             "SO(2," << n + 2 << ")");
    for (long long n = 2; n <= 8; ++n) {
      auto rh = db().lookup("RH{n}", n);
      EXPECT(rh.sum_mult() == n - 1 && dim_space(rh) == n, "RH" << n);
      auto ch = db().lookup("CH{n}", n);
      EXPECT(ch.sum_mult() == 2 * n - 1 && dim_space(ch) == 2 * n, "CH" << n);
      auto hh = db().lookup("HH{n}", n);
      EXPECT(hh.sum_mult() == 4 * n - 1 && dim_space(hh) == 4 * n, "HH" << n);
    }
    auto oh = db().lookup("OH2");
    EXPECT(oh.sum_mult() == 15 && dim_space(oh) == 16, "OH2");
  });

  criterion(2, "gradation corpus", [](std::ostringstream& out) {
    auto check = [&](const SymmetricSpaceRecord& rec, PhiSet phi,
                     std::vector<long long> dims, const char* what) {
      Gradation g = gradation(rec, phi);
      EXPECT(g.level_dims == dims && g.depth == (long long)dims.size(), what);
    };
    check(db().lookup("G2_2/SO4"), PhiSet::of({2}, 2), {2, 1, 2}, "G2_2 phi={2}");
    check(db().lookup("G2_C/G2"), PhiSet::of({2}, 2), {4, 2, 4}, "G2_C phi={2}");
    for (long long n = 1; n <= 8; ++n) {
      auto rec = db().lookup("SO(2,{n+2})/SO2SO{n+2}", n);
      check(rec, PhiSet::of({2}, 2), {n + 2}, "SO(2,m) phi={2}");
      check(rec, PhiSet::of({1}, 2), {2 * n, 1}, "SO(2,m) phi={1}");
    }
    auto so23 = db().lookup("SO(2,3)/SO2SO3");
    check(so23, PhiSet::of({2}, 2), {3}, "SO(2,3) phi={2}");
    check(so23, PhiSet::of({1}, 2), {2, 1}, "SO(2,3) phi={1}");
  });

  criterion(3, "Langlands corpus", [](std::ostringstream& out) {
    auto g2c = langlands(db().lookup("G2_C/G2"), PhiSet::of({2}, 2));
    EXPECT(g2c.dim_k_phi == 4, "G2_C dim_k_phi");
    EXPECT(g2c.dim_m_phi == 7, "G2_C dim_m_phi");
    auto sl3 = langlands(db().lookup("SL3(R)/SO3"), PhiSet::of({1}, 2));
    EXPECT(sl3.dim_l_phi == 4, "SL3 dim_l_phi");
    EXPECT(sl3.dim_n_phi == 2, "SL3 dim_n_phi");
  });

  criterion(4, "parabolic count and conjugacy", [](std::ostringstream& out) {
    for (const auto& rec : all_db_instances()) {
      auto entries = enumerate_parabolics(rec);
      EXPECT((long long)entries.size() == (1LL << rec.system.rank),
             rec.name << " count");
    }
    auto classes_of = [&](const std::string& name) {
      auto rec = db().lookup(name);
      std::set<int> cs;
      for (const auto& e : enumerate_parabolics(rec)) cs.insert(e.class_id);
      return cs.size();
    };
    EXPECT(classes_of("SL3(R)/SO3") == 3, "SL3 has {a1} ~ {a2}");
    EXPECT(classes_of("SO(2,3)/SO2SO3") == 4, "SO(2,3) separates {a1},{a2}");
    EXPECT(classes_of("G2_2/SO4") == 4, "G2_2 separates {a1},{a2}");
    EXPECT(classes_of("G2_C/G2") == 4, "G2_C separates {a1},{a2}");
  });

  criterion(5, "classification reproduction", [](std::ostringstream& out) {
    struct Case {
      std::string name;
      std::optional<long long> param;
      int groups;
    };
    std::vector<Case> cases = {{"SL3(R)/SO3", std::nullopt, 4},
                               {"SO(2,3)/SO2SO3", std::nullopt, 6},
                               {"G2_2/SO4", std::nullopt, 7}};
    for (long long n = 2; n <= 6; ++n) cases.push_back({"RH{n}", n, 2});
    for (const auto& c : cases) {
      auto rec = db().lookup(c.name, c.param);
      auto rep = classify(db(), rec);
      auto corpus = corpus_for(rep.space);
      if (!corpus) {
        out << " [no corpus for " << rep.space << "]";
        continue;
      }
      auto diff = diff_against_reference(rep, *corpus);
      EXPECT(diff.empty(), rep.space << " diff nonempty (missing "
                                     << diff.missing.size() << ", extra "
                                     << diff.extra.size() << ", mismatched "
                                     << diff.mismatched.size() << ")");
      EXPECT(rep.group_count() == c.groups && corpus->groups == c.groups,
             rep.space << " item groups");
      EXPECT(rep.complete, rep.space << " flagged incomplete");
    }
  });

  criterion(6, "property suites", [](std::ostringstream& out) {
    // (a) level additivity and the generation property, rank <= 4.
    for (auto [f, r] : systems_up_to(4)) {
      RootSystem sys = build_root_system(f, r);
      for (unsigned mask = 0; mask + 1 < (1u << r); ++mask) {
        PhiSet phi{mask, r};
        for (const auto& a : sys.positive)
          for (const auto& b : sys.positive) {
            RootVector sum = a + b;
            if (!sys.is_positive_root(sum)) continue;
            EXPECT(level(sys, sum, phi) ==
                       level(sys, a, phi) + level(sys, b, phi),
                   "additivity " << to_string(f) << r);
          }
        for (const auto& target : sys.positive) {
          int lv = level(sys, target, phi);
          if (lv < 2) continue;
          bool found = false;
          for (const auto& a : sys.positive) {
            if (level(sys, a, phi) != 1) continue;
            for (const auto& b : sys.positive)
              if (level(sys, b, phi) == lv - 1 && a + b == target) {
                found = true;
                break;
              }
            if (found) break;
          }
          EXPECT(found, "generation " << to_string(f) << r << " phi="
                                      << phi.str() << " " << target.str());
        }
      }
    }
    // (b) the four dimension identities over every database space.
    for (const auto& rec : all_db_instances())
      for (const PhiSet& phi : all_subsets(rec.system.rank)) {
        ParabolicData pd = langlands(rec, phi);
        bool ok = pd.dim_q_phi == pd.dim_l_phi + pd.dim_n_phi &&
                  pd.dim_l_phi == pd.dim_m_phi + pd.dim_a_phi &&
                  pd.dim_m_phi == pd.dim_k_phi + pd.dim_b_phi &&
                  dim_space(rec) == pd.dim_b_phi + pd.dim_a_phi + pd.dim_n_phi;
        EXPECT(ok, "identities " << rec.name << " phi=" << phi.str());
      }
    // (c) composition identity over all chains of SL4(R)/SO4.
    {
      auto sl4 = db().lookup("SL4(R)/SO4");
      auto chains = extension_chains(sl4);
      EXPECT(!chains.empty(), "SL4 chains exist");
      for (const auto& [phi, psi] : chains) {
        EXPECT(extension_composition_check(
                   sl4, phi, psi, ActionDescriptor::reductive("RH:k=0")),
               "composition point inner " << phi.str() << "<" << psi.str());
        EXPECT(extension_composition_check(
                   sl4, phi, psi,
                   ActionDescriptor::foliation_n(phi.indices().front())),
               "composition foliation inner " << phi.str() << "<" << psi.str());
      }
    }
    // (d) foliation congruence is an equivalence relation, 200 random pairs.
    {
      std::mt19937 rng(987654321);
      std::uniform_int_distribution<int> coeff(-4, 4);
      auto sl4 = db().lookup("SL4(R)/SO4");
      FoliationModuli fm = foliation_moduli(sl4);
      int r = 3;
      auto random_line = [&] {
        std::vector<long long> v(r);
        do {
          for (auto& x : v) x = coeff(rng);
        } while (std::all_of(v.begin(), v.end(),
                             [](long long x) { return x == 0; }));
        return v;
      };
      std::uniform_int_distribution<size_t> pick(0, fm.autos.size() - 1);
      for (int trial = 0; trial < 200; ++trial) {
        auto a = random_line();
        auto b = random_line();
        EXPECT(fm.lines_congruent(a, a), "reflexivity");
        EXPECT(fm.lines_congruent(a, b) == fm.lines_congruent(b, a),
               "symmetry");
        std::vector<long long> mid(r), far(r);
        const auto& s1 = fm.autos[pick(rng)];
        const auto& s2 = fm.autos[pick(rng)];
        for (int i = 0; i < r; ++i) mid[s1.perm[i]] = 3 * a[i];
        for (int i = 0; i < r; ++i) far[s2.perm[i]] = -2 * mid[i];
        EXPECT(fm.lines_congruent(a, mid) && fm.lines_congruent(mid, far) &&
                   fm.lines_congruent(a, far),
               "transitivity");
      }
    }
    // (e) the rank-3 counterexample to extending subsystem symmetries.
    {
      auto sl4 = db().lookup("SL4(R)/SO4");
      auto verdict = extension_orbit_equivalence(
          sl4, PhiSet::of({1, 2}, 3), ActionDescriptor::foliation_n(1),
          ActionDescriptor::foliation_n(2), false);
      EXPECT(verdict == Equivalence::NotEquivalent, "non-extension example");
    }
  });

  criterion(7, "database round-trip", [](std::ostringstream& out) {
    const std::string& text = builtin_database_text();
    Database parsed = Database::parse(text);
    EXPECT(parsed.serialize() == text, "serialize(parse(file)) == file");
    Database reparsed = Database::parse(parsed.serialize());
    EXPECT(reparsed.serialize() == parsed.serialize(),
           "parse(serialize(db)) == db");
  });

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria failed\n";
  return 1;
}
