#include <doctest.h>

#include <algorithm>
#include <set>

#include "coh1/rootsys.hpp"

using namespace coh1;

namespace {

RootVector rv(std::initializer_list<int> c) { return RootVector{std::vector<int>(c)}; }

long long expected_count(Family f, int r) {
  switch (f) {
    case Family::A: return (long long)r * (r + 1) / 2;
    case Family::B:
    case Family::C: return (long long)r * r;
    case Family::D: return (long long)r * (r - 1);
    case Family::G2: return 6;
    case Family::F4: return 24;
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    case Family::BC: return (long long)r * r + r;
  }
  return -1;
}

std::vector<std::pair<Family, int>> supported_pairs(int max_rank) {
  std::vector<std::pair<Family, int>> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::BC, r});
  out.push_back({Family::G2, 2});
  out.push_back({Family::F4, 4});
  if (max_rank >= 6) out.push_back({Family::E6, 6});
  return out;
}

}  // namespace

TEST_CASE("A2 positive roots") {
  RootSystem sys = build_root_system(Family::A, 2);
  std::vector<RootVector> want = {rv({0, 1}), rv({1, 0}), rv({1, 1})};
  CHECK(sys.positive == want);
  CHECK(sys.highest == rv({1, 1}));
}

TEST_CASE("B2 positive roots with the long first simple root") {
  RootSystem sys = build_root_system(Family::B, 2);
  std::vector<RootVector> want = {rv({0, 1}), rv({1, 0}), rv({1, 1}), rv({1, 2})};
  CHECK(sys.positive == want);
  CHECK(sys.highest == rv({1, 2}));
  // alpha_1 is the long root in this labeling.
  CHECK(sys.sq_length(sys.simple(1)) == 4);
  CHECK(sys.sq_length(sys.simple(2)) == 2);
}

TEST_CASE("G2 positive roots and highest root") {
  RootSystem sys = build_root_system(Family::G2, 2);
  CHECK(sys.positive.size() == 6);
  CHECK(sys.highest == rv({3, 2}));
  CHECK(sys.sq_length(sys.simple(1)) == 2);  // alpha_1 short
  CHECK(sys.is_positive_root(rv({2, 1})));
  CHECK(sys.is_positive_root(rv({3, 1})));
}

TEST_CASE("F4 enumeration against the frozen count and highest root") {
  RootSystem sys = build_root_system(Family::F4, 4);
  CHECK(sys.positive.size() == 24);
  CHECK(sys.highest == rv({2, 3, 4, 2}));
}

TEST_CASE("count law for every supported pair up to rank 6") {
  for (auto [f, r] : supported_pairs(6)) {
    RootSystem sys = build_root_system(f, r);
    CHECK_MESSAGE((long long)sys.positive.size() == expected_count(f, r),
                  to_string(f), r);
  }
}

TEST_CASE("positivity and one-sign invariants") {
  for (auto [f, r] : supported_pairs(5)) {
    RootSystem sys = build_root_system(f, r);
    for (const auto& root : sys.positive) {
      CHECK(!root.is_zero());
      CHECK(root.one_signed());
      CHECK(root.height() > 0);
      CHECK(sys.highest.dominates(root));
    }
    // Deterministic and strictly sorted.
    RootSystem again = build_root_system(f, r);
    CHECK(again.positive == sys.positive);
    CHECK(std::is_sorted(sys.positive.begin(), sys.positive.end()));
  }
}

TEST_CASE("unsupported pairs are rejected") {
  CHECK_THROWS_AS(build_root_system(Family::B, 1), DomainError);
  CHECK_THROWS_AS(build_root_system(Family::C, 2), DomainError);
  CHECK_THROWS_AS(build_root_system(Family::D, 3), DomainError);
  CHECK_THROWS_AS(build_root_system(Family::E6, 7), DomainError);
  CHECK_THROWS_AS(build_root_system(Family::G2, 3), DomainError);
  CHECK_THROWS_AS(build_root_system(Family::A, 9), DomainError);
  CHECK_THROWS_AS(build_root_system(Family::A, 0), DomainError);
}

TEST_CASE("levels") {
  RootSystem g2 = build_root_system(Family::G2, 2);
  PhiSet phi2 = PhiSet::of({2}, 2);
  CHECK(level(g2, rv({2, 1}), phi2) == 2);
  CHECK(level(g2, rv({0, 1}), phi2) == 0);  // inside the subsystem
  CHECK(level(g2, g2.highest, phi2) == 3);

  RootSystem f4 = build_root_system(Family::F4, 4);
  PhiSet phi = PhiSet::of({2, 3, 4}, 4);
  CHECK(level(f4, f4.highest, phi) == 2);

  CHECK_THROWS_AS(level(g2, rv({1, 1, 1}), phi2), DomainError);
  CHECK_THROWS_AS(level(g2, rv({5, 5}), phi2), DomainError);
  CHECK_THROWS_AS(PhiSet::parse("3", 2), DomainError);
}

TEST_CASE("level additivity for every proper subset, rank <= 4") {
  for (auto [f, r] : supported_pairs(4)) {
    RootSystem sys = build_root_system(f, r);
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      PhiSet phi{mask, r};
      for (const auto& a : sys.positive)
        for (const auto& b : sys.positive) {
          RootVector sum = a + b;
          if (!sys.is_positive_root(sum)) continue;
          CHECK(level(sys, sum, phi) ==
                level(sys, a, phi) + level(sys, b, phi));
        }
    }
  }
}

TEST_CASE("diagram automorphisms") {
  RootSystem a2 = build_root_system(Family::A, 2);
  std::vector<long long> ones(a2.positive.size(), 1);
  auto autos = diagram_automorphisms(a2, ones);
  CHECK(autos.size() == 2);
  CHECK(autos.front().is_identity());

  RootSystem b2 = build_root_system(Family::B, 2);
  CHECK(diagram_automorphisms(b2, std::vector<long long>(4, 1)).size() == 1);

  // Independent oracle for D4: filter all 24 node permutations directly.
  RootSystem d4 = build_root_system(Family::D, 4);
  std::vector<int> perm = {0, 1, 2, 3};
  int count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = 0; j < 4 && ok; ++j)
        if (d4.cartan[perm[i]][perm[j]] != d4.cartan[i][j]) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(count == 6);
  CHECK(diagram_automorphisms(d4, std::vector<long long>(12, 1)).size() == 6);
}

TEST_CASE("automorphism soundness: permuted roots stay roots with equal data") {
  for (auto [f, r] : supported_pairs(4)) {
    RootSystem sys = build_root_system(f, r);
    std::vector<long long> mult(sys.positive.size());
    for (size_t k = 0; k < mult.size(); ++k)
      mult[k] = sys.sq_length(sys.positive[k]);  // any class function works
    for (const auto& da : diagram_automorphisms(sys, mult))
      for (size_t k = 0; k < sys.positive.size(); ++k) {
        int idx = sys.index_of(da.apply(sys.positive[k]));
        REQUIRE(idx >= 0);
        CHECK(mult[idx] == mult[k]);
      }
  }
}

TEST_CASE("Coxeter-number identities across all supported reduced systems") {
  // Independent oracle: for a reduced irreducible system with Coxeter
  // number h, the positive roots number r*h/2 and the highest root has
  // height h-1.
  auto coxeter = [](Family f, int r) -> int {
    switch (f) {
      case Family::A: return r + 1;
      case Family::B:
      case Family::C: return 2 * r;
      case Family::D: return 2 * r - 2;
      case Family::G2: return 6;
      case Family::F4: return 12;
      case Family::E6: return 12;
      case Family::E7: return 18;
      case Family::E8: return 30;
      case Family::BC: return 0;  // non-reduced, not covered
    }
    return 0;
  };
  std::vector<std::pair<Family, int>> pairs;
  for (int r = 1; r <= 8; ++r) pairs.push_back({Family::A, r});
  for (int r = 2; r <= 8; ++r) pairs.push_back({Family::B, r});
  for (int r = 3; r <= 8; ++r) pairs.push_back({Family::C, r});
  for (int r = 4; r <= 8; ++r) pairs.push_back({Family::D, r});
  pairs.push_back({Family::G2, 2});
  pairs.push_back({Family::F4, 4});
  pairs.push_back({Family::E6, 6});
  pairs.push_back({Family::E7, 7});
  pairs.push_back({Family::E8, 8});
  for (auto [f, r] : pairs) {
    RootSystem sys = build_root_system(f, r);
    int h = coxeter(f, r);
    CHECK_MESSAGE(2 * (long long)sys.positive.size() == (long long)r * h,
                  to_string(f), r);
    CHECK_MESSAGE(sys.highest.height() == h - 1, to_string(f), r);
  }
}

TEST_CASE("frozen highest roots of the exceptional systems") {
  CHECK(build_root_system(Family::E6, 6).highest ==
        rv({1, 2, 2, 3, 2, 1}));
  CHECK(build_root_system(Family::E7, 7).highest ==
        rv({2, 2, 3, 4, 3, 2, 1}));
  CHECK(build_root_system(Family::E8, 8).highest ==
        rv({2, 3, 4, 6, 5, 4, 3, 2}));
  CHECK(build_root_system(Family::D, 4).highest == rv({1, 2, 1, 1}));
  CHECK(build_root_system(Family::C, 3).highest == rv({2, 2, 1}));
  CHECK(build_root_system(Family::B, 3).highest == rv({1, 2, 2}));
}

TEST_CASE("non-reduced systems carry the doubled short roots") {
  RootSystem bc1 = build_root_system(Family::BC, 1);
  CHECK(bc1.positive == std::vector<RootVector>{rv({1}), rv({2})});
  CHECK(bc1.highest == rv({2}));

  RootSystem bc2 = build_root_system(Family::BC, 2);
  CHECK(bc2.positive.size() == 6);
  CHECK(bc2.is_positive_root(rv({0, 2})));
  CHECK(bc2.is_positive_root(rv({2, 2})));
  CHECK(bc2.highest == rv({2, 2}));
}
