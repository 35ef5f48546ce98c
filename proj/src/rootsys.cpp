#include "coh1/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coh1 {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::BC: return "BC";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "E6") return Family::E6;
  if (s == "E7") return Family::E7;
  if (s == "E8") return Family::E8;
  if (s == "F4") return Family::F4;
  if (s == "G2") return Family::G2;
  if (s == "BC") return Family::BC;
  return std::nullopt;
}

std::string RootVector::str() const {
  std::string s = "[";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + "]";
}

RootVector operator+(const RootVector& a, const RootVector& b) {
  RootVector r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

std::string DiagramAutomorphism::str() const {
  std::string s;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(i + 1) + "->" + std::to_string(perm[i] + 1);
  }
  return s;
}

int RootSystem::sq_length(const RootVector& r) const {
  // (alpha,alpha) = sum_j c_j d_j <alpha, alpha_j^vee>, exact integers.
  int total = 0;
  for (int j = 0; j < rank; ++j) {
    if (r.c[j] == 0) continue;
    int pairing = 0;
    for (int i = 0; i < rank; ++i) pairing += r.c[i] * cartan[i][j];
    total += r.c[j] * d[j] * pairing;
  }
  return total;
}

bool RootSystem::is_positive_root(const RootVector& r) const {
  return std::binary_search(positive.begin(), positive.end(), r);
}

int RootSystem::index_of(const RootVector& r) const {
  auto it = std::lower_bound(positive.begin(), positive.end(), r);
  if (it == positive.end() || !(*it == r)) return -1;
  return (int)(it - positive.begin());
}

RootVector RootSystem::simple(int i_1based) const {
  RootVector r;
  r.c.assign(rank, 0);
  r.c[i_1based - 1] = 1;
  return r;
}

std::vector<int> RootSystem::supported_on(const PhiSet& phi) const {
  std::vector<int> out;
  for (size_t k = 0; k < positive.size(); ++k) {
    bool inside = true;
    for (int i = 1; i <= rank; ++i)
      if (!phi.contains(i) && positive[k].c[i - 1] != 0) {
        inside = false;
        break;
      }
    if (inside) out.push_back((int)k);
  }
  return out;
}

namespace {

struct CartanData {
  std::vector<std::vector<int>> cart;
  std::vector<int> d;
};

void bond(CartanData& cd, int i, int j, int cij, int cji) {
  cd.cart[i][j] = cij;
  cd.cart[j][i] = cji;
}

CartanData cartan_matrix(Family f, int r) {
  CartanData cd;
  cd.cart.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) cd.cart[i][i] = 2;
  cd.d.assign(r, 1);
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) bond(cd, i, i + 1, -1, -1);
  };
  switch (f) {
    case Family::A:
      chain(0, r - 1);
      break;
    case Family::B:
    case Family::BC:
      // alpha_r short, the rest long.
      chain(0, r - 2);
      if (r >= 2) bond(cd, r - 2, r - 1, -2, -1);
      for (int i = 0; i < r - 1; ++i) cd.d[i] = 2;
      break;
    case Family::C:
      // alpha_r long, the rest short.
      chain(0, r - 2);
      if (r >= 2) bond(cd, r - 2, r - 1, -1, -2);
      cd.d[r - 1] = 2;
      break;
    case Family::D:
      chain(0, r - 3);
      bond(cd, r - 3, r - 2, -1, -1);
      bond(cd, r - 3, r - 1, -1, -1);
      break;
    case Family::G2:
      // alpha_1 short, alpha_2 long; highest root 3a1+2a2.
      bond(cd, 0, 1, -1, -3);
      cd.d[1] = 3;
      break;
    case Family::F4:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
      bond(cd, 0, 1, -1, -1);
      bond(cd, 1, 2, -2, -1);
      bond(cd, 2, 3, -1, -1);
      cd.d[0] = cd.d[1] = 2;
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      // Node 2 hangs off node 4; the rest form the chain 1-3-4-5-6(-7-8).
      bond(cd, 0, 2, -1, -1);
      bond(cd, 2, 3, -1, -1);
      bond(cd, 1, 3, -1, -1);
      for (int i = 3; i < r - 1; ++i) bond(cd, i, i + 1, -1, -1);
      break;
  }
  return cd;
}

void check_supported(Family f, int r) {
  auto fail = [&] {
    throw DomainError("unsupported root system " + to_string(f) + "_" +
                      std::to_string(r));
  };
  if (r < 1 || r > 8) fail();
  switch (f) {
    case Family::A: break;
    case Family::B: if (r < 2) fail(); break;
    case Family::C: if (r < 3) fail(); break;
    case Family::D: if (r < 4) fail(); break;
    case Family::E6: if (r != 6) fail(); break;
    case Family::E7: if (r != 7) fail(); break;
    case Family::E8: if (r != 8) fail(); break;
    case Family::F4: if (r != 4) fail(); break;
    case Family::G2: if (r != 2) fail(); break;
    case Family::BC: break;
  }
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
  check_supported(family, rank);
  RootSystem sys;
  sys.family = family;
  sys.rank = rank;
  CartanData cd = cartan_matrix(family, rank);
  sys.cartan = cd.cart;
  sys.d = cd.d;

  // Closure under root strings, height by height.
  std::set<std::vector<int>> seen;
  std::vector<RootVector> frontier;
  for (int i = 1; i <= rank; ++i) {
    RootVector a;
    a.c.assign(rank, 0);
    a.c[i - 1] = 1;
    seen.insert(a.c);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const RootVector& beta : frontier) {
      for (int j = 0; j < rank; ++j) {
        // p = how far the string extends downward from beta in direction j.
        int p = 0;
        RootVector down = beta;
        for (;;) {
          down.c[j] -= 1;
          if (down.is_zero() || down.c[j] < 0 || !seen.count(down.c)) break;
          ++p;
        }
        int pairing = 0;
        for (int i = 0; i < rank; ++i) pairing += beta.c[i] * sys.cartan[i][j];
        int q = p - pairing;
        if (q >= 1) {
          RootVector up = beta;
          up.c[j] += 1;
          if (!seen.count(up.c)) {
            seen.insert(up.c);
            next.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  for (const auto& v : seen) sys.positive.push_back(RootVector{v});

  if (family == Family::BC) {
    // Append the doubles of the short roots (square length 2).
    std::vector<RootVector> doubles;
    for (const auto& r : sys.positive)
      if (sys.sq_length(r) == 2) {
        RootVector twice = r;
        for (int& x : twice.c) x *= 2;
        doubles.push_back(twice);
      }
    sys.positive.insert(sys.positive.end(), doubles.begin(), doubles.end());
  }

  std::sort(sys.positive.begin(), sys.positive.end());
  sys.highest = highest_root(sys);
  return sys;
}

RootVector highest_root(const RootSystem& sys) {
  for (const RootVector& cand : sys.positive) {
    bool top = true;
    for (const RootVector& other : sys.positive)
      if (!cand.dominates(other)) {
        top = false;
        break;
      }
    if (top) return cand;
  }
  throw DomainError("no coefficient-wise maximal root found");
}

int level(const RootSystem& sys, const RootVector& root, const PhiSet& phi) {
  if (phi.rank != sys.rank)
    throw DomainError("subset rank mismatch");
  if ((int)root.c.size() != sys.rank || !sys.is_positive_root(root))
    throw DomainError("root " + root.str() + " is not a positive root of " +
                      to_string(sys.family) + "_" + std::to_string(sys.rank));
  int lv = 0;
  for (int i = 1; i <= sys.rank; ++i)
    if (!phi.contains(i)) lv += root.c[i - 1];
  return lv;
}

std::vector<DiagramAutomorphism> cartan_automorphisms(const RootSystem& sys) {
  std::vector<DiagramAutomorphism> out;
  std::vector<int> perm(sys.rank);
  for (int i = 0; i < sys.rank; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i < sys.rank && ok; ++i)
      for (int j = 0; j < sys.rank && ok; ++j)
        if (sys.cartan[perm[i]][perm[j]] != sys.cartan[i][j]) ok = false;
    if (ok) out.push_back(DiagramAutomorphism{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  // next_permutation leaves perm sorted again; identity was emitted first.
  return out;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(
    const RootSystem& sys, const std::vector<long long>& mult) {
  if (mult.size() != sys.positive.size())
    throw DomainError("multiplicity vector not aligned with the root list");
  std::vector<DiagramAutomorphism> out;
  for (const auto& da : cartan_automorphisms(sys)) {
    bool ok = true;
    for (size_t k = 0; k < sys.positive.size() && ok; ++k) {
      RootVector image = da.apply(sys.positive[k]);
      int idx = sys.index_of(image);
      if (idx < 0 || mult[idx] != mult[k]) ok = false;
    }
    if (ok) out.push_back(da);
  }
  return out;
}

}  // namespace coh1
