#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coh1/common.hpp"

namespace coh1 {

/// Restricted root system families. BC is the non-reduced family
/// (B-type roots together with the doubles of the short ones).
enum class Family { A, B, C, D, E6, E7, E8, F4, G2, BC };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

/// A root written over the simple basis: integer coefficient vector.
/// Valid roots are nonzero and have all coefficients of one sign.
struct RootVector {
  std::vector<int> c;

  RootVector() = default;
  explicit RootVector(std::vector<int> coeffs) : c(std::move(coeffs)) {}

  int height() const {
    int h = 0;
    for (int x : c) h += x;
    return h;
  }
  bool is_zero() const {
    for (int x : c)
      if (x != 0) return false;
    return true;
  }
  bool one_signed() const {
    bool pos = false, neg = false;
    for (int x : c) {
      if (x > 0) pos = true;
      if (x < 0) neg = true;
    }
    return !(pos && neg);
  }
  RootVector negated() const {
    RootVector r = *this;
    for (int& x : r.c) x = -x;
    return r;
  }
  /// Coefficient-wise domination.
  bool dominates(const RootVector& o) const {
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] < o.c[i]) return false;
    return true;
  }
  std::string str() const;

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector& a, const RootVector& b) {
    return a.c <=> b.c;
  }
};

RootVector operator+(const RootVector& a, const RootVector& b);

/// Permutation of the simple roots leaving the Cartan matrix invariant.
struct DiagramAutomorphism {
  std::vector<int> perm;  // 0-based images: node i -> perm[i]

  bool is_identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != (int)i) return false;
    return true;
  }
  int apply_index(int i_1based) const { return perm[i_1based - 1] + 1; }
  RootVector apply(const RootVector& r) const {
    RootVector out;
    out.c.assign(r.c.size(), 0);
    for (size_t i = 0; i < r.c.size(); ++i) out.c[perm[i]] = r.c[i];
    return out;
  }
  PhiSet apply(const PhiSet& phi) const {
    PhiSet out = PhiSet::empty(phi.rank);
    for (int i : phi.indices()) out.insert(apply_index(i));
    return out;
  }
  std::string str() const;
};

struct RootSystem {
  Family family = Family::A;
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<int> d;                    // relative half square lengths of simple roots
  std::vector<RootVector> positive;      // lexicographically sorted
  RootVector highest;

  /// Relative square length (short simple roots have value 2).
  int sq_length(const RootVector& r) const;
  bool is_positive_root(const RootVector& r) const;
  int index_of(const RootVector& r) const;  // -1 when absent
  RootVector simple(int i_1based) const;

  /// Indices into `positive` of the roots supported entirely on phi.
  std::vector<int> supported_on(const PhiSet& phi) const;
};

/// Enumerates the positive roots by closing the simple roots under
/// root strings read off the Cartan matrix. Rank is capped at 8.
RootSystem build_root_system(Family family, int rank);

/// The unique coefficient-wise maximal positive root.
RootVector highest_root(const RootSystem& sys);

/// Sum of the coefficients of `root` outside phi. Zero exactly on the
/// subsystem generated by phi.
int level(const RootSystem& sys, const RootVector& root, const PhiSet& phi);

/// All simple-root permutations preserving the Cartan matrix.
std::vector<DiagramAutomorphism> cartan_automorphisms(const RootSystem& sys);

/// Cartan-preserving permutations that also preserve the given root-space
/// dimensions (`mult` aligned with sys.positive). Always contains the identity.
std::vector<DiagramAutomorphism> diagram_automorphisms(
    const RootSystem& sys, const std::vector<long long>& mult);

}  // namespace coh1
