#pragma once

#include "coh1/spacedb.hpp"

namespace coh1 {

/// Dimension data of the parabolic subalgebra attached to phi:
/// q = l + n (reductive + nilpotent) and q = m + a_phi + n.
struct ParabolicData {
  PhiSet phi;
  long long dim_n_phi = 0;
  long long dim_a_phi = 0;        // r - |phi|
  long long dim_a_upper_phi = 0;  // |phi|
  long long dim_l_phi = 0;
  long long dim_m_phi = 0;
  long long dim_k_phi = 0;
  long long dim_b_phi = 0;
  long long dim_q_phi = 0;
  // Center of the reductive factor. Not determined by root data in
  // general: 0 for split forms and for the full subset, recorded values
  // for a few spaces, absent otherwise.
  std::optional<long long> dim_z_phi;
  bool is_minimal = false;  // phi empty
  bool is_maximal = false;  // |phi| = r-1
};

/// Dimensions of the graded pieces of the nilpotent radical. depth is the
/// value of the highest root on the grading element; the radical is abelian
/// exactly when depth is 1.
struct Gradation {
  std::vector<long long> level_dims;
  long long depth = 0;
};

struct BoundaryDescriptor {
  PhiSet phi;
  StructuralSignature signature;
  int rank = 0;
  long long dim = 0;
  long long dim_f = 0;  // dim + (r - |phi|)
  std::vector<std::string> name_candidates;
};

struct ParabolicEntry {
  PhiSet phi;
  ParabolicData data;
  PhiSet class_rep;  // canonical member of the conjugacy class
  int class_id = 0;
};

ParabolicData langlands(const SymmetricSpaceRecord& rec, const PhiSet& phi);

/// Requires phi proper; the full set has an empty nilpotent radical.
Gradation gradation(const SymmetricSpaceRecord& rec, const PhiSet& phi);

BoundaryDescriptor boundary_component(const SymmetricSpaceRecord& rec,
                                      const PhiSet& phi, const Database& db);

/// All 2^r subsets ordered by (size, indices), with conjugacy classes
/// identified through multiplicity-preserving diagram automorphisms.
std::vector<ParabolicEntry> enumerate_parabolics(const SymmetricSpaceRecord& rec);

/// Subsets in canonical order (size, then index-lexicographic).
std::vector<PhiSet> all_subsets(int rank);

/// Canonical representative of phi under the record's diagram automorphisms.
PhiSet conjugacy_representative(const SymmetricSpaceRecord& rec, const PhiSet& phi);

}  // namespace coh1
