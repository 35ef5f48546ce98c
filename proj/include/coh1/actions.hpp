#pragma once

#include <memory>
#include <variant>

#include "coh1/parabolic.hpp"

namespace coh1 {

enum class TriState { Yes, No, Unknown };
std::string to_string(TriState t);

/// Symbolic subspace of the first graded piece of the nilpotent radical.
/// Families are tags, not coordinate matrices; the classifications only
/// need (family, host module, dimension).
struct SubspaceDescriptor {
  PhiSet phi;
  long long dim_v = 2;  // representative dimension for parametric families
  std::string family;   // full-n1 | root-subspace | invariant-plane | module |
                        // kaehler-angle:{0,acute,pi/2} | quaternionic-kaehler-angle
  std::string host;     // e.g. "n1" or a root tag "g[0,1]"
  bool parametric_dim() const {
    return family.rfind("kaehler-angle", 0) == 0 ||
           family == "quaternionic-kaehler-angle";
  }
};

struct ActionDescriptor;

struct FoliationA {
  std::vector<long long> line;  // primitive integer coords over {H_1,...,H_r}
};
struct FoliationN {
  int i = 1;
};
struct ReductiveTG {
  std::string key;  // catalog key; "RH:k=<k>" selects the hyperbolic family
};
struct CanonicalExtension {
  PhiSet phi;
  std::shared_ptr<const ActionDescriptor> inner;
};
struct NilpotentConstruction {
  PhiSet phi;
  SubspaceDescriptor v;
};

struct ActionDescriptor {
  std::variant<FoliationA, FoliationN, ReductiveTG, CanonicalExtension,
               NilpotentConstruction>
      node;

  std::string key() const;

  static ActionDescriptor foliation_a(std::vector<long long> line);
  static ActionDescriptor foliation_n(int i);
  static ActionDescriptor reductive(std::string key);
  static ActionDescriptor extension(PhiSet phi, ActionDescriptor inner);
  static ActionDescriptor nilpotent(PhiSet phi, SubspaceDescriptor v);
};

/// Scales a rational line to a primitive integer vector, first nonzero
/// coordinate positive.
std::vector<long long> normalize_line(const std::vector<Rational>& line);
std::vector<long long> normalize_line(std::vector<long long> line);

/// Symbolic description of the subalgebra generating an action:
/// which root spaces it meets (and how many dimensions are missing),
/// which part of the flat it keeps, and the compact tags.
struct SubalgebraSupport {
  // (root, removed dims); removed = 0 means the full root space. Roots may
  // be negative. Sorted by root.
  std::vector<std::pair<RootVector, long long>> roots;
  // Span removed from the flat, canonical RREF rows over the H-basis.
  // Empty = the full flat is present.
  std::vector<std::vector<Rational>> a_removed;
  std::vector<std::string> k_tags;  // sorted
  bool exact = true;  // false when parts are represented by opaque tags

  void add_root(const RootVector& r, long long removed = 0);
  void add_removed_line(const std::vector<Rational>& line);
  void add_k_tag(std::string tag);
  void canonicalize();

  std::vector<std::string> tags() const;  // stable display form
  friend bool operator==(const SubalgebraSupport&, const SubalgebraSupport&) = default;
};

struct OrbitData {
  long long singular_codim = 0;  // 0 = foliation, no singular orbit
  TriState totally_geodesic = TriState::Unknown;
  TriState minimal = TriState::Unknown;
  bool contains_f_phi = false;
  std::string orbit_name;  // optional display string
};

/// Computes the symbolic support of a descriptor over the given space.
SubalgebraSupport support_of(const SymmetricSpaceRecord& rec,
                             const ActionDescriptor& desc);

// ----------------------------------------------------------- foliations

/// The two foliation families and their congruence predicates. Lines in
/// the flat are congruent exactly when some multiplicity-preserving
/// diagram automorphism carries one to the other; likewise for the
/// distinguished simple-root index of the horocycle-type family.
struct FoliationModuli {
  int rank = 0;
  std::vector<DiagramAutomorphism> autos;
  std::string moduli_note;

  bool lines_congruent(const std::vector<long long>& l1,
                       const std::vector<long long>& l2) const;
  bool indices_congruent(int i, int j) const;
  std::vector<std::vector<int>> index_classes() const;  // sorted classes
};

FoliationModuli foliation_moduli(const SymmetricSpaceRecord& rec);

// ----------------------------------------------------------- extensions

struct ExtensionResult {
  ActionDescriptor action;
  SubalgebraSupport support;
  OrbitData orbit;
};

/// Enlarges an action on the boundary component of phi by the split and
/// nilpotent parts of the parabolic. The singular codimension of the inner
/// action is preserved (the slice representations coincide).
ExtensionResult canonical_extend(const SymmetricSpaceRecord& rec,
                                 const PhiSet& phi,
                                 const ActionDescriptor& inner);

/// True when extending from phi directly agrees with extending in two
/// stages through psi (identical supports). phi == psi is trivially true.
bool extension_composition_check(const SymmetricSpaceRecord& rec,
                                 const PhiSet& phi, const PhiSet& psi,
                                 const ActionDescriptor& inner);

/// All chains phi < psi < full set with phi nonempty.
std::vector<std::pair<PhiSet, PhiSet>> extension_chains(const SymmetricSpaceRecord& rec);

enum class Equivalence { Equivalent, NotEquivalent, Unknown };
std::string to_string(Equivalence e);

/// Decides orbit equivalence of the canonical extensions of two inner
/// actions. Equivalence from an inner congruence is claimed only when the
/// congruence comes from the identity component or from a subsystem
/// diagram symmetry that extends to the whole diagram; extensions that
/// are foliations are decided by the global foliation congruence.
Equivalence extension_orbit_equivalence(const SymmetricSpaceRecord& rec,
                                        const PhiSet& phi,
                                        const ActionDescriptor& inner_a,
                                        const ActionDescriptor& inner_b,
                                        bool via_identity_component);

// -------------------------------------------------- sphere transitivity

struct SphereCatalogEntry {
  std::string key;     // lookup key used by the module tables
  std::string group;   // display tag of the acting group
  std::string module;  // display tag of the module
  long long dim;       // module dimension; -1 matches any
  TriState transitive = TriState::Unknown;
  std::string provenance;
};

/// Certified (group, module) pairs for transitivity on the unit sphere.
/// Append-only; every entry carries a provenance note.
class TransitiveSphereCatalog {
 public:
  static const TransitiveSphereCatalog& bundled();

  TriState query(const std::string& key, long long dim) const;
  void append(SphereCatalogEntry e) { entries_.push_back(std::move(e)); }
  const std::vector<SphereCatalogEntry>& entries() const { return entries_; }

 private:
  std::vector<SphereCatalogEntry> entries_;
};

// ------------------------------------------------ reductive catalogues

/// Totally geodesic singular-orbit actions bundled for the rank-2 spaces
/// covered by the classification tables.
struct ReductiveTGEntry {
  std::string key;  // e.g. "SL2(R)xR+"
  long long codim = 0;
  std::string orbit_name;
  TriState minimal = TriState::Unknown;
  std::vector<RootVector> support_roots;  // signed root spaces of the subalgebra
  bool includes_g0 = false;
  std::string note;
};

std::vector<ReductiveTGEntry> reductive_tg_catalog(const SymmetricSpaceRecord& rec);
bool has_reductive_catalog(const SymmetricSpaceRecord& rec);

// ---------------------------------------------- nilpotent construction

struct NilpotentCandidate {
  SubspaceDescriptor v;
  TriState check_i = TriState::Unknown;   // normalizer transitive on F_phi
  TriState check_ii = TriState::Unknown;  // compact normalizer transitive on the sphere in v
  enum class Verdict { Pass, Fail, Undetermined } verdict = Verdict::Undetermined;
  OrbitData orbit;
  std::string dup_of;  // item key of a coinciding action ("" = none known)
  std::string note;
  SubalgebraSupport support;
};

/// Candidates for the maximal parabolic of phi (|phi| = r-1), drawn from the
/// recorded module decomposition of the first graded piece. Empty when that
/// piece has dimension < 2. Duplicates of reductive or extension actions are
/// flagged, never suppressed.
std::vector<NilpotentCandidate> nilpotent_candidates(const SymmetricSpaceRecord& rec,
                                                     const PhiSet& phi);

/// Whether a module decomposition is recorded for (rec, phi).
bool has_module_catalog(const SymmetricSpaceRecord& rec, const PhiSet& phi);

}  // namespace coh1
