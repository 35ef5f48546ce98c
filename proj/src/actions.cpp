#include "coh1/actions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace coh1 {

std::string to_string(TriState t) {
  switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    case TriState::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Equivalent: return "equivalent";
    case Equivalence::NotEquivalent: return "not-equivalent";
    case Equivalence::Unknown: return "unknown";
  }
  return "?";
}

// ------------------------------------------------------------ descriptors

namespace {

std::string join_ll(const std::vector<long long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string ActionDescriptor::key() const {
  struct V {
    std::string operator()(const FoliationA& f) const {
      return "fol-a[" + join_ll(f.line) + "]";
    }
    std::string operator()(const FoliationN& f) const {
      return "fol-n:i=" + std::to_string(f.i);
    }
    std::string operator()(const ReductiveTG& t) const { return "tg:" + t.key; }
    std::string operator()(const CanonicalExtension& e) const {
      return "ext:phi=" + e.phi.str() + ":inner=" + e.inner->key();
    }
    std::string operator()(const NilpotentConstruction& n) const {
      std::string s = "nilp:phi=" + n.phi.str() + ":v=" + n.v.family;
      if (!n.v.parametric_dim()) s += ":d=" + std::to_string(n.v.dim_v);
      return s;
    }
  };
  return std::visit(V{}, node);
}

ActionDescriptor ActionDescriptor::foliation_a(std::vector<long long> line) {
  return ActionDescriptor{FoliationA{normalize_line(std::move(line))}};
}
ActionDescriptor ActionDescriptor::foliation_n(int i) {
  return ActionDescriptor{FoliationN{i}};
}
ActionDescriptor ActionDescriptor::reductive(std::string key) {
  return ActionDescriptor{ReductiveTG{std::move(key)}};
}
ActionDescriptor ActionDescriptor::extension(PhiSet phi, ActionDescriptor inner) {
  return ActionDescriptor{CanonicalExtension{
      phi, std::make_shared<const ActionDescriptor>(std::move(inner))}};
}
ActionDescriptor ActionDescriptor::nilpotent(PhiSet phi, SubspaceDescriptor v) {
  return ActionDescriptor{NilpotentConstruction{phi, std::move(v)}};
}

std::vector<long long> normalize_line(const std::vector<Rational>& line) {
  long long lcm = 1;
  for (const Rational& q : line) lcm = std::lcm(lcm, q.den);
  std::vector<long long> v;
  for (const Rational& q : line) v.push_back(q.num * (lcm / q.den));
  return normalize_line(std::move(v));
}

std::vector<long long> normalize_line(std::vector<long long> v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) throw DomainError("line in the flat must be nonzero");
  for (long long& x : v) x /= g;
  for (long long x : v) {
    if (x > 0) break;
    if (x < 0) {
      for (long long& y : v) y = -y;
      break;
    }
  }
  return v;
}

// --------------------------------------------------------------- support

void SubalgebraSupport::add_root(const RootVector& r, long long removed) {
  roots.push_back({r, removed});
}

void SubalgebraSupport::add_removed_line(const std::vector<Rational>& line) {
  a_removed.push_back(line);
}

void SubalgebraSupport::add_k_tag(std::string tag) {
  k_tags.push_back(std::move(tag));
}

namespace {

/// Row-reduces rational rows to a canonical echelon basis.
std::vector<std::vector<Rational>> rref(std::vector<std::vector<Rational>> rows) {
  size_t nrows = rows.size();
  if (nrows == 0) return rows;
  size_t ncols = rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < nrows; ++col) {
    size_t pivot = rank;
    while (pivot < nrows && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == nrows) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational lead = rows[rank][col];
    for (auto& x : rows[rank]) x = x / lead;
    for (size_t rr = 0; rr < nrows; ++rr) {
      if (rr == rank || rows[rr][col].is_zero()) continue;
      Rational f = rows[rr][col];
      for (size_t cc = 0; cc < ncols; ++cc)
        rows[rr][cc] = rows[rr][cc] - f * rows[rank][cc];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace

void SubalgebraSupport::canonicalize() {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  a_removed = rref(std::move(a_removed));
  std::sort(k_tags.begin(), k_tags.end());
  k_tags.erase(std::unique(k_tags.begin(), k_tags.end()), k_tags.end());
}

std::vector<std::string> SubalgebraSupport::tags() const {
  std::vector<std::string> out;
  if (a_removed.empty()) {
    out.push_back("a");
  } else {
    for (const auto& row : a_removed) {
      std::string s = "a-minus-line[";
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(row[i].num);
        if (row[i].den != 1) s += "/" + std::to_string(row[i].den);
      }
      out.push_back(s + "]");
    }
  }
  for (const auto& [r, removed] : roots) {
    std::string s = "g" + r.str();
    if (removed > 0) s += ":-" + std::to_string(removed);
    out.push_back(s);
  }
  for (const auto& k : k_tags) out.push_back(k);
  return out;
}

// ------------------------------------------------------------ foliations

FoliationModuli foliation_moduli(const SymmetricSpaceRecord& rec) {
  FoliationModuli fm;
  fm.rank = rec.system.rank;
  fm.autos = diagram_automorphisms(rec.system, rec.mult);
  fm.moduli_note = "RP^" + std::to_string(fm.rank - 1) +
                   " modulo the induced symmetry group (order " +
                   std::to_string(fm.autos.size()) + ")";
  return fm;
}

bool FoliationModuli::lines_congruent(const std::vector<long long>& l1,
                                      const std::vector<long long>& l2) const {
  std::vector<long long> a = normalize_line(l1);
  std::vector<long long> b = normalize_line(l2);
  if ((int)a.size() != rank || (int)b.size() != rank)
    throw DomainError("line coordinate count must equal the rank");
  for (const auto& da : autos) {
    std::vector<long long> img(rank);
    for (int i = 0; i < rank; ++i) img[da.perm[i]] = a[i];
    if (normalize_line(img) == b) return true;
  }
  return false;
}

bool FoliationModuli::indices_congruent(int i, int j) const {
  if (i < 1 || i > rank || j < 1 || j > rank)
    throw DomainError("simple-root index out of range");
  for (const auto& da : autos)
    if (da.apply_index(i) == j) return true;
  return false;
}

std::vector<std::vector<int>> FoliationModuli::index_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> used(rank + 1, false);
  for (int i = 1; i <= rank; ++i) {
    if (used[i]) continue;
    std::vector<int> cls;
    for (int j = i; j <= rank; ++j)
      if (!used[j] && indices_congruent(i, j)) {
        cls.push_back(j);
        used[j] = true;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

// -------------------------------------------------------- sphere catalog

const TransitiveSphereCatalog& TransitiveSphereCatalog::bundled() {
  static const TransitiveSphereCatalog cat = [] {
    TransitiveSphereCatalog c;
    auto add = [&](std::string key, std::string group, std::string module,
                   long long dim, TriState t, std::string prov) {
      c.append({std::move(key), std::move(group), std::move(module), dim, t,
                std::move(prov)});
    };
    add("so_std", "SO_k", "R^k standard", -1, TriState::Yes,
        "rotation group on its standard module");
    add("so2_rot", "SO_2", "R^2", 2, TriState::Yes, "circle acting by rotations");
    add("u_std", "U_k", "C^k standard", -1, TriState::Yes,
        "unitary group on its standard module");
    for (long long d : {2, 3, 4, 6, 7})
      add("spin7_sub", "subgroup of Spin_7", "subspace of the octonions", d,
          TriState::Yes, "octonionic hyperbolic plane table");
    add("spin7_sub", "subgroup of Spin_7", "subspace of the octonions", 5,
        TriState::No, "octonionic hyperbolic plane table");
    add("so2xson_tensor", "SO_2 x SO_n", "R^2 (x) R^n", -1, TriState::No,
        "group orbit has dimension below the sphere");
    add("so_trivial_plus_std", "SO_{n+1}", "R + R^{n+1}", -1, TriState::No,
        "fixes the trivial summand pointwise");
    add("kaehler", "normalizer in U_{n-1}", "constant-angle subspace of C^{n-1}",
        -1, TriState::Yes, "complex hyperbolic subspace families");
    add("quat_kaehler", "normalizer in Sp_1 Sp_{n-1}",
        "constant-angle subspace of H^{n-1}", -1, TriState::Unknown,
        "quaternionic subspace classification open");
    return c;
  }();
  return cat;
}

TriState TransitiveSphereCatalog::query(const std::string& key,
                                        long long dim) const {
  if (key.empty()) return TriState::Unknown;
  for (const auto& e : entries_)
    if (e.key == key && (e.dim == -1 || e.dim == dim)) return e.transitive;
  return TriState::Unknown;
}

// --------------------------------------------------- reductive catalogue

namespace {

RootVector rv(std::initializer_list<int> c) { return RootVector{std::vector<int>(c)}; }

}  // namespace

std::vector<ReductiveTGEntry> reductive_tg_catalog(const SymmetricSpaceRecord& rec) {
  const std::string& t = rec.template_name;
  std::vector<ReductiveTGEntry> out;
  if (t == "SL3(R)/SO3") {
    out.push_back({"SL2(R)xR+", 2, "RH2xE", TriState::Yes,
                   {rv({-1, 0}), rv({1, 0})}, true,
                   "reductive factor of the maximal parabolic of {a1}; orbit "
                   "is the totally geodesic RH2 x E"});
  } else if (t == "SO(2,3)/SO2SO3" ||
             (t == "SO(2,{n+2})/SO2SO{n+2}" && rec.param_value == 1)) {
    out.push_back({"SO(1,3)", 3, "RH3", TriState::Unknown, {}, false,
                   "block subgroup; totally geodesic RH3"});
    out.push_back({"SO(2,2)", 2, "RH2xRH2", TriState::Unknown, {}, false,
                   "block subgroup; totally geodesic RH2 x RH2"});
  } else if (t == "G2_2/SO4") {
    out.push_back({"SU(1,2)", 4, "CH2", TriState::Unknown, {}, false,
                   "totally geodesic complex hyperbolic plane"});
    out.push_back({"SL3(R)", 3, "SL3(R)/SO3", TriState::Unknown, {}, false,
                   "totally geodesic SL3(R)/SO3"});
  }
  return out;
}

bool has_reductive_catalog(const SymmetricSpaceRecord& rec) {
  return !reductive_tg_catalog(rec).empty();
}

// --------------------------------------------------------- module tables

namespace {

struct CandidateFamily {
  std::string family;
  std::string host;
  long long dim = 2;
  std::string sphere_key;
  TriState cond_i_recorded = TriState::Unknown;
  std::string cond_i_note;
  std::string dup_of;
  TriState tg = TriState::Unknown;
  TriState minimal = TriState::Unknown;
  std::string orbit_name;
  std::string note;
};

struct PhiModuleCatalog {
  std::string m_levi;
  bool m_sl2R = false;
  bool m_irreducible = false;
  std::vector<CandidateFamily> families;
};

/// The B2 family parameter when rec is one of the rank-2 SO(2,m) records.
std::optional<long long> so2_family_param(const SymmetricSpaceRecord& rec) {
  if (rec.template_name == "SO(2,3)/SO2SO3") return 1;
  if (rec.template_name == "SO(2,{n+2})/SO2SO{n+2}") return rec.param_value;
  return std::nullopt;
}

/// Rank-one kind: which hyperbolic space shape the record has.
enum class RankOneKind { Real, Complex, Quaternionic, Octonionic, Other };

RankOneKind rank_one_kind(const SymmetricSpaceRecord& rec) {
  if (rec.system.rank != 1) return RankOneKind::Other;
  if (rec.system.family == Family::A) return RankOneKind::Real;
  if (rec.system.family != Family::BC) return RankOneKind::Other;
  long long m_a = rec.mult[0];    // positive roots sorted lex: [1] before [2]
  long long m_2a = rec.mult[1];
  if (m_2a == 1 && m_a % 2 == 0) return RankOneKind::Complex;
  if (m_2a == 3 && m_a % 4 == 0) return RankOneKind::Quaternionic;
  if (m_2a == 7 && m_a == 8) return RankOneKind::Octonionic;
  return RankOneKind::Other;
}

std::optional<PhiModuleCatalog> phi_module_catalog_impl(
    const SymmetricSpaceRecord& rec, const PhiSet& phi) {
  const std::string& t = rec.template_name;

  if (rec.system.rank == 1) {
    PhiModuleCatalog cat;
    cat.m_levi = "k0";
    switch (rank_one_kind(rec)) {
      case RankOneKind::Real: {
        long long n = rec.mult[0] + 1;  // dimension of the space
        for (long long k = 2; k <= rec.mult[0]; ++k) {
          CandidateFamily f;
          f.family = "root-subspace";
          f.host = "g[1]";
          f.dim = k;
          f.sphere_key = "so_std";
          f.dup_of = "tg:RH:k=" + std::to_string(n - k);
          f.tg = TriState::Yes;
          f.orbit_name = "RH" + std::to_string(n - k);
          f.note = "orbit is a totally geodesic hyperbolic subspace";
          cat.families.push_back(std::move(f));
        }
        return cat;
      }
      case RankOneKind::Complex: {
        long long n = rec.mult[0] / 2 + 1;  // complex dimension
        CandidateFamily zero;
        zero.family = "kaehler-angle:0";
        zero.host = "g[1]";
        zero.dim = 2;
        zero.sphere_key = "kaehler";
        zero.tg = TriState::Yes;
        zero.note = "complex subspaces, real dimension 2m for m = 1.." +
                    std::to_string(n - 1) + "; totally geodesic complex tubes";
        cat.families.push_back(std::move(zero));
        if (n >= 3) {
          CandidateFamily acute;
          acute.family = "kaehler-angle:acute";
          acute.host = "g[1]";
          acute.dim = 2;
          acute.sphere_key = "kaehler";
          acute.tg = TriState::No;
          acute.note = "constant angle strictly between 0 and pi/2; singular "
                       "orbit not totally geodesic, not orbit equivalent to "
                       "the other constructions";
          cat.families.push_back(std::move(acute));
          CandidateFamily real;
          real.family = "kaehler-angle:pi/2";
          real.host = "g[1]";
          real.dim = 2;
          real.sphere_key = "kaehler";
          real.tg = TriState::No;
          real.note = "totally real subspaces, dimension 2.." +
                      std::to_string(n - 1);
          cat.families.push_back(std::move(real));
        }
        return cat;
      }
      case RankOneKind::Quaternionic: {
        CandidateFamily f;
        f.family = "quaternionic-kaehler-angle";
        f.host = "g[1]";
        f.dim = 4;
        f.sphere_key = "quat_kaehler";
        f.note = "constant quaternionic angle; subspace classification open";
        cat.families.push_back(std::move(f));
        return cat;
      }
      case RankOneKind::Octonionic: {
        for (long long k : {2, 3, 4, 5, 6, 7}) {
          CandidateFamily f;
          f.family = "root-subspace";
          f.host = "g[1]";
          f.dim = k;
          f.sphere_key = "spin7_sub";
          f.tg = TriState::No;
          f.note = "subspace of the octonions; singular orbit not totally "
                   "geodesic, not orbit equivalent to the other constructions";
          cat.families.push_back(std::move(f));
        }
        return cat;
      }
      case RankOneKind::Other:
        return std::nullopt;
    }
  }

  if (t == "SL3(R)/SO3") {
    PhiModuleCatalog cat;
    cat.m_levi = "sl2(R)";
    cat.m_sl2R = true;
    cat.m_irreducible = true;
    CandidateFamily f;
    f.family = "full-n1";
    f.host = "n1";
    f.dim = 2;
    f.sphere_key = "so2_rot";
    f.dup_of = "tg:SL2(R)xR+";
    f.tg = TriState::Yes;
    f.orbit_name = "RH2xE";
    f.note = "normalizer is the full reductive factor; coincides with its "
             "totally geodesic orbit";
    cat.families.push_back(std::move(f));
    return cat;
  }

  if (t == "SL4(R)/SO4") {
    PhiModuleCatalog cat;
    auto idx = phi.indices();
    if (idx == std::vector<int>{1, 2} || idx == std::vector<int>{2, 3}) {
      cat.m_levi = "sl3(R)";
      cat.m_irreducible = true;
      CandidateFamily f;
      f.family = "full-n1";
      f.host = "n1";
      f.dim = 3;
      f.sphere_key = "so_std";
      f.tg = TriState::Yes;
      f.orbit_name = "SL3(R)/SO3 x E";
      f.note = "normalizer is the full reductive factor";
      cat.families.push_back(std::move(f));
    } else {
      cat.m_levi = "sl2(R)+sl2(R)";
      cat.m_irreducible = true;
      CandidateFamily f;
      f.family = "full-n1";
      f.host = "n1";
      f.dim = 4;
      cat.families.push_back(std::move(f));
    }
    return cat;
  }

  if (auto n = so2_family_param(rec)) {
    PhiModuleCatalog cat;
    if (phi.contains(1)) {  // the long simple root: levels (2n, 1)
      cat.m_levi = *n == 1 ? "sl2(R)" : "sl2(R)+so_" + std::to_string(*n);
      cat.m_sl2R = (*n == 1);
      cat.m_irreducible = true;
      CandidateFamily full;
      full.family = "full-n1";
      full.host = "n1";
      full.dim = 2 * *n;
      full.sphere_key = *n == 1 ? "so2_rot" : "so2xson_tensor";
      if (*n == 1) {
        full.dup_of = "tg:SO(2,2)";
        full.tg = TriState::Yes;
        full.orbit_name = "RH2xRH2";
        full.note = "normalizer is the full reductive factor; the orbit is "
                    "the totally geodesic RH2 x RH2";
      }
      cat.families.push_back(std::move(full));
      for (long long k = 2; k <= *n; ++k) {
        CandidateFamily f;
        f.family = "root-subspace";
        f.host = "g[0,1]";
        f.dim = k;
        f.sphere_key = "so_std";
        f.cond_i_recorded = TriState::Yes;
        f.cond_i_note = "the flat together with the long simple root space "
                        "acts transitively on F";
        f.dup_of = "";
        f.note = "orbit equivalent to a canonical extension from the rank-one "
                 "boundary component of the other class";
        cat.families.push_back(std::move(f));
      }
    } else {  // phi = {2}: levels (n+2)
      cat.m_levi = "so(1," + std::to_string(*n + 1) + ")";
      cat.m_sl2R = (*n == 1);
      cat.m_irreducible = true;
      CandidateFamily full;
      full.family = "full-n1";
      full.host = "n1";
      full.dim = *n + 2;
      full.sphere_key = "so_trivial_plus_std";
      cat.families.push_back(std::move(full));
      CandidateFamily mod;
      mod.family = "module";
      mod.host = "n1-irreducible";
      mod.dim = *n + 1;
      mod.sphere_key = "so_std";
      mod.note = "the irreducible module of the compact normalizer";
      cat.families.push_back(std::move(mod));
    }
    return cat;
  }

  if (t == "G2_2/SO4") {
    PhiModuleCatalog cat;
    cat.m_levi = "sl2(R)";
    cat.m_sl2R = true;
    cat.m_irreducible = true;
    if (phi.contains(2)) {  // levels (2,1,2)
      CandidateFamily f;
      f.family = "full-n1";
      f.host = "n1";
      f.dim = 2;
      f.sphere_key = "so2_rot";
      f.tg = TriState::No;
      f.minimal = TriState::Yes;
      f.orbit_name = "6-dimensional minimal orbit";
      f.note = "singular orbit contains a maximal flat, hence is not orbit "
               "equivalent to the extension items";
      cat.families.push_back(std::move(f));
    } else {  // phi = {1}: levels (4,1)
      CandidateFamily full;
      full.family = "full-n1";
      full.host = "n1";
      full.dim = 4;
      cat.families.push_back(std::move(full));
      CandidateFamily plane;
      plane.family = "invariant-plane";
      plane.host = "n1";
      plane.dim = 2;
      plane.sphere_key = "so2_rot";
      cat.families.push_back(std::move(plane));
    }
    return cat;
  }

  if (t == "G2_C/G2") {
    PhiModuleCatalog cat;
    cat.m_levi = "sl2(C)";
    cat.m_irreducible = true;
    if (phi.contains(2)) {
      CandidateFamily f;
      f.family = "full-n1";
      f.host = "n1";
      f.dim = 4;
      f.sphere_key = "u_std";
      f.tg = TriState::No;
      f.minimal = TriState::Yes;
      f.orbit_name = "10-dimensional minimal orbit";
      cat.families.push_back(std::move(f));
    } else {
      CandidateFamily f;
      f.family = "full-n1";
      f.host = "n1";
      f.dim = 8;
      cat.families.push_back(std::move(f));
    }
    return cat;
  }

  return std::nullopt;
}

}  // namespace

bool has_module_catalog(const SymmetricSpaceRecord& rec, const PhiSet& phi) {
  return phi_module_catalog_impl(rec, phi).has_value();
}

// -------------------------------------------------------------- supports

namespace {

struct BoundaryParts {
  std::vector<std::pair<RootVector, long long>> roots;
  std::vector<std::vector<Rational>> a_removed;
  std::vector<std::string> k_tags;
  bool exact = true;
};

std::vector<Rational> unit_row(int rank, int i_1based) {
  std::vector<Rational> row(rank, Rational(0));
  row[i_1based - 1] = Rational(1);
  return row;
}

std::vector<Rational> line_row(const std::vector<long long>& line) {
  std::vector<Rational> row;
  for (long long x : line) row.push_back(Rational(x));
  return row;
}

void validate_line_in_span(const std::vector<long long>& line, const PhiSet& phi) {
  if ((int)line.size() != phi.rank)
    throw DomainError("line coordinate count must equal the rank");
  for (int i = 1; i <= phi.rank; ++i)
    if (!phi.contains(i) && line[i - 1] != 0)
      throw DomainError("inner line leaves the boundary flat of phi=" + phi.str());
}

/// Symbolic parts of an inner action, expressed inside the subsystem of phi
/// (parent coordinates throughout).
BoundaryParts boundary_parts(const SymmetricSpaceRecord& rec, const PhiSet& phi,
                             const ActionDescriptor& inner) {
  const RootSystem& sys = rec.system;
  BoundaryParts parts;
  auto sigma_phi = sys.supported_on(phi);

  if (const auto* fa = std::get_if<FoliationA>(&inner.node)) {
    validate_line_in_span(fa->line, phi);
    for (int k : sigma_phi) parts.roots.push_back({sys.positive[k], 0});
    parts.a_removed.push_back(line_row(fa->line));
    return parts;
  }
  if (const auto* fn = std::get_if<FoliationN>(&inner.node)) {
    if (!phi.contains(fn->i))
      throw DomainError("inner action refers to simple root " +
                        std::to_string(fn->i) + " outside phi=" + phi.str());
    for (int k : sigma_phi) {
      long long removed = sys.positive[k] == sys.simple(fn->i) ? 1 : 0;
      parts.roots.push_back({sys.positive[k], removed});
    }
    return parts;
  }
  if (const auto* tg = std::get_if<ReductiveTG>(&inner.node)) {
    long long k = -1;
    if (tg->key.rfind("RH:k=", 0) == 0) k = std::stoll(tg->key.substr(5));
    for (int i : phi.indices()) parts.a_removed.push_back(unit_row(sys.rank, i));
    if (k == 0) {
      // Point stabilizer of the boundary component: compact part only.
      for (int idx : sigma_phi)
        parts.k_tags.push_back("k" + sys.positive[idx].str());
      if (rec.dim_k0 > 0) parts.k_tags.push_back("k0g[" + phi.str() + "]");
      return parts;
    }
    parts.k_tags.push_back("inner:" + inner.key() + "@phi=" + phi.str());
    parts.exact = false;
    return parts;
  }
  if (const auto* ce = std::get_if<CanonicalExtension>(&inner.node)) {
    if (!ce->phi.subset_of(phi) || ce->phi == phi)
      throw DomainError("nested extension must come from a proper subset of phi");
    parts = boundary_parts(rec, ce->phi, *ce->inner);
    auto inner_sigma = sys.supported_on(ce->phi);
    std::set<int> inner_set(inner_sigma.begin(), inner_sigma.end());
    for (int k : sigma_phi)
      if (!inner_set.count(k)) parts.roots.push_back({sys.positive[k], 0});
    return parts;
  }
  // Nilpotent inner actions are carried opaquely.
  parts.k_tags.push_back("inner:" + inner.key() + "@phi=" + phi.str());
  parts.exact = false;
  return parts;
}

long long inner_codim(const SymmetricSpaceRecord& rec, const PhiSet& phi,
                      const ActionDescriptor& inner) {
  if (std::holds_alternative<FoliationA>(inner.node) ||
      std::holds_alternative<FoliationN>(inner.node))
    return 0;
  if (const auto* tg = std::get_if<ReductiveTG>(&inner.node)) {
    long long dim_b = langlands(rec, phi).dim_b_phi;
    if (tg->key.rfind("RH:k=", 0) == 0) {
      long long k = std::stoll(tg->key.substr(5));
      if (k < 0 || k > dim_b - 2)
        throw DomainError("hyperbolic family index k=" + std::to_string(k) +
                          " out of range for a boundary of dimension " +
                          std::to_string(dim_b));
      return dim_b - k;
    }
    throw DomainError("unknown inner catalog key '" + tg->key + "'");
  }
  if (const auto* ce = std::get_if<CanonicalExtension>(&inner.node))
    return inner_codim(rec, ce->phi, *ce->inner);
  if (const auto* nc = std::get_if<NilpotentConstruction>(&inner.node))
    return nc->v.dim_v;
  throw DomainError("unsupported inner descriptor");
}

}  // namespace

SubalgebraSupport support_of(const SymmetricSpaceRecord& rec,
                             const ActionDescriptor& desc) {
  const RootSystem& sys = rec.system;
  SubalgebraSupport s;

  if (const auto* fa = std::get_if<FoliationA>(&desc.node)) {
    if ((int)fa->line.size() != sys.rank)
      throw DomainError("line coordinate count must equal the rank");
    for (const auto& r : sys.positive) s.add_root(r);
    s.add_removed_line(line_row(fa->line));
    s.canonicalize();
    return s;
  }
  if (const auto* fn = std::get_if<FoliationN>(&desc.node)) {
    if (fn->i < 1 || fn->i > sys.rank)
      throw DomainError("simple-root index out of range");
    for (const auto& r : sys.positive)
      s.add_root(r, r == sys.simple(fn->i) ? 1 : 0);
    s.canonicalize();
    return s;
  }
  if (const auto* tg = std::get_if<ReductiveTG>(&desc.node)) {
    for (const auto& e : reductive_tg_catalog(rec)) {
      if (e.key != tg->key) continue;
      if (e.support_roots.empty() && !e.includes_g0) {
        s.add_k_tag("subgroup:" + e.key);
        s.exact = false;
      } else {
        for (const auto& r : e.support_roots) s.add_root(r);
        if (rec.dim_k0 > 0) s.add_k_tag("k0");
      }
      s.canonicalize();
      return s;
    }
    // Rank-one hyperbolic family and anything else uncatalogued: opaque.
    s.add_k_tag("subgroup:" + tg->key);
    s.exact = false;
    s.canonicalize();
    return s;
  }
  if (const auto* ce = std::get_if<CanonicalExtension>(&desc.node)) {
    if (ce->phi.is_empty() || ce->phi.is_full())
      throw DomainError("extension needs a proper nonempty subset");
    BoundaryParts parts = boundary_parts(rec, ce->phi, *ce->inner);
    s.roots = std::move(parts.roots);
    s.a_removed = std::move(parts.a_removed);
    s.k_tags = std::move(parts.k_tags);
    s.exact = parts.exact;
    auto inside = sys.supported_on(ce->phi);
    std::set<int> inside_set(inside.begin(), inside.end());
    for (size_t k = 0; k < sys.positive.size(); ++k)
      if (!inside_set.count((int)k)) s.add_root(sys.positive[k]);
    s.canonicalize();
    return s;
  }
  const auto& nc = std::get<NilpotentConstruction>(desc.node);
  {
    auto sigma_phi = sys.supported_on(nc.phi);
    std::set<int> inside(sigma_phi.begin(), sigma_phi.end());
    if (nc.v.family == "full-n1") {
      // Normalizer is the full reductive factor.
      for (int k : sigma_phi) {
        s.add_root(sys.positive[k]);
        s.add_root(sys.positive[k].negated());
      }
      if (rec.dim_k0 > 0) s.add_k_tag("k0");
      for (size_t k = 0; k < sys.positive.size(); ++k) {
        if (inside.count((int)k)) continue;
        if (level(sys, sys.positive[k], nc.phi) >= 2) s.add_root(sys.positive[k]);
      }
      s.canonicalize();
      return s;
    }
    if (nc.v.host.rfind("g[", 0) == 0) {
      // Subspace of a single root space: the rest of the radical survives.
      RootVector host;
      {
        std::string inner_txt = nc.v.host.substr(2, nc.v.host.size() - 3);
        size_t pos = 0;
        while (pos < inner_txt.size()) {
          size_t next = inner_txt.find(',', pos);
          host.c.push_back(std::stoi(inner_txt.substr(
              pos, next == std::string::npos ? std::string::npos : next - pos)));
          if (next == std::string::npos) break;
          pos = next + 1;
        }
      }
      for (size_t k = 0; k < sys.positive.size(); ++k) {
        if (inside.count((int)k)) continue;
        long long m = rec.mult[k];
        long long removed = sys.positive[k] == host ? nc.v.dim_v : 0;
        if (removed < m) s.add_root(sys.positive[k], removed);
      }
      s.add_k_tag("normalizer-of-v");
      s.exact = false;  // the compact normalizer is symbolic
      s.canonicalize();
      return s;
    }
    s.add_k_tag("inner:" + desc.key());
    s.exact = false;
    s.canonicalize();
    return s;
  }
}

// ------------------------------------------------------------ extensions

ExtensionResult canonical_extend(const SymmetricSpaceRecord& rec,
                                 const PhiSet& phi,
                                 const ActionDescriptor& inner) {
  if (phi.rank != rec.system.rank) throw DomainError("subset rank mismatch");
  if (phi.is_empty() || phi.is_full())
    throw DomainError("canonical extension needs a proper nonempty subset");
  ExtensionResult res;
  res.action = ActionDescriptor::extension(phi, inner);
  res.support = support_of(rec, res.action);
  res.orbit.singular_codim = inner_codim(rec, phi, inner);
  res.orbit.contains_f_phi = false;
  return res;
}

bool extension_composition_check(const SymmetricSpaceRecord& rec,
                                 const PhiSet& phi, const PhiSet& psi,
                                 const ActionDescriptor& inner) {
  if (phi == psi) return true;
  if (phi.is_empty() || !phi.subset_of(psi) || psi.is_full())
    throw DomainError("need a chain phi < psi < full simple-root set");
  SubalgebraSupport direct = canonical_extend(rec, phi, inner).support;
  SubalgebraSupport staged =
      canonical_extend(rec, psi, ActionDescriptor::extension(phi, inner)).support;
  return direct == staged;
}

std::vector<std::pair<PhiSet, PhiSet>> extension_chains(
    const SymmetricSpaceRecord& rec) {
  std::vector<std::pair<PhiSet, PhiSet>> chains;
  for (const PhiSet& phi : all_subsets(rec.system.rank)) {
    if (phi.is_empty() || phi.is_full()) continue;
    for (const PhiSet& psi : all_subsets(rec.system.rank)) {
      if (psi.is_full() || psi == phi) continue;
      if (phi.subset_of(psi)) chains.push_back({phi, psi});
    }
  }
  return chains;
}

namespace {

/// Automorphisms of the subsystem diagram of phi that preserve the
/// inherited multiplicities, as maps on the global indices of phi.
std::vector<std::map<int, int>> subsystem_automorphisms(
    const SymmetricSpaceRecord& rec, const PhiSet& phi) {
  const RootSystem& sys = rec.system;
  std::vector<int> idx = phi.indices();
  std::vector<int> image = idx;
  std::vector<std::map<int, int>> out;
  std::sort(image.begin(), image.end());
  auto sigma_phi = sys.supported_on(phi);
  do {
    std::map<int, int> tau;
    for (size_t a = 0; a < idx.size(); ++a) tau[idx[a]] = image[a];
    bool ok = true;
    for (size_t a = 0; a < idx.size() && ok; ++a)
      for (size_t b = 0; b < idx.size() && ok; ++b)
        if (sys.cartan[tau[idx[a]] - 1][tau[idx[b]] - 1] !=
            sys.cartan[idx[a] - 1][idx[b] - 1])
          ok = false;
    for (int k : sigma_phi) {
      if (!ok) break;
      RootVector mapped;
      mapped.c.assign(sys.rank, 0);
      for (int i : idx) mapped.c[tau[i] - 1] = sys.positive[k].c[i - 1];
      int mi = sys.index_of(mapped);
      if (mi < 0 || rec.mult[mi] != rec.mult[k]) ok = false;
    }
    if (ok) out.push_back(std::move(tau));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::optional<ActionDescriptor> apply_tau(const std::map<int, int>& tau,
                                          const ActionDescriptor& d) {
  if (const auto* fn = std::get_if<FoliationN>(&d.node)) {
    auto it = tau.find(fn->i);
    if (it == tau.end()) return std::nullopt;
    return ActionDescriptor::foliation_n(it->second);
  }
  if (const auto* fa = std::get_if<FoliationA>(&d.node)) {
    std::vector<long long> img(fa->line.size(), 0);
    for (size_t i = 0; i < fa->line.size(); ++i) {
      auto it = tau.find((int)i + 1);
      if (it != tau.end())
        img[it->second - 1] = fa->line[i];
      else
        img[i] = fa->line[i];
    }
    return ActionDescriptor::foliation_a(std::move(img));
  }
  return d;  // catalog keys are label-independent
}

bool extends_to_global(const SymmetricSpaceRecord& rec, const PhiSet& phi,
                       const std::map<int, int>& tau) {
  for (const auto& da : diagram_automorphisms(rec.system, rec.mult)) {
    bool match = true;
    for (int i : phi.indices())
      if (da.apply_index(i) != tau.at(i)) {
        match = false;
        break;
      }
    if (match) return true;
  }
  return false;
}

std::optional<ActionDescriptor> as_global_foliation(const ActionDescriptor& inner) {
  if (std::holds_alternative<FoliationA>(inner.node) ||
      std::holds_alternative<FoliationN>(inner.node))
    return inner;
  return std::nullopt;
}

}  // namespace

Equivalence extension_orbit_equivalence(const SymmetricSpaceRecord& rec,
                                        const PhiSet& phi,
                                        const ActionDescriptor& inner_a,
                                        const ActionDescriptor& inner_b,
                                        bool via_identity_component) {
  // Both inners must be meaningful over the subsystem of phi.
  ExtensionResult ext_a = canonical_extend(rec, phi, inner_a);
  ExtensionResult ext_b = canonical_extend(rec, phi, inner_b);

  if (inner_a.key() == inner_b.key()) return Equivalence::Equivalent;
  if (via_identity_component) return Equivalence::Equivalent;

  // The singular codimension is an invariant of orbit equivalence.
  if (ext_a.orbit.singular_codim != ext_b.orbit.singular_codim)
    return Equivalence::NotEquivalent;

  for (const auto& tau : subsystem_automorphisms(rec, phi)) {
    auto mapped = apply_tau(tau, inner_a);
    if (mapped && mapped->key() == inner_b.key() &&
        extends_to_global(rec, phi, tau))
      return Equivalence::Equivalent;
  }

  // Extensions of foliations are global foliations; those are classified.
  auto ga = as_global_foliation(inner_a);
  auto gb = as_global_foliation(inner_b);
  if (ga && gb) {
    FoliationModuli fm = foliation_moduli(rec);
    const auto* na = std::get_if<FoliationN>(&ga->node);
    const auto* nb = std::get_if<FoliationN>(&gb->node);
    if (na && nb)
      return fm.indices_congruent(na->i, nb->i) ? Equivalence::Equivalent
                                                : Equivalence::NotEquivalent;
    const auto* aa = std::get_if<FoliationA>(&ga->node);
    const auto* ab = std::get_if<FoliationA>(&gb->node);
    if (aa && ab)
      return fm.lines_congruent(aa->line, ab->line) ? Equivalence::Equivalent
                                                    : Equivalence::NotEquivalent;
    return Equivalence::NotEquivalent;  // mixed foliation types never match
  }
  return Equivalence::Unknown;
}

// ---------------------------------------------------------- construction

std::vector<NilpotentCandidate> nilpotent_candidates(
    const SymmetricSpaceRecord& rec, const PhiSet& phi) {
  const RootSystem& sys = rec.system;
  if (phi.rank != sys.rank) throw DomainError("subset rank mismatch");
  if (phi.size() != sys.rank - 1)
    throw DomainError("the construction applies to maximal parabolics "
                      "(|phi| = rank - 1), got phi=" + phi.str());
  Gradation g = gradation(rec, phi);
  if (g.level_dims[0] < 2) return {};

  auto cat = phi_module_catalog_impl(rec, phi);
  if (!cat) return {};

  ParabolicData pd = langlands(rec, phi);
  const auto& spheres = TransitiveSphereCatalog::bundled();

  std::vector<NilpotentCandidate> out;
  for (const CandidateFamily& f : cat->families) {
    NilpotentCandidate c;
    c.v = SubspaceDescriptor{phi, f.dim, f.family, f.host};
    if (f.dim < 2 || f.dim > g.level_dims[0])
      throw DomainError("catalog subspace dimension out of range");

    // Condition (ii): the compact normalizer on the unit sphere of v.
    if (!c.v.parametric_dim() && pd.dim_k_phi < f.dim - 1)
      c.check_ii = TriState::No;  // the group is too small for the sphere
    else
      c.check_ii = spheres.query(f.sphere_key, f.dim);

    // Condition (i): transitivity on F_phi, by the recorded rule set.
    if (sys.rank == 1) {
      // The boundary component is a point and the flat normalizes every
      // subspace of the single simple root space.
      c.check_i = TriState::Yes;
    } else if (f.family == "full-n1") {
      c.check_i = TriState::Yes;  // normalizer contains the reductive factor
    } else if (f.cond_i_recorded != TriState::Unknown) {
      c.check_i = f.cond_i_recorded;
      if (!f.cond_i_note.empty()) c.note = f.cond_i_note;
    } else if (cat->m_sl2R && cat->m_irreducible && f.dim < g.level_dims[0]) {
      // A proper invariant complement would be normalized by the whole
      // rank-one simple factor, contradicting irreducibility.
      c.check_i = TriState::No;
    } else {
      c.check_i = TriState::Unknown;
    }

    if (c.check_i == TriState::No || c.check_ii == TriState::No)
      c.verdict = NilpotentCandidate::Verdict::Fail;
    else if (c.check_i == TriState::Yes && c.check_ii == TriState::Yes)
      c.verdict = NilpotentCandidate::Verdict::Pass;
    else
      c.verdict = NilpotentCandidate::Verdict::Undetermined;

    c.orbit.singular_codim = f.dim;
    c.orbit.contains_f_phi = c.verdict == NilpotentCandidate::Verdict::Pass;
    c.orbit.totally_geodesic = f.tg;
    c.orbit.minimal = f.minimal;
    c.orbit.orbit_name = f.orbit_name;
    c.dup_of = f.dup_of;
    if (c.note.empty())
      c.note = f.note;
    else if (!f.note.empty())
      c.note += "; " + f.note;
    if (c.verdict == NilpotentCandidate::Verdict::Pass)
      c.support = support_of(rec, ActionDescriptor::nilpotent(phi, c.v));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace coh1
