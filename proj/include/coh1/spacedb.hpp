#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coh1/rootsys.hpp"

namespace coh1 {

/// Small integer arithmetic expression in one variable, kept together with
/// its source text so database files round-trip verbatim. Supports
/// + - * / ( ) and juxtaposition as multiplication ("2n", "4(n-1)+3").
/// Division must be exact.
class Expr {
 public:
  Expr() = default;
  explicit Expr(std::string src);
  static Expr constant(long long v) { return Expr(std::to_string(v)); }

  long long eval(long long n) const;
  bool is_constant() const { return !uses_var_; }
  const std::string& src() const { return src_; }

 private:
  std::string src_;
  bool uses_var_ = false;
};

struct ParamRange {
  std::string var;  // single variable name, conventionally "n"
  long long lo = 0;
  long long hi = 0;
};

/// One stanza of the database file; parametric entries keep expressions.
struct SpaceTemplate {
  std::string name;  // may contain {expr} placeholders
  Family family = Family::A;
  int rank = 0;
  std::vector<Expr> mult_classes;  // one per length class, longest first
  std::vector<std::pair<std::string, Expr>> mult_overrides;  // root coeffs -> value
  Expr dim_k0;
  std::optional<ParamRange> param;
  std::string notes;

  bool parametric() const { return param.has_value(); }
};

/// A fully instantiated symmetric space: root system plus multiplicities.
struct SymmetricSpaceRecord {
  std::string name;           // rendered display name
  std::string template_name;  // stanza name it came from
  std::optional<long long> param_value;
  std::string group_name;     // derived from name when it contains '/'
  std::string isotropy_name;
  RootSystem system;
  std::vector<long long> mult;  // aligned with system.positive
  long long dim_k0 = 0;
  std::string notes;

  bool split_real_form() const { return dim_k0 == 0; }
  long long sum_mult() const {
    long long s = 0;
    for (long long m : mult) s += m;
    return s;
  }
  long long mult_of(const RootVector& r) const;
};

/// rank + sum of root-space dimensions.
long long dim_space(const SymmetricSpaceRecord& rec);

/// Structural identity of a (possibly reducible) root system with
/// multiplicities: per irreducible component, the family, rank, and the
/// multiset of (relative square length, multiplicity) over positive roots.
/// Embedding data is deliberately not part of the signature.
struct ComponentSignature {
  Family family = Family::A;
  int rank = 0;
  // ((num,den) of sq length over the component minimum, multiplicity), sorted.
  std::vector<std::pair<std::pair<long long, long long>, long long>> len_mult;

  friend bool operator==(const ComponentSignature&, const ComponentSignature&) = default;
  friend auto operator<=>(const ComponentSignature&, const ComponentSignature&) = default;
};

struct StructuralSignature {
  std::vector<ComponentSignature> components;  // sorted

  bool empty() const { return components.empty(); }
  friend bool operator==(const StructuralSignature&, const StructuralSignature&) = default;
  std::string str() const;
};

/// Signature of the full system of a record.
StructuralSignature signature_of(const SymmetricSpaceRecord& rec);

/// Signature of the subsystem generated by phi, with inherited multiplicities.
StructuralSignature sub_signature(const SymmetricSpaceRecord& rec, const PhiSet& phi);

class Database {
 public:
  static Database parse(const std::string& text);
  std::string serialize() const;

  /// Resolves a name: exact stanza name (with --param for parametric
  /// stanzas) or a rendered instance name such as "RH5".
  SymmetricSpaceRecord lookup(const std::string& name,
                              std::optional<long long> param = std::nullopt) const;

  /// All rendered record names whose signature equals `sig`, in database
  /// order, deduplicated. Matching is purely structural.
  std::vector<std::string> match_signature(const StructuralSignature& sig) const;

  std::vector<std::string> list_names() const;  // stanza names in order
  const std::vector<SpaceTemplate>& templates() const { return templates_; }
  const std::vector<std::string>& header() const { return header_; }

  /// Structural validation of every stanza; returns human-readable problems.
  std::vector<std::string> validate() const;

  /// Near matches for an unknown name (for error messages).
  std::vector<std::string> suggestions(const std::string& name) const;

 private:
  std::vector<std::string> header_;  // leading comment lines, verbatim
  std::vector<SpaceTemplate> templates_;

  SymmetricSpaceRecord instantiate(const SpaceTemplate& t,
                                   std::optional<long long> n) const;
  friend class DatabaseTestPeer;
};

/// The database text bundled with the library (also installed as a file).
const std::string& builtin_database_text();

/// Parsed bundled database (constructed once).
const Database& builtin_database();

/// Renders a template name with its placeholders evaluated at n.
std::string render_name(const std::string& template_name, long long n);

}  // namespace coh1
