#include "coh1/spacedb.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace coh1 {

// ---------------------------------------------------------------- Expr

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, std::optional<long long> n)
      : s_(s), n_(n) {}

  long long parse(bool* saw_var) {
    long long v = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw DomainError("trailing characters in expression '" + s_ + "'");
    if (saw_var) *saw_var = saw_var_;
    return v;
  }

 private:
  long long expr() {
    long long v = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        v += term();
      } else if (peek() == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  long long term() {
    long long v = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        v *= factor();
      } else if (c == '/') {
        ++pos_;
        long long d = factor();
        if (d == 0) throw DomainError("division by zero in '" + s_ + "'");
        if (v % d != 0)
          throw DomainError("non-integer division in '" + s_ + "'");
        v /= d;
      } else if (c == '(' || std::isalnum((unsigned char)c)) {
        v *= factor();  // juxtaposition: 2n, 4(n-1)
      } else {
        return v;
      }
    }
  }

  long long factor() {
    skip_ws();
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      long long v = expr();
      skip_ws();
      if (peek() != ')') throw DomainError("missing ')' in '" + s_ + "'");
      ++pos_;
      return v;
    }
    if (std::isdigit((unsigned char)c)) {
      long long v = 0;
      while (std::isdigit((unsigned char)peek())) v = v * 10 + (s_[pos_++] - '0');
      return v;
    }
    if (std::isalpha((unsigned char)c)) {
      while (std::isalpha((unsigned char)peek())) ++pos_;
      saw_var_ = true;
      if (!n_)
        throw DomainError("expression '" + s_ + "' needs a parameter value");
      return *n_;
    }
    throw DomainError("bad expression '" + s_ + "'");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }

  const std::string& s_;
  std::optional<long long> n_;
  size_t pos_ = 0;
  bool saw_var_ = false;
};

}  // namespace

Expr::Expr(std::string src) : src_(std::move(src)) {
  if (src_.empty()) throw DomainError("empty expression");
  ExprParser p(src_, 1);  // probe parse with a dummy value
  p.parse(&uses_var_);
}

long long Expr::eval(long long n) const {
  ExprParser p(src_, n);
  return p.parse(nullptr);
}

// ------------------------------------------------------ record helpers

long long SymmetricSpaceRecord::mult_of(const RootVector& r) const {
  int idx = system.index_of(r);
  if (idx < 0) throw DomainError("root " + r.str() + " not in " + name);
  return mult[idx];
}

long long dim_space(const SymmetricSpaceRecord& rec) {
  return rec.system.rank + rec.sum_mult();
}

// ---------------------------------------------------------- signatures

namespace {

const RootSystem& cached_system(Family f, int rank) {
  static std::map<std::pair<Family, int>, RootSystem> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(f, rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_root_system(f, rank)).first;
  return it->second;
}

Family recognize_component(const RootSystem& sys, const std::vector<int>& nodes,
                           bool has_doubled) {
  if (has_doubled) return Family::BC;
  int r = (int)nodes.size();
  if (r == 1) return Family::A;
  int max_bond = 0;
  std::vector<int> degree(r, 0);
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      int bond = sys.cartan[nodes[a]][nodes[b]] * sys.cartan[nodes[b]][nodes[a]];
      if (bond > 0) {
        ++degree[a];
        ++degree[b];
        max_bond = std::max(max_bond, bond);
      }
    }
  if (max_bond == 3) return Family::G2;
  if (max_bond == 2) {
    if (r == 2) return Family::B;
    int shorts = 0;
    int min_d = sys.d[nodes[0]];
    for (int a = 1; a < r; ++a) min_d = std::min(min_d, sys.d[nodes[a]]);
    for (int a = 0; a < r; ++a)
      if (sys.d[nodes[a]] == min_d) ++shorts;
    if (r == 4 && shorts == 2) return Family::F4;
    if (shorts == 1) return Family::B;
    return Family::C;
  }
  // Simply laced.
  int branch = -1;
  for (int a = 0; a < r; ++a)
    if (degree[a] == 3) branch = a;
  if (branch < 0) return Family::A;
  // Leg lengths from the branch node.
  std::vector<int> legs;
  for (int a = 0; a < r; ++a) {
    if (a == branch || degree[a] != 1) continue;
    // walk from leaf a toward branch
    int len = 0;
    int prev = -1, cur = a;
    while (cur != branch) {
      ++len;
      for (int b = 0; b < r; ++b) {
        if (b == cur || b == prev) continue;
        if (sys.cartan[nodes[cur]][nodes[b]] != 0) {
          prev = cur;
          cur = b;
          break;
        }
      }
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs.size() == 3 && legs[0] == 1 && legs[1] == 1) return Family::D;
  if (legs == std::vector<int>{1, 2, 2}) return Family::E6;
  if (legs == std::vector<int>{1, 2, 3}) return Family::E7;
  if (legs == std::vector<int>{1, 2, 4}) return Family::E8;
  throw DomainError("unrecognized simply-laced diagram component");
}

StructuralSignature signature_impl(const SymmetricSpaceRecord& rec,
                                   const PhiSet& phi) {
  const RootSystem& sys = rec.system;
  StructuralSignature sig;
  auto nodes = phi.indices();
  if (nodes.empty()) return sig;

  // Connected components of the sub-diagram.
  std::map<int, int> comp;  // 0-based node -> component id
  int ncomp = 0;
  for (int i : nodes) {
    int ni = i - 1;
    if (comp.count(ni)) continue;
    std::vector<int> stack{ni};
    comp[ni] = ncomp;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int j : nodes) {
        int nj = j - 1;
        if (!comp.count(nj) && sys.cartan[cur][nj] != 0) {
          comp[nj] = ncomp;
          stack.push_back(nj);
        }
      }
    }
    ++ncomp;
  }

  std::vector<std::vector<int>> comp_nodes(ncomp);
  for (auto [node, c] : comp) comp_nodes[c].push_back(node);
  for (auto& v : comp_nodes) std::sort(v.begin(), v.end());

  for (int c = 0; c < ncomp; ++c) {
    PhiSet sub = PhiSet::empty(sys.rank);
    for (int node : comp_nodes[c]) sub.insert(node + 1);
    auto root_idx = sys.supported_on(sub);

    // Doubled-root detection for non-reduced components.
    std::set<std::vector<int>> root_set;
    for (int k : root_idx) root_set.insert(sys.positive[k].c);
    bool doubled = false;
    for (int k : root_idx) {
      std::vector<int> twice = sys.positive[k].c;
      for (int& x : twice) x *= 2;
      if (root_set.count(twice)) doubled = true;
    }

    ComponentSignature cs;
    cs.rank = (int)comp_nodes[c].size();
    cs.family = recognize_component(sys, comp_nodes[c], doubled);
    long long min_sq = 0;
    std::vector<long long> sq(root_idx.size());
    for (size_t t = 0; t < root_idx.size(); ++t) {
      sq[t] = sys.sq_length(sys.positive[root_idx[t]]);
      min_sq = (t == 0) ? sq[t] : std::min(min_sq, sq[t]);
    }
    for (size_t t = 0; t < root_idx.size(); ++t) {
      long long g = std::gcd(sq[t], min_sq);
      cs.len_mult.push_back({{sq[t] / g, min_sq / g}, rec.mult[root_idx[t]]});
    }
    std::sort(cs.len_mult.begin(), cs.len_mult.end());
    sig.components.push_back(std::move(cs));
  }
  std::sort(sig.components.begin(), sig.components.end());
  return sig;
}

}  // namespace

StructuralSignature signature_of(const SymmetricSpaceRecord& rec) {
  return signature_impl(rec, PhiSet::full(rec.system.rank));
}

StructuralSignature sub_signature(const SymmetricSpaceRecord& rec,
                                  const PhiSet& phi) {
  return signature_impl(rec, phi);
}

std::string StructuralSignature::str() const {
  std::string s;
  for (const auto& c : components) {
    if (!s.empty()) s += " x ";
    s += to_string(c.family) + std::to_string(c.rank);
    s += "{";
    bool first = true;
    for (const auto& [len, m] : c.len_mult) {
      if (!first) s += ",";
      first = false;
      s += std::to_string(len.first);
      if (len.second != 1) s += "/" + std::to_string(len.second);
      s += ":" + std::to_string(m);
    }
    s += "}";
  }
  return s.empty() ? "(empty)" : s;
}

// ------------------------------------------------------------- parsing

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos
                                                          : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

struct Stanza {
  std::vector<std::pair<std::string, std::string>> fields;
  int line = 0;

  const std::string* get(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return &v;
    return nullptr;
  }
};

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw DomainError("database line " + std::to_string(line) + ": " + msg);
}

ParamRange parse_param(const std::string& text, int line) {
  // "n:2..64"
  auto colon = text.find(':');
  auto dots = text.find("..");
  if (colon == std::string::npos || dots == std::string::npos || dots < colon)
    parse_fail(line, "bad param syntax '" + text + "' (want var:lo..hi)");
  ParamRange pr;
  pr.var = text.substr(0, colon);
  pr.lo = std::stoll(text.substr(colon + 1, dots - colon - 1));
  pr.hi = std::stoll(text.substr(dots + 2));
  if (pr.var.empty() || pr.lo > pr.hi)
    parse_fail(line, "bad param range '" + text + "'");
  return pr;
}

}  // namespace

Database Database::parse(const std::string& text) {
  Database db;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }

  size_t i = 0;
  while (i < lines.size() && (lines[i].empty() || lines[i][0] == '#')) {
    if (lines[i].empty()) break;  // blank line ends the header block
    db.header_.push_back(lines[i]);
    ++i;
  }

  std::vector<Stanza> stanzas;
  Stanza cur;
  for (; i < lines.size(); ++i) {
    const std::string& ln = lines[i];
    if (ln.empty()) {
      if (!cur.fields.empty()) stanzas.push_back(std::move(cur));
      cur = Stanza{};
      continue;
    }
    if (ln[0] == '#') parse_fail((int)i + 1, "comments are only allowed in the header block");
    auto eq = ln.find('=');
    if (eq == std::string::npos) parse_fail((int)i + 1, "expected key=value");
    if (cur.fields.empty()) cur.line = (int)i + 1;
    cur.fields.push_back({ln.substr(0, eq), ln.substr(eq + 1)});
  }
  if (!cur.fields.empty()) stanzas.push_back(std::move(cur));

  for (const Stanza& st : stanzas) {
    SpaceTemplate t;
    static const std::set<std::string> known = {
        "name", "family", "rank", "mult", "mult_override",
        "dim_k0", "param", "notes"};
    for (const auto& [k, v] : st.fields)
      if (!known.count(k)) parse_fail(st.line, "unknown field '" + k + "'");
    const std::string* name = st.get("name");
    const std::string* family = st.get("family");
    const std::string* rank = st.get("rank");
    const std::string* mult = st.get("mult");
    const std::string* dim_k0 = st.get("dim_k0");
    if (!name || !family || !rank || !mult || !dim_k0)
      parse_fail(st.line, "stanza needs name, family, rank, mult, dim_k0");
    t.name = *name;
    auto fam = family_from_string(*family);
    if (!fam) parse_fail(st.line, "unknown family '" + *family + "'");
    t.family = *fam;
    t.rank = std::stoi(*rank);
    for (const std::string& m : split(*mult, ','))
      t.mult_classes.push_back(Expr(m));
    if (const std::string* ov = st.get("mult_override")) {
      for (const std::string& entry : split(*ov, ';')) {
        auto colon = entry.rfind(':');
        if (colon == std::string::npos)
          parse_fail(st.line, "bad mult_override entry '" + entry + "'");
        t.mult_overrides.push_back(
            {entry.substr(0, colon), Expr(entry.substr(colon + 1))});
      }
    }
    t.dim_k0 = Expr(*dim_k0);
    if (const std::string* p = st.get("param"))
      t.param = parse_param(*p, st.line);
    if (const std::string* n = st.get("notes")) t.notes = *n;

    bool needs_param = !t.dim_k0.is_constant();
    for (const auto& e : t.mult_classes) needs_param |= !e.is_constant();
    for (const auto& [_, e] : t.mult_overrides) needs_param |= !e.is_constant();
    needs_param |= t.name.find('{') != std::string::npos;
    if (needs_param && !t.param)
      parse_fail(st.line, "stanza '" + t.name + "' uses a parameter but has no param= field");
    db.templates_.push_back(std::move(t));
  }
  return db;
}

std::string Database::serialize() const {
  std::string out;
  for (const std::string& h : header_) out += h + "\n";
  for (const SpaceTemplate& t : templates_) {
    out += "\n";
    out += "name=" + t.name + "\n";
    out += "family=" + to_string(t.family) + "\n";
    out += "rank=" + std::to_string(t.rank) + "\n";
    std::string mult;
    for (const auto& e : t.mult_classes) {
      if (!mult.empty()) mult += ",";
      mult += e.src();
    }
    out += "mult=" + mult + "\n";
    if (!t.mult_overrides.empty()) {
      std::string ov;
      for (const auto& [root, e] : t.mult_overrides) {
        if (!ov.empty()) ov += ";";
        ov += root + ":" + e.src();
      }
      out += "mult_override=" + ov + "\n";
    }
    out += "dim_k0=" + t.dim_k0.src() + "\n";
    if (t.param)
      out += "param=" + t.param->var + ":" + std::to_string(t.param->lo) +
             ".." + std::to_string(t.param->hi) + "\n";
    if (!t.notes.empty()) out += "notes=" + t.notes + "\n";
  }
  return out;
}

std::string render_name(const std::string& template_name, long long n) {
  std::string out;
  size_t pos = 0;
  while (pos < template_name.size()) {
    if (template_name[pos] == '{') {
      auto close = template_name.find('}', pos);
      if (close == std::string::npos)
        throw DomainError("unbalanced '{' in name template " + template_name);
      Expr e(template_name.substr(pos + 1, close - pos - 1));
      out += std::to_string(e.eval(n));
      pos = close + 1;
    } else {
      out += template_name[pos++];
    }
  }
  return out;
}

SymmetricSpaceRecord Database::instantiate(const SpaceTemplate& t,
                                           std::optional<long long> n) const {
  if (t.parametric()) {
    if (!n)
      throw DomainError("space '" + t.name + "' is parametric in " +
                        t.param->var + " (" + std::to_string(t.param->lo) +
                        ".." + std::to_string(t.param->hi) +
                        "); pass a parameter value");
    if (*n < t.param->lo || *n > t.param->hi)
      throw DomainError("parameter " + std::to_string(*n) + " outside " +
                        t.param->var + ":" + std::to_string(t.param->lo) +
                        ".." + std::to_string(t.param->hi) + " for '" +
                        t.name + "'");
  } else if (n) {
    throw DomainError("space '" + t.name + "' takes no parameter");
  }
  long long nv = n.value_or(0);

  SymmetricSpaceRecord rec;
  rec.template_name = t.name;
  rec.param_value = n;
  rec.name = t.parametric() ? render_name(t.name, nv) : t.name;
  if (auto slash = rec.name.find('/'); slash != std::string::npos) {
    rec.group_name = rec.name.substr(0, slash);
    rec.isotropy_name = rec.name.substr(slash + 1);
  }
  rec.system = cached_system(t.family, t.rank);
  rec.dim_k0 = t.dim_k0.eval(nv);
  if (rec.dim_k0 < 0)
    throw DomainError("negative dim_k0 for '" + rec.name + "'");
  rec.notes = t.notes;

  // Length classes, longest first.
  std::set<int, std::greater<int>> classes;
  for (const auto& r : rec.system.positive) classes.insert(rec.system.sq_length(r));
  if (classes.size() != t.mult_classes.size())
    throw DomainError("'" + t.name + "': " + std::to_string(t.mult_classes.size()) +
                      " multiplicity classes given, system has " +
                      std::to_string(classes.size()) + " length classes");
  std::map<int, long long> class_mult;
  size_t ci = 0;
  for (int len : classes) class_mult[len] = t.mult_classes[ci++].eval(nv);

  rec.mult.resize(rec.system.positive.size());
  for (size_t k = 0; k < rec.system.positive.size(); ++k)
    rec.mult[k] = class_mult[rec.system.sq_length(rec.system.positive[k])];
  for (const auto& [root_text, e] : t.mult_overrides) {
    RootVector rv;
    for (const std::string& part : split(root_text, ','))
      rv.c.push_back(std::stoi(part));
    int idx = rec.system.index_of(rv);
    if (idx < 0)
      throw DomainError("'" + t.name + "': override root " + rv.str() +
                        " is not a positive root");
    rec.mult[idx] = e.eval(nv);
  }
  for (long long m : rec.mult)
    if (m < 1) throw DomainError("'" + rec.name + "': multiplicity below 1");
  return rec;
}

SymmetricSpaceRecord Database::lookup(const std::string& name,
                                      std::optional<long long> param) const {
  for (const SpaceTemplate& t : templates_)
    if (t.name == name) return instantiate(t, param);
  // Rendered instance names, e.g. "RH5".
  for (const SpaceTemplate& t : templates_) {
    if (!t.parametric()) continue;
    for (long long n = t.param->lo; n <= t.param->hi; ++n) {
      if (render_name(t.name, n) == name) {
        if (param && *param != n)
          throw DomainError("name '" + name + "' conflicts with parameter " +
                            std::to_string(*param));
        return instantiate(t, n);
      }
    }
  }
  std::string msg = "unknown space '" + name + "'";
  auto near = suggestions(name);
  if (!near.empty()) {
    msg += "; near matches:";
    for (const auto& s : near) msg += " " + s;
  }
  throw DomainError(msg);
}

std::vector<std::string> Database::match_signature(
    const StructuralSignature& sig) const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  // Database records are irreducible; reducible signatures match nothing.
  if (sig.components.size() != 1) return out;
  for (const SpaceTemplate& t : templates_) {
    if (t.family != sig.components[0].family || t.rank != sig.components[0].rank)
      continue;
    if (!t.parametric()) {
      SymmetricSpaceRecord rec = instantiate(t, std::nullopt);
      if (signature_of(rec) == sig && seen.insert(rec.name).second)
        out.push_back(rec.name);
      continue;
    }
    for (long long n = t.param->lo; n <= t.param->hi; ++n) {
      SymmetricSpaceRecord rec;
      try {
        rec = instantiate(t, n);
      } catch (const DomainError&) {
        continue;  // degenerate instance (e.g. multiplicity 0)
      }
      if (signature_of(rec) == sig && seen.insert(rec.name).second)
        out.push_back(rec.name);
    }
  }
  return out;
}

std::vector<std::string> Database::list_names() const {
  std::vector<std::string> out;
  for (const auto& t : templates_) out.push_back(t.name);
  return out;
}

namespace {

int edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::vector<int>> dp(a.size() + 1, std::vector<int>(b.size() + 1));
  for (size_t i = 0; i <= a.size(); ++i) dp[i][0] = (int)i;
  for (size_t j = 0; j <= b.size(); ++j) dp[0][j] = (int)j;
  for (size_t i = 1; i <= a.size(); ++i)
    for (size_t j = 1; j <= b.size(); ++j) {
      int sub = std::tolower((unsigned char)a[i - 1]) ==
                        std::tolower((unsigned char)b[j - 1])
                    ? 0
                    : 1;
      dp[i][j] = std::min({dp[i - 1][j] + 1, dp[i][j - 1] + 1,
                           dp[i - 1][j - 1] + sub});
    }
  return dp[a.size()][b.size()];
}

}  // namespace

std::vector<std::string> Database::suggestions(const std::string& name) const {
  std::vector<std::pair<int, std::string>> scored;
  auto consider = [&](const std::string& cand) {
    int d = edit_distance(name, cand);
    if (d <= std::max<int>(3, (int)name.size() / 3))
      scored.push_back({d, cand});
  };
  for (const SpaceTemplate& t : templates_) {
    consider(t.name);
    if (t.parametric())
      for (long long n = t.param->lo; n <= std::min(t.param->hi, t.param->lo + 15); ++n)
        consider(render_name(t.name, n));
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (const auto& [d, s] : scored) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    if (out.size() == 3) break;
  }
  return out;
}

std::vector<std::string> Database::validate() const {
  std::vector<std::string> problems;
  std::set<std::string> names;
  for (const SpaceTemplate& t : templates_) {
    if (!names.insert(t.name).second)
      problems.push_back("duplicate name '" + t.name + "'");
    std::vector<long long> samples;
    if (t.parametric()) {
      samples.push_back(t.param->lo);
      samples.push_back(t.param->hi);
      if (t.param->hi > t.param->lo) samples.push_back(t.param->lo + 1);
    } else {
      samples.push_back(0);
    }
    for (long long n : samples) {
      try {
        SymmetricSpaceRecord rec =
            instantiate(t, t.parametric() ? std::optional<long long>(n)
                                          : std::nullopt);
        if (dim_space(rec) <= 0)
          problems.push_back("'" + rec.name + "': nonpositive dimension");
      } catch (const DomainError& e) {
        // Degenerate low end of a parametric range is tolerated only if
        // some instance works; report otherwise.
        if (!t.parametric() || n != t.param->lo)
          problems.push_back(std::string(e.what()));
      }
    }
  }
  return problems;
}

// ------------------------------------------------------- bundled data

namespace embedded {
extern const char* spaces_db;
}

const std::string& builtin_database_text() {
  static const std::string text = embedded::spaces_db;
  return text;
}

const Database& builtin_database() {
  static const Database db = Database::parse(builtin_database_text());
  return db;
}

}  // namespace coh1
