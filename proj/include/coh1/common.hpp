#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace coh1 {

/// Error in the mathematical domain (unknown space, invalid subset, ...).
/// CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input that never reached the domain layer (bad flags, syntax).
/// CLI maps these to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational number over int64. Values stay tiny (coordinates of
/// lines in a rank <= 8 flat), so no overflow guards beyond normalization.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(Rational a, Rational b) {
    if (b.is_zero()) throw DomainError("rational division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend auto operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

/// Subset of the simple roots {alpha_1, ..., alpha_r}, 1-based indices.
struct PhiSet {
  unsigned mask = 0;
  int rank = 0;

  static PhiSet empty(int rank) { return PhiSet{0u, rank}; }
  static PhiSet full(int rank) {
    return PhiSet{rank >= 32 ? ~0u : ((1u << rank) - 1u), rank};
  }
  static PhiSet of(std::initializer_list<int> idx, int rank) {
    PhiSet p{0u, rank};
    for (int i : idx) p.insert(i);
    return p;
  }

  void insert(int i) {
    check_index(i);
    mask |= 1u << (i - 1);
  }
  bool contains(int i) const {
    return i >= 1 && i <= rank && (mask & (1u << (i - 1)));
  }
  int size() const { return __builtin_popcount(mask); }
  bool is_empty() const { return mask == 0; }
  bool is_full() const { return mask == PhiSet::full(rank).mask; }
  bool subset_of(const PhiSet& o) const { return (mask & ~o.mask) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 1; i <= rank; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  /// "1,2" or "-" for the empty set.
  std::string str() const {
    if (mask == 0) return "-";
    std::string s;
    for (int i : indices()) {
      if (!s.empty()) s += ',';
      s += std::to_string(i);
    }
    return s;
  }

  /// Parses "1,2", "none", "-" or "" (the last three denote the empty set).
  static PhiSet parse(const std::string& text, int rank);

  friend bool operator==(const PhiSet&, const PhiSet&) = default;
  friend auto operator<=>(const PhiSet& a, const PhiSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.mask <=> b.mask;
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > rank)
      throw DomainError("simple-root index " + std::to_string(i) +
                        " out of range 1.." + std::to_string(rank));
  }
};

inline PhiSet PhiSet::parse(const std::string& text, int rank) {
  PhiSet p{0u, rank};
  if (text.empty() || text == "none" || text == "-") return p;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(',', pos);
    std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.empty()) throw UsageError("empty index in subset '" + text + "'");
    for (char c : tok)
      if (c < '0' || c > '9') throw UsageError("bad subset syntax '" + text + "'");
    int i = std::stoi(tok);
    if (i < 1 || i > rank)
      throw DomainError("simple-root index " + std::to_string(i) +
                        " out of range 1.." + std::to_string(rank));
    p.insert(i);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return p;
}

}  // namespace coh1
