#pragma once

#include "rationals.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twobridge {

// I1(alpha_1..alpha_n; c_1..c_n)
class I1Presentation {
public:
  I1Presentation(std::vector<long> alphas, std::vector<long> cs) : alpha_(std::move(alphas)), c_(std::move(cs)) {
    if (alpha_.empty()) throw domain_error("I1: empty presentation");
    if (alpha_.size() != c_.size()) throw domain_error("I1: alpha and c lengths differ");
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
      if (alpha_[i] == 0 || alpha_[i] % 2) throw domain_error("I1: alpha_" + std::to_string(i + 1) + " must be even and non-zero");
      if (c_[i] == 0) throw domain_error("I1: c_" + std::to_string(i + 1) + " must be non-zero");
    }
    long s = 0;
    for (long a : alpha_) {
      s += a / 2;
      sigma_.push_back(s);
    }
    b_ = 2 * s;
    for (long c : c_) delta_.push_back(static_cast<int>(((c % 2) + 2) % 2));
    eps_.assign(alpha_.size(), 1);
    int e = 1;
    for (std::size_t i = alpha_.size(); i-- > 0;) {
      if (delta_[i]) e = -e;
      eps_[i] = e;
    }
  }

  std::size_t n() const { return alpha_.size(); }
  const std::vector<long> &alphas() const { return alpha_; }
  const std::vector<long> &cs() const { return c_; }
  const std::vector<long> &sigmas() const { return sigma_; }
  long b() const { return b_; }
  const std::vector<int> &deltas() const { return delta_; }
  const std::vector<int> &eps() const { return eps_; }

  friend bool operator==(const I1Presentation &a, const I1Presentation &b) { return a.alpha_ == b.alpha_ && a.c_ == b.c_; }
  friend bool operator!=(const I1Presentation &a, const I1Presentation &b) { return !(a == b); }

  // "a1,...;c1,..." (what parse_i1 accepts without the I1( ) wrapper)
  std::string spec() const {
    std::string s;
    for (std::size_t i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(alpha_[i]);
    s += ";";
    for (std::size_t i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
    return s;
  }
  std::string str() const { return "I1(" + spec() + ")"; }
  friend std::ostream &operator<<(std::ostream &os, const I1Presentation &p) { return os << p.str(); }

private:
  std::vector<long> alpha_, c_, sigma_;
  long b_ = 0;
  std::vector<int> delta_, eps_;
};

inline I1Presentation parse_i1(const std::string &text) {
  std::string s = text;
  std::size_t off = 0;
  {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) throw domain_error("parse_i1: empty input");
    if (s.compare(b, 3, "I1(") == 0) {
      std::size_t e = s.find_last_not_of(" \t");
      if (s[e] != ')') throw domain_error("parse_i1: missing ')' at " + std::to_string(e));
      off = b + 3;
      s = s.substr(b + 3, e - b - 3);
    }
  }
  std::size_t semi = s.find(';');
  if (semi == std::string::npos) throw domain_error("parse_i1: expected ';' separating alphas and cs");
  auto list = [&](std::size_t from, std::size_t to, const char *what) {
    std::vector<long> out;
    std::size_t i = from;
    while (true) {
      std::size_t c = s.find(',', i);
      if (c == std::string::npos || c > to) c = to;
      std::string tok = s.substr(i, c - i);
      std::size_t b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
      bool ok = b != std::string::npos;
      long v = 0;
      if (ok) {
        tok = tok.substr(b, e - b + 1);
        std::size_t used = 0;
        try {
          v = std::stol(tok, &used);
        } catch (const std::exception &) {
          ok = false;
        }
        ok = ok && used == tok.size();
      }
      if (!ok) throw domain_error(std::string("parse_i1: bad ") + what + " entry at position " + std::to_string(off + i));
      out.push_back(v);
      if (c == to) break;
      i = c + 1;
    }
    return out;
  };
  std::vector<long> a = list(0, semi, "alpha"), c = list(semi + 1, s.size(), "c");
  if (a.size() != c.size())
    throw domain_error("parse_i1: " + std::to_string(a.size()) + " alphas but " + std::to_string(c.size()) + " cs");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == 0 || a[i] % 2) throw domain_error("parse_i1: alpha_" + std::to_string(i + 1) + " = " + std::to_string(a[i]) + " must be even and non-zero");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] == 0) throw domain_error("parse_i1: c_" + std::to_string(i + 1) + " must be non-zero");
  return I1Presentation(a, c);
}

// [alpha_1, -2c_1, ..., alpha_n, -2c_n]
inline std::vector<Int> knot_entries(const I1Presentation &p) {
  std::vector<Int> e;
  for (std::size_t i = 0; i < p.n(); ++i) {
    e.emplace_back(p.alphas()[i]);
    e.emplace_back(-2 * p.cs()[i]);
  }
  return e;
}

// knot entries followed by -b
inline std::vector<Int> butterfly_entries(const I1Presentation &p) {
  auto e = knot_entries(p);
  e.emplace_back(-p.b());
  return e;
}

inline Fraction knot_fraction(const I1Presentation &p) { return eval_cf(knot_entries(p)); }
inline Fraction butterfly_fraction(const I1Presentation &p) { return eval_cf(butterfly_entries(p)); }

// alpha = odd-position entries, c = -(even-position entries)/2
inline I1Presentation presentation_from_even_cf(const std::vector<Int> &a) {
  if (a.empty() || a.size() % 2) throw domain_error("even continued fraction must have even length");
  std::vector<long> al, cs;
  for (std::size_t i = 0; i < a.size(); i += 2) {
    if (a[i] % 2 || a[i + 1] % 2 || a[i] == 0 || a[i + 1] == 0) throw domain_error("continued fraction entries must be even and non-zero");
    if (boost::multiprecision::abs(a[i]) > 1000000000 || boost::multiprecision::abs(a[i + 1]) > 1000000000)
      throw domain_error("continued fraction entry out of range");
    al.push_back(a[i].convert_to<long>());
    cs.push_back(-(a[i + 1] / 2).convert_to<long>());
  }
  return I1Presentation(al, cs);
}

struct InversionPair {
  I1Presentation inv1;
  std::optional<I1Presentation> inv2; // absent when the knot has one strong inversion
  Fraction source;
  EvenCF cf;
};

inline InversionPair inversions_from_cf(const Fraction &source, const EvenCF &cf) {
  std::vector<Int> rev;
  for (auto it = cf.entries.rbegin(); it != cf.entries.rend(); ++it) rev.push_back(-*it);
  I1Presentation a = presentation_from_even_cf(cf.entries), b = presentation_from_even_cf(rev);
  InversionPair out{a, std::nullopt, source, cf};
  if (b != a) out.inv2 = b;
  for (const I1Presentation *p : {&out.inv1, out.inv2 ? &*out.inv2 : nullptr})
    if (p && !two_bridge_equiv(knot_fraction(*p), source))
      throw invariant_violation("inversion " + p->str() + " does not present " + source.str());
  return out;
}

inline InversionPair inversions_from_fraction(const Int &p, const Int &q) {
  if (p < 3 || p % 2 == 0) throw domain_error("inversions_from_fraction: p must be odd and >= 3");
  if (boost::multiprecision::gcd(p, q) != 1) throw domain_error("inversions_from_fraction: gcd(p,q) != 1");
  Fraction f(p, q);
  return inversions_from_cf(f, even_cf(f));
}

} // namespace twobridge
