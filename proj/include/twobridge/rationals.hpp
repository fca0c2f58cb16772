#pragma once

#include "laurent.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace twobridge {

// floor(a / b) for b != 0
inline Int floor_div(const Int &a, const Int &b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_pos(const Int &a, const Int &m) {
  Int r = a % m;
  if (r < 0) r += (m < 0 ? Int(-m) : m);
  return r;
}

// Reduced p/q with q >= 0; infinity is 1/0.
struct Fraction {
  Int p = 0, q = 1;

  Fraction() = default;
  Fraction(Int num, Int den) : p(std::move(num)), q(std::move(den)) {
    if (p == 0 && q == 0) throw domain_error("0/0 is not a fraction");
    Int g = boost::multiprecision::gcd(p, q);
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
      p = -p;
      q = -q;
    }
  }
  Fraction(long long v) : p(v), q(1) {}

  static Fraction infinity() { return Fraction(1, 0); }
  bool is_infinite() const { return q == 0; }

  friend bool operator==(const Fraction &a, const Fraction &b) { return a.p == b.p && a.q == b.q; }
  friend bool operator!=(const Fraction &a, const Fraction &b) { return !(a == b); }

  // projective: x + inf = inf
  friend Fraction operator+(const Fraction &a, const Fraction &b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Fraction(a.p * b.q + b.p * a.q, a.q * b.q);
  }
  Fraction reciprocal() const { return p == 0 ? infinity() : Fraction(q, p); }

  std::string str() const { return p.str() + "/" + q.str(); }
  friend std::ostream &operator<<(std::ostream &os, const Fraction &f) { return os << f.str(); }

  static Fraction parse(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Fraction(Int(trimmed(s)), 1);
    return Fraction(Int(trimmed(s.substr(0, slash))), Int(trimmed(s.substr(slash + 1))));
  }

private:
  static std::string trimmed(const std::string &s) {
    std::size_t b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw domain_error("empty number");
    std::string t = s.substr(b, e - b + 1);
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw domain_error("bad number '" + s + "'");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw domain_error("bad number '" + s + "'");
    if (t[0] == '+') t.erase(0, 1);
    return t;
  }
};

// [a1,...,an] = a1 + 1/(a2 + 1/(... + 1/an)) over Q u {inf}
template <class Seq>
Fraction eval_cf(const Seq &entries) {
  if (entries.empty()) throw domain_error("eval_cf: empty continued fraction");
  Int num = 1, den = 0;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    Int a(*it);
    Int n2 = a * num + den;
    den = num;
    num = n2;
  }
  return Fraction(num, den);
}

struct EvenCF {
  std::vector<Int> entries;
  Int q_hat; // even denominator actually expanded: eval_cf(entries) == p/q_hat
};

// Nearest-even expansion of p/q after moving q to the even representative with |q| < |p|.
inline EvenCF even_cf(const Fraction &f) {
  if (f.is_infinite()) throw domain_error("even_cf: infinite fraction");
  Int p = f.p, ap = p < 0 ? Int(-p) : p;
  if (ap % 2 == 0) throw domain_error("even_cf: even numerator " + f.str() + " is a link, not a knot");
  if (ap < 3) throw domain_error("even_cf: |p| < 3 gives the unknot");
  Int q = mod_pos(f.q, ap);
  if (q % 2 != 0) q -= ap;
  EvenCF out;
  out.q_hat = q;
  Int num = p, den = q;
  while (den != 0) {
    Int a = 2 * floor_div(num + den, 2 * den);
    out.entries.push_back(a);
    Int r = num - a * den;
    num = den;
    den = r;
  }
  if (out.entries.size() % 2) throw invariant_violation("even_cf: odd length expansion");
  for (auto &a : out.entries)
    if (a == 0 || a % 2) throw invariant_violation("even_cf: bad entry");
  return out;
}

// q' in [1, p-1] with q*q' = -1 mod p
inline Int neg_inverse_mod(const Int &p, const Int &q) {
  if (p < 2) throw domain_error("neg_inverse_mod: p < 2");
  Int a = mod_pos(q, p), m = p, x0 = 1, x1 = 0;
  while (m != 0) {
    Int t = a / m;
    Int r = a - t * m;
    a = m;
    m = r;
    Int x2 = x0 - t * x1;
    x0 = x1;
    x1 = x2;
  }
  if (a != 1) throw domain_error("neg_inverse_mod: gcd(p,q) != 1");
  return mod_pos(-x0, p);
}

inline Int inverse_mod(const Int &p, const Int &q) { return mod_pos(-neg_inverse_mod(p, q), p); }

// K(p,q) up to orientation: p > 0, q in [0, p); mirrored records a sign flip of the input.
struct KnotClass {
  Int p, q;
  bool mirrored = false;
};

inline KnotClass classify(const Fraction &f) {
  if (f.is_infinite()) throw domain_error("classify: infinite fraction");
  KnotClass k;
  k.mirrored = f.p < 0;
  k.p = k.mirrored ? Int(-f.p) : f.p;
  Int q = k.mirrored ? Int(-f.q) : f.q;
  k.q = k.p == 0 ? q : mod_pos(q, k.p);
  return k;
}

// Schubert: K(p,q) ~ K(p,q') iff q' = q^{+-1} mod p.
inline bool two_bridge_equiv(const Int &p1, const Int &q1, const Int &p2, const Int &q2) {
  KnotClass a = classify(Fraction(p1, q1)), b = classify(Fraction(p2, q2));
  if (a.p != b.p) return false;
  if (a.p <= 1) return true;
  if (a.q == b.q) return true;
  return mod_pos(a.q * b.q, a.p) == 1;
}

inline bool two_bridge_equiv(const Fraction &a, const Fraction &b) { return two_bridge_equiv(a.p, a.q, b.p, b.q); }

// Smallest even q representing K(p,q) up to mirror image.
inline Int canonical_even_q(const Int &p, const Int &q) {
  Int qi = inverse_mod(p, q);
  Int best = -1;
  for (const Int &c : {mod_pos(q, p), mod_pos(-q, p), qi, mod_pos(-qi, p)})
    if (c % 2 == 0 && (best < 0 || c < best)) best = c;
  return best;
}

template <class Seq>
std::string cf_str(const Seq &entries) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (auto &a : entries) {
    if (!first) os << ',';
    first = false;
    os << a;
  }
  os << ']';
  return os.str();
}

inline std::vector<Int> parse_cf(const std::string &s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (!t.empty() && t.front() == '[') t.erase(0, 1);
  if (!t.empty() && t.back() == ']') t.pop_back();
  if (t.empty()) throw domain_error("empty continued fraction");
  std::vector<Int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t c = t.find(',', pos);
    std::string tok = t.substr(pos, c == std::string::npos ? std::string::npos : c - pos);
    Fraction v = Fraction::parse(tok);
    if (v.q != 1) throw domain_error("continued fraction entry '" + tok + "' is not an integer");
    out.push_back(v.p);
    if (c == std::string::npos) break;
    pos = c + 1;
  }
  return out;
}

} // namespace twobridge
