#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twobridge {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

// Sparse Laurent polynomial in one variable. Zero coefficients are never stored.
template <class Z>
class basic_laurent {
public:
  using coeff_type = Z;
  using map_type = std::map<long, Z>;

  basic_laurent() = default;
  basic_laurent(Z c) { set(0, std::move(c)); }
  basic_laurent(long c) { set(0, Z(c)); }
  basic_laurent(int c) { set(0, Z(c)); }

  static basic_laurent monomial(Z c, long e) {
    basic_laurent r;
    r.set(e, std::move(c));
    return r;
  }
  static basic_laurent var(long e = 1) { return monomial(Z(1), e); }

  const map_type &terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
  long max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

  Z coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Z(0) : it->second;
  }

  void set(long e, Z v) {
    if (v == 0)
      c_.erase(e);
    else
      c_[e] = std::move(v);
  }

  void add_term(long e, const Z &v) {
    if (v == 0) return;
    auto [it, fresh] = c_.try_emplace(e, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }

  basic_laurent &operator+=(const basic_laurent &o) {
    for (auto &[e, v] : o.c_) add_term(e, v);
    return *this;
  }
  basic_laurent &operator-=(const basic_laurent &o) {
    for (auto &[e, v] : o.c_) add_term(e, Z(-v));
    return *this;
  }
  basic_laurent &operator*=(const basic_laurent &o) { return *this = *this * o; }

  friend basic_laurent operator+(basic_laurent a, const basic_laurent &b) { return a += b; }
  friend basic_laurent operator-(basic_laurent a, const basic_laurent &b) { return a -= b; }
  friend basic_laurent operator-(const basic_laurent &a) {
    basic_laurent r;
    for (auto &[e, v] : a.c_) r.c_.emplace(e, -v);
    return r;
  }
  friend basic_laurent operator*(const basic_laurent &a, const basic_laurent &b) {
    basic_laurent r;
    for (auto &[ea, va] : a.c_)
      for (auto &[eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
    return r;
  }
  friend bool operator==(const basic_laurent &a, const basic_laurent &b) { return a.c_ == b.c_; }
  friend bool operator!=(const basic_laurent &a, const basic_laurent &b) { return !(a == b); }

  basic_laurent pow(unsigned k) const {
    basic_laurent r(Z(1)), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }

  // multiply by var^k
  basic_laurent shifted(long k) const {
    basic_laurent r;
    for (auto &[e, v] : c_) r.c_.emplace(e + k, v);
    return r;
  }

  // t -> t^-1
  basic_laurent inverted() const {
    basic_laurent r;
    for (auto &[e, v] : c_) r.c_.emplace(-e, v);
    return r;
  }

  Z at_one() const {
    Z s = 0;
    for (auto &[e, v] : c_) s += v;
    return s;
  }

  Rational eval(const Rational &x) const {
    if (x == 0 && !c_.empty() && min_exp() < 0)
      throw domain_error("evaluation at 0 with negative exponents");
    Rational s = 0;
    for (auto &[e, v] : c_) {
      Rational p = 1;
      Rational b = e < 0 ? Rational(1) / x : x;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) p *= b;
      s += Rational(v) * p;
    }
    return s;
  }

  std::string str(char var = 't') const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto &[e, v] : c_) {
      Z a = v < 0 ? Z(-v) : v;
      if (first)
        out += v < 0 ? "-" : "";
      else
        out += v < 0 ? " - " : " + ";
      first = false;
      if (e == 0) {
        out += a.str();
        continue;
      }
      if (a != 1) out += a.str() + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  // Accepts the output of str(): terms like 3, -t, 2*t^-3, joined by + or -.
  static basic_laurent parse(const std::string &s, char var = 't') {
    basic_laurent r;
    std::size_t i = 0, n = s.size();
    auto skip = [&] {
      while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto fail = [&](const char *what) {
      throw domain_error(std::string("polynomial parse error at ") + std::to_string(i) + ": " + what);
    };
    auto digits = [&] {
      std::size_t b = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return s.substr(b, i - b);
    };
    skip();
    if (i == n) fail("empty");
    bool first = true;
    while (true) {
      skip();
      if (i == n) break;
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      Z c(1);
      bool have_c = false;
      std::string d = digits();
      if (!d.empty()) {
        c = Z(d);
        have_c = true;
        skip();
        if (i < n && s[i] == '*') {
          ++i;
          skip();
          if (i == n || s[i] != var) fail("expected variable after *");
        }
      }
      long e = 0;
      if (i < n && s[i] == var) {
        ++i;
        e = 1;
        if (i < n && s[i] == '^') {
          ++i;
          int es = 1;
          if (i < n && (s[i] == '-' || s[i] == '+')) {
            es = s[i] == '-' ? -1 : 1;
            ++i;
          }
          std::string ed = digits();
          if (ed.empty()) fail("expected exponent");
          e = es * std::stol(ed);
        }
      } else if (!have_c) {
        fail("expected term");
      }
      r.add_term(e, sign < 0 ? Z(-c) : c);
    }
    return r;
  }

private:
  map_type c_;
};

using LaurentPoly = basic_laurent<Int>;

// Polynomial in z with non-negative exponents (Conway polynomials).
struct ZPoly : LaurentPoly {
  ZPoly() = default;
  explicit ZPoly(LaurentPoly p) : LaurentPoly(std::move(p)) {
    if (!is_zero() && min_exp() < 0) throw domain_error("ZPoly with negative exponent");
  }
  bool only_even() const {
    for (auto &[e, v] : terms())
      if (e % 2) return false;
    return true;
  }
  bool only_odd() const {
    for (auto &[e, v] : terms())
      if (e % 2 == 0) return false;
    return true;
  }
  std::string str() const { return LaurentPoly::str('z'); }
  static ZPoly parse(const std::string &s) { return ZPoly(LaurentPoly::parse(s, 'z')); }
};

inline bool is_symmetric(const LaurentPoly &f) { return f == f.inverted(); }

// Membership in Z<t>: f(t) = f(1/t) and f(1) = 0.
inline bool lp_is_eta_admissible(const LaurentPoly &f) { return is_symmetric(f) && f.at_one() == 0; }

// z^2 -> 2 - t - 1/t
inline LaurentPoly z_to_t(const ZPoly &p) {
  if (!p.only_even()) throw domain_error("z_to_t: odd power of z");
  const LaurentPoly w = LaurentPoly(2) - LaurentPoly::var(1) - LaurentPoly::var(-1);
  LaurentPoly r;
  for (auto &[e, v] : p.terms()) r += LaurentPoly(v) * w.pow(static_cast<unsigned>(e / 2));
  return r;
}

namespace detail {

// dense polynomial over Q, index = degree
using qpoly = std::vector<Rational>;

inline void trim(qpoly &a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline qpoly qmod(qpoly a, const qpoly &b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t sh = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= f * b[i];
    trim(a);
  }
  return a;
}

inline qpoly qdiv_exact(qpoly a, const qpoly &b) {
  trim(a);
  if (a.size() < b.size()) return {};
  qpoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t sh = a.size() - b.size();
    q[sh] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= f * b[i];
    trim(a);
  }
  if (!a.empty()) throw invariant_violation("inexact polynomial division");
  return q;
}

inline qpoly qgcd(qpoly a, qpoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    qpoly r = qmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto &x : a) x /= lc;
  }
  return a;
}

inline qpoly to_q(const LaurentPoly &p, long shift) {
  qpoly r(static_cast<std::size_t>(p.max_exp() - shift + 1));
  for (auto &[e, v] : p.terms()) r[static_cast<std::size_t>(e - shift)] = Rational(v);
  return r;
}

} // namespace detail

// Quotient of Laurent polynomials in canonical form: coprime, jointly primitive,
// positive leading coefficient on den, den centred so min+max exponent is 0 or 1.
class RationalFn {
public:
  RationalFn() : num_(), den_(1) {}
  RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const LaurentPoly &num() const { return num_; }
  const LaurentPoly &den() const { return den_; }

  Rational at_one() const {
    Int d = den_.at_one();
    if (d == 0) throw domain_error("denominator vanishes at t = 1");
    return Rational(num_.at_one()) / Rational(d);
  }

  friend bool operator==(const RationalFn &a, const RationalFn &b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RationalFn &a, const RationalFn &b) { return !(a == b); }

  std::string str() const {
    if (den_ == LaurentPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

private:
  void normalize() {
    if (den_.is_zero()) throw domain_error("rf_make: zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    long sn = num_.min_exp(), sd = den_.min_exp();
    detail::qpoly a = detail::to_q(num_, sn), b = detail::to_q(den_, sd);
    detail::qpoly g = detail::qgcd(a, b);
    a = detail::qdiv_exact(a, g);
    b = detail::qdiv_exact(b, g);
    // clear denominators, then remove integer content
    Int l = 1;
    for (auto *v : {&a, &b})
      for (auto &x : *v)
        if (x != 0) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    Int c = 0;
    auto rebuild = [&](const detail::qpoly &q, long shift) {
      LaurentPoly r;
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        Rational v = q[i] * Rational(l);
        Int iv = boost::multiprecision::numerator(v);
        c = boost::multiprecision::gcd(c, iv);
        r.set(shift + static_cast<long>(i), iv);
      }
      return r;
    };
    LaurentPoly n2 = rebuild(a, sn), d2 = rebuild(b, sd);
    if (d2.terms().rbegin()->second < 0) c = -c;
    LaurentPoly nn, dd;
    for (auto &[e, v] : n2.terms()) nn.set(e, v / c);
    for (auto &[e, v] : d2.terms()) dd.set(e, v / c);
    long mid = dd.min_exp() + dd.max_exp();
    long k = mid >= 0 ? mid / 2 : -((-mid + 1) / 2);
    num_ = nn.shifted(-k);
    den_ = dd.shifted(-k);
  }

  LaurentPoly num_, den_;
};

inline RationalFn rf_make(LaurentPoly num, LaurentPoly den) { return RationalFn(std::move(num), std::move(den)); }

} // namespace twobridge
