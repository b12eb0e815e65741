// Exact Gaussian-rational scalars: a + bi with arbitrary-precision rational
// a, b.  Complex conjugation is the real structure; every predicate here is
// exact (no rounding anywhere in the library).
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hodgekit {

using Rational = mpq_class;
using Integer = mpz_class;

// Error taxonomy, mirrored by the CLI exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed input or violated precondition.
struct InputError : Error {
  using Error::Error;
};
// Negative mathematical verdict signalled by throw (e.g. not an MHS).
struct VerdictError : Error {
  using Error::Error;
};
// Input outside the officially supported regime (e.g. nonabelian xi solve).
struct UnsupportedError : Error {
  using Error::Error;
};
// A verified postcondition failed; never silent wrong output.
struct InternalError : Error {
  using Error::Error;
};

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Smallest integer >= r.
inline Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  Scalar(const Rational& re) : re_(re), im_(0) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_integral() const { return im_ == 0 && is_integer(re_); }

  Scalar conj() const { return Scalar(re_, -im_); }

  // |re| + |im|; exact majorant of the complex modulus.
  Rational one_norm() const { return abs_of(re_) + abs_of(im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw InputError("Scalar: division by zero");
    Rational n = o.re_ * o.re_ + o.im_ * o.im_;
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const {
    Scalar one(1);
    return one / *this;
  }

 private:
  Rational re_, im_;
};

// --- scalar grammar ---------------------------------------------------------
// rational := '-'? digits ('/' digits)?
// scalar   := rational | rational ('+'|'-') rational 'i' | rational 'i' | 'i'
// plus the unit-imaginary conveniences '-i', '+i', 'a+i', 'a-i'.

namespace detail {

inline bool scan_rational(const std::string& s, std::size_t& pos, Rational& out,
                          bool sign_ok = true) {
  std::size_t p = pos;
  std::string tok;
  if (p < s.size() && (s[p] == '-' || s[p] == '+')) {
    if (!sign_ok) return false;
    if (s[p] == '-') tok += '-';
    ++p;
  }
  std::size_t d0 = p;
  while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) tok += s[p++];
  if (p == d0) return false;
  if (p < s.size() && s[p] == '/') {
    tok += '/';
    ++p;
    std::size_t d1 = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) tok += s[p++];
    if (p == d1) return false;
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), tok.c_str(), 10) != 0) return false;
  if (r.get_den() == 0) return false;
  r.canonicalize();
  out = std::move(r);
  pos = p;
  return true;
}

}  // namespace detail

inline Rational parse_rational(const std::string& text) {
  std::size_t a = text.find_first_not_of(" \t");
  std::size_t b = text.find_last_not_of(" \t");
  if (a == std::string::npos) throw InputError("empty rational literal");
  std::string s = text.substr(a, b - a + 1);
  std::size_t pos = 0;
  Rational r;
  if (!detail::scan_rational(s, pos, r) || pos != s.size())
    throw InputError("bad rational literal: '" + text + "'");
  return r;
}

inline Scalar parse_scalar(const std::string& text) {
  std::size_t a = text.find_first_not_of(" \t");
  std::size_t b = text.find_last_not_of(" \t");
  if (a == std::string::npos) throw InputError("empty scalar literal");
  std::string s = text.substr(a, b - a + 1);

  auto fail = [&]() -> Scalar {
    throw InputError("bad scalar literal: '" + text + "'");
  };

  // pure imaginary unit forms
  if (s == "i") return Scalar::i();
  if (s == "+i") return Scalar::i();
  if (s == "-i") return -Scalar::i();

  std::size_t pos = 0;
  Rational first;
  if (!detail::scan_rational(s, pos, first)) return fail();
  if (pos == s.size()) return Scalar(first);
  if (s[pos] == 'i') {
    if (pos + 1 != s.size()) return fail();
    return Scalar(Rational(0), first);
  }
  if (s[pos] != '+' && s[pos] != '-') return fail();
  bool neg = s[pos] == '-';
  ++pos;
  Rational second(1);
  if (pos < s.size() && s[pos] != 'i') {
    if (!detail::scan_rational(s, pos, second, /*sign_ok=*/false)) return fail();
  }
  if (pos >= s.size() || s[pos] != 'i' || pos + 1 != s.size()) return fail();
  if (neg) second = -second;
  return Scalar(first, second);
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const Scalar& x) {
  if (x.is_real()) return x.re().get_str();
  std::string im_part;
  if (x.im() == 1)
    im_part = "i";
  else if (x.im() == -1)
    im_part = "-i";
  else
    im_part = x.im().get_str() + "i";
  if (x.re() == 0) return im_part;
  if (x.im() > 0) return x.re().get_str() + "+" + im_part;
  return x.re().get_str() + im_part;  // im_part carries the sign
}

}  // namespace hodgekit
