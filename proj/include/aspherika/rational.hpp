#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "aspherika/errors.hpp"

namespace aspherika {

using Int = boost::multiprecision::cpp_int;

// Exact rational, always stored normalized: gcd(num, den) == 1 and den > 0.
// boost::rational has awkward corner cases around assignment from raw pairs,
// so this is a thin ordered field over cpp_int instead.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  Int const& num() const { return num_; }
  Int const& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(Rational const& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(Rational const& o) { return *this += -o; }
  Rational& operator*=(Rational const& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(Rational const& o) {
    if (o.num_ == 0) throw Error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, Rational const& b) { return a += b; }
  friend Rational operator-(Rational a, Rational const& b) { return a -= b; }
  friend Rational operator*(Rational a, Rational const& b) { return a *= b; }
  friend Rational operator/(Rational a, Rational const& b) { return a /= b; }

  friend bool operator==(Rational const& a, Rational const& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(Rational const& a, Rational const& b) { return !(a == b); }
  friend bool operator<(Rational const& a, Rational const& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(Rational const& a, Rational const& b) { return b < a; }
  friend bool operator<=(Rational const& a, Rational const& b) { return !(b < a); }
  friend bool operator>=(Rational const& a, Rational const& b) { return !(a < b); }

  // "p" when integral, "p/q" otherwise.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  // Accepts "p" or "p/q" with optional leading minus on p.
  static Rational parse(std::string const& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(Int(text));
      return Rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (std::exception const&) {
      throw Error("bad rational literal: " + text);
    }
  }

 private:
  void normalize() {
    if (den_ == 0) throw Error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_;
  Int den_;
};

}  // namespace aspherika
