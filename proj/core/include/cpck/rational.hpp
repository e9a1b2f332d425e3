#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cpck/errors.hpp"

namespace cpck {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational numbers.  Thin value wrapper around cpp_rational: always in
// lowest terms, denominator > 0.  Division by zero throws instead of UB.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}                 // NOLINT: implicit by design
  Rat(long long n) : v_(n) {}           // NOLINT
  Rat(const BigInt& n) : v_(n) {}       // NOLINT
  Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    v_ = boost::multiprecision::cpp_rational(num, den);
  }

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_integer() const { return den() == 1; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  Rat operator-() const { return Rat(-v_); }
  Rat operator+(const Rat& o) const { return Rat(v_ + o.v_); }
  Rat operator-(const Rat& o) const { return Rat(v_ - o.v_); }
  Rat operator*(const Rat& o) const { return Rat(v_ * o.v_); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Rat(v_ / o.v_);
  }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  // Debug/round-trippable rendering: "7", "-7", "3/4", "-3/4".
  std::string to_string() const;

  std::size_t hash() const;

private:
  explicit Rat(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

  boost::multiprecision::cpp_rational v_;
};

// Four-function helper used when folding literal arithmetic; op is one of
// '+', '-', '*', '/'.  '/' throws DivisionByZero when b == 0.
Rat rat_arith(const Rat& a, const Rat& b, char op);

std::size_t hash_bigint(const BigInt& v);

}  // namespace cpck
