#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace fct {

// Every count in this library is an exact signed integer of unbounded size.
using BigInt = boost::multiprecision::cpp_int;

// Quotient a/b for a division that must leave no remainder. All divisions in
// this library are provably exact, so a nonzero remainder (or zero divisor)
// is an internal error, never bad input.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) {
    throw std::logic_error("exact_div: zero divisor");
  }
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(a, b, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("exact_div: inexact division " + a.str() + " / " +
                           b.str());
  }
  return quotient;
}

}  // namespace fct
