#pragma once

#include <cstdint>
#include <stdexcept>

namespace ualg {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

template <class T>
T checked_add(T a, T b) {
  T out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

template <class T>
T checked_sub(T a, T b) {
  T out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

template <class T>
T checked_mul(T a, T b) {
  T out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

}  // namespace ualg
