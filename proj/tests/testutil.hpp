#ifndef SEMABS_TESTS_TESTUTIL_HPP
#define SEMABS_TESTS_TESTUTIL_HPP

#include <string>

#include "semabs/presentation.hpp"

namespace semabs::testutil {

// Golden instances used across the suite. Kept as DSL text so the tests also
// exercise the parser on every construction.

inline Presentation free_comm(int k) {
  std::string text = "generators:";
  for (int i = 0; i < k; ++i) text += " g" + std::to_string(i + 1);
  return parse_presentation(text + "\nclass: cancellative\n");
}

// Z with steps +1, -1.
inline Presentation z_pair() {
  return parse_presentation(
      "semigroup z\ngenerators: p m\nrelations: p + m = 0\nclass: group\n");
}

// Z^2 with steps +-e1, +-e2: a = +e1, b = -e1, c = +e2, d = -e2.
inline Presentation z2() {
  return parse_presentation(
      "semigroup z2\ngenerators: a b c d\n"
      "relations: a + b = 0; c + d = 0\nclass: group\n");
}

inline Presentation z3() {
  return parse_presentation(
      "semigroup z3\ngenerators: a b c d e f\n"
      "relations: a + b = 0; c + d = 0; e + f = 0\nclass: group\n");
}

// Z generated by {0, +6, -1}: i = identity step, p = +6, m = -1.
inline Presentation z_steps() {
  return parse_presentation(
      "semigroup z_steps\ngenerators: i p m\n"
      "relations: i = 0; p + 6m = 0\nclass: group\n");
}

// The tripod: a + b = a + c makes b and c merge after any a.
inline Presentation tripod() {
  return parse_presentation(
      "semigroup tripod\ngenerators: a b c\nrelations: a + b = a + c\n");
}

// Noncancellative with a two-point absolute: a + b = 2c, a + c = 2b.
inline Presentation twopoint() {
  return parse_presentation(
      "semigroup twopoint\ngenerators: a b c\n"
      "relations: a + b = 2c; a + c = 2b\n");
}

// Z/5 with steps +1, -1.
inline Presentation z5() {
  return parse_presentation(
      "semigroup z5\ngenerators: p m\nrelations: p + m = 0; 5p = 0\nclass: group\n");
}

// Z x Z/2 on three generators, and its quotient Z by the order-2 subgroup.
inline Presentation zxz2() {
  return parse_presentation(
      "semigroup zxz2\ngenerators: a b c\n"
      "relations: a + b = 0; 2c = 0\nclass: group\n");
}

inline Presentation z3gen() {
  return parse_presentation(
      "semigroup z3gen\ngenerators: a b c\n"
      "relations: a + b = 0; c = 0\nclass: group\n");
}

}  // namespace semabs::testutil

#endif
