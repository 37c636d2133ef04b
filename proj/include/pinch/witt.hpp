/* Copyright 2026 The pinch Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef PINCH_WITT_HPP
#define PINCH_WITT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pinch/hopf.hpp"

namespace pinch {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial with integer coefficients in x_0..x_{l-1}, y_0..y_{l-1}.
/// Exponent vectors list the x exponents, then the y exponents.
class IntPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, BigInt>;

  explicit IntPoly(int length = 0) : length_(length) {}
  static IntPoly constant(int length, const BigInt& c);
  static IntPoly x(int length, int i);
  static IntPoly y(int length, int i);

  int length() const { return length_; }
  const Terms& terms() const { return terms_; }
  BigInt coeff(const Exponents& e) const;
  void add(const Exponents& e, const BigInt& c);

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

 private:
  int length_;
  Terms terms_;
};

IntPoly pow(const IntPoly& a, unsigned e);
/// a / d; throws IntegralityFailure unless d divides every coefficient.
IntPoly divide_exact(const IntPoly& a, const BigInt& d);
std::string to_string(const IntPoly& a);

/// w_n = sum_{i<=n} p^i x_i^(p^(n-i)).
IntPoly ghost_component(unsigned p, int n, int length, bool y_variables = false);

/// S_0..S_{l-1} with w_n(S) = w_n(x) + w_n(y), solved over the rationals
/// one component at a time and checked integral (IntegralityFailure).
/// Cached per (p, l).
const std::vector<IntPoly>& witt_addition_polys(unsigned p, int length);

struct WittVector {
  unsigned p = 0;
  std::vector<Fq> components;

  friend bool operator==(const WittVector& a, const WittVector& b) = default;
};

/// Componentwise S_j mod p. Throws ShapeMismatch on mismatched p or length.
WittVector witt_add(const WittVector& u, const WittVector& v, const GaloisField& field);
WittVector witt_add(const WittVector& u, const WittVector& v, const GaloisField& field,
                    const std::vector<IntPoly>& table);

/// Number of monomials x_0^a_0 ... x_{l-1}^a_{l-1} with every a_i < p^h,
/// i.e. p^(h l). Throws ShapeMismatch on overflow.
std::uint64_t frobenius_kernel_dim(unsigned p, int h, int length);

/// Substitution x_a -> f_a(E) into the abelianized NW presentation with l
/// generators, making the Witt coproduct x_a -> S_a(x(x)1; 1(x)x) agree with
/// the Hopf coproduct, found degree by degree by undetermined coefficients.
/// Each f_a is homogeneous of degree p^a with a nonzero coefficient on the
/// generator E_{p^a}. nullopt when no such substitution exists.
std::optional<std::vector<NcPoly>> match_witt_generators(int length, unsigned p,
                                                         const GaloisField& field, int degree_bound);
std::optional<std::vector<NcPoly>> match_witt_generators(int length, unsigned p,
                                                         const GaloisField& field, int degree_bound,
                                                         const std::vector<IntPoly>& table);

/// S_a evaluated at (f(x)1; 1(x)f) in the tensor square of h.
TensorSquare witt_coproduct(const HopfPresentation& h, const IntPoly& s,
                            const std::vector<NcPoly>& substitution);

}  // namespace pinch

#endif  // PINCH_WITT_HPP
