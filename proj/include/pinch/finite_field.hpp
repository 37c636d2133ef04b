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

#ifndef PINCH_FINITE_FIELD_HPP
#define PINCH_FINITE_FIELD_HPP

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "pinch/error.hpp"

namespace pinch {

class GaloisField;

// An element of a finite field F_{p^n}, stored as its packed coordinate
// vector in the polynomial basis (base-p digits, constant term lowest).
//
// An element without a field is an integer literal. Literals exist so that
// Eigen can build Scalar(0) and Scalar(1); they take on the field of whatever
// they are combined with.
class Fq {
 public:
  Fq() = default;
  explicit Fq(int literal) : v_(static_cast<std::uint32_t>(literal)) {}
  Fq(const GaloisField& field, std::uint32_t packed) : v_(packed), f_(&field) {}

  const GaloisField* field() const { return f_; }
  bool is_literal() const { return f_ == nullptr; }
  int literal() const { return static_cast<int>(v_); }
  std::uint32_t packed() const;

  Fq& operator+=(const Fq& o);
  Fq& operator-=(const Fq& o);
  Fq& operator*=(const Fq& o);
  Fq& operator/=(const Fq& o);

  friend Fq operator+(Fq a, const Fq& b) { return a += b; }
  friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
  friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
  friend Fq operator/(Fq a, const Fq& b) { return a /= b; }
  Fq operator-() const;

  friend bool operator==(const Fq& a, const Fq& b);
  // Total order by packed value; 0 < 1 < ... < p-1 on the prime field.
  friend std::strong_ordering operator<=>(const Fq& a, const Fq& b);

 private:
  friend class GaloisField;
  std::uint32_t v_ = 0;
  const GaloisField* f_ = nullptr;
};

bool is_zero(const Fq& x);
Fq inverse(const Fq& x);
Fq pow(const Fq& x, std::uint64_t e);
// x^{p^t}; negative t applies the inverse Frobenius automorphism.
Fq frobenius(const Fq& x, int t);
std::string to_string(const Fq& x);
inline std::ostream& operator<<(std::ostream& os, const Fq& x) { return os << to_string(x); }
// Field-bound 0 and 1 matching the field of sample (literals if unbound).
inline Fq zero_like(const Fq& sample) { return Fq(sample.field() ? Fq(*sample.field(), 0) : Fq(0)); }
inline Fq one_like(const Fq& sample) { return Fq(sample.field() ? Fq(*sample.field(), 1) : Fq(1)); }

// Immutable descriptor of F_{p^n} with arithmetic tables.
//
// Fields are interned: make() returns a reference that stays valid for the
// life of the process, so elements can hold a plain pointer to their field.
class GaloisField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  // modulus: coefficients low degree first, degree n (monic after scaling).
  // When omitted and n > 1 the built-in Conway table is consulted.
  static const GaloisField& make(unsigned p, unsigned n = 1,
                                 std::optional<std::vector<unsigned>> modulus = std::nullopt);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint32_t order() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  bool is_prime_field() const { return n_ == 1; }

  Fq zero() const { return Fq(*this, 0); }
  Fq one() const { return Fq(*this, 1); }
  // The class of u in F_p[u]/(modulus).
  Fq u() const;
  Fq from_int(long long v) const;
  Fq from_coords(const std::vector<long long>& coords) const;
  Fq element(std::uint32_t packed) const { return Fq(*this, packed); }
  std::vector<Fq> elements() const;
  std::vector<unsigned> coords(std::uint32_t packed) const;
  Fq bind(const Fq& x) const;
  template <class Rng>
  Fq random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> d(0, q_ - 1);
    return Fq(*this, d(rng));
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (n_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    return digitwise(a, b, false);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    if (n_ == 1) return (a + p_ - b) % p_;
    if (p_ == 2) return a ^ b;
    return digitwise(a, b, true);
  }
  std::uint32_t neg(std::uint32_t a) const { return sub(0, a); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t frob(std::uint32_t a, int t) const;

  std::string format(std::uint32_t packed) const;

  GaloisField(const GaloisField&) = delete;
  GaloisField& operator=(const GaloisField&) = delete;

 private:
  GaloisField(unsigned p, unsigned n, std::vector<unsigned> modulus);
  std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, bool subtract) const;
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

  unsigned p_;
  unsigned n_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

bool is_prime(unsigned p);
// Brute-force irreducibility over F_p (trial division by monic polynomials
// of degree <= n/2). Coefficients low degree first.
bool is_irreducible(unsigned p, const std::vector<unsigned>& poly);
// Built-in Conway polynomial for p in {2,3,5,7}, n <= 4.
std::optional<std::vector<unsigned>> conway_polynomial(unsigned p, unsigned n);

// Field embedding F_{p^n} -> F_{p^{nm}} fixed by sending u to the smallest
// root (by packed value) of the source modulus in the target.
class FieldEmbedding {
 public:
  FieldEmbedding(const GaloisField& from, const GaloisField& to);
  Fq operator()(const Fq& x) const;
  const GaloisField& target() const { return *to_; }

 private:
  const GaloisField* from_;
  const GaloisField* to_;
  std::vector<std::uint32_t> image_;
};

using FqMatrix = Eigen::Matrix<Fq, Eigen::Dynamic, Eigen::Dynamic>;
using FqVector = Eigen::Matrix<Fq, Eigen::Dynamic, 1>;

FqMatrix zero_matrix(const GaloisField& f, Eigen::Index rows, Eigen::Index cols);
FqVector zero_vector(const GaloisField& f, Eigen::Index size);
FqMatrix identity_matrix(const GaloisField& f, Eigen::Index n);
// Replaces literal entries by elements of f.
FqMatrix bind(const GaloisField& f, const FqMatrix& m);
FqMatrix frobenius(const FqMatrix& m, int t);
FqMatrix embed(const FieldEmbedding& e, const FqMatrix& m);
bool is_zero(const FqMatrix& m);
std::string to_string(const FqMatrix& m);

}  // namespace pinch

namespace Eigen {

template <>
struct NumTraits<pinch::Fq> : GenericNumTraits<pinch::Fq> {
  using Real = pinch::Fq;
  using NonInteger = pinch::Fq;
  using Nested = pinch::Fq;
  using Literal = pinch::Fq;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // PINCH_FINITE_FIELD_HPP
