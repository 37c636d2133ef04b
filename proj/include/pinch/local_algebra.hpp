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

#ifndef PINCH_LOCAL_ALGEBRA_HPP
#define PINCH_LOCAL_ALGEBRA_HPP

#include <string>
#include <vector>

#include "pinch/finite_field.hpp"
#include "pinch/semilinear.hpp"

namespace pinch {

enum class AlgebraKind { Point, TruncatedPoly, MonomialQuotient, Table };

/// User-facing description of one connected component D of the modulus,
/// A = O(D). Table indices are 1-based, matching the labels a1..an.
struct AlgebraSpec {
  struct Entry {
    int i = 0, j = 0, h = 0;
    std::vector<long long> coeff;  // coordinates over the prime field
  };

  AlgebraKind kind = AlgebraKind::Point;
  int order = 1;                          // TruncatedPoly: k[t]/(t^order)
  int vars = 0;                           // MonomialQuotient
  std::vector<std::vector<int>> ideal;    // MonomialQuotient generators
  int dim = 0;                            // Table
  std::vector<Entry> constants;           // Table

  static AlgebraSpec point() { return {}; }
  static AlgebraSpec truncated(int order);
  static AlgebraSpec monomial(int vars, std::vector<std::vector<int>> ideal);
  static AlgebraSpec table(int dim, std::vector<Entry> constants);
};

/// Element s*1 + sum_i m_i a_i of A = k1 + m.
struct AlgebraElement {
  Fq scalar;
  FqVector m;
};

/// A finite local commutative algebra given by a basis a_1..a_n of its
/// maximal ideal and the structure constants a_i a_j = sum_h c^h_ij a_h.
/// The constructor only checks shapes; build() and validate() check the
/// algebra axioms.
class LocalAlgebra {
 public:
  // left_mult[i](h, j) = c^h_ij, i.e. the matrix of multiplication by a_i.
  LocalAlgebra(const GaloisField& field, std::vector<std::string> labels,
               std::vector<FqMatrix> left_mult);

  const GaloisField& field() const { return *field_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const FqMatrix& left_mult(int i) const { return left_mult_[i]; }
  // 0-based indices.
  Fq constant(int i, int j, int h) const { return left_mult_[i](h, j); }

  FqVector product(const FqVector& x, const FqVector& y) const;  // m x m -> m
  AlgebraElement one() const;
  AlgebraElement zero() const;
  AlgebraElement basis(int i) const;
  AlgebraElement element(const Fq& scalar, const FqVector& m) const;

 private:
  const GaloisField* field_;
  std::vector<std::string> labels_;
  std::vector<FqMatrix> left_mult_;
};

/// Throws NotCofinite, NotLocal or InvalidConstants.
LocalAlgebra build(const AlgebraSpec& spec, const GaloisField& field);

AlgebraElement multiply(const LocalAlgebra& a, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement power(const LocalAlgebra& a, const AlgebraElement& x, std::uint64_t e);
bool operator==(const AlgebraElement& x, const AlgebraElement& y);
std::string to_string(const LocalAlgebra& a, const AlgebraElement& x);

/// a -> a^(p^i) on m, as a p^i-semilinear map.
SemilinearMap frobenius_power(const LocalAlgebra& a, int i);

/// Least h with Fr^h(m) = 0; 0 when m = 0.
int height(const LocalAlgebra& a);

struct Diagnostics {
  enum class Kind { Ok, CommutativityViolation, NotLocal, AssociativityViolation };
  Kind kind = Kind::Ok;
  std::vector<int> indices;  // 1-based
  std::string message;
  bool ok() const { return kind == Kind::Ok; }
};

/// Commutativity, then joint nilpotency of the multiplication operators,
/// then associativity; reports the first violation found.
Diagnostics validate(const LocalAlgebra& a);

/// Bases (as matrix columns) of m, m^2, ... up to and excluding the first
/// zero power. Assumes a valid algebra.
std::vector<FqMatrix> power_filtration(const LocalAlgebra& a);

/// levels[h] = least j >= 1 with the dual functional e_h vanishing on m^(j+1).
std::vector<int> filtration_levels(const LocalAlgebra& a);

/// Whether every power m^j is spanned by a subset of the basis.
bool is_filtration_adapted(const LocalAlgebra& a);

/// The same algebra in a basis adapted to m > m^2 > ...; returns a copy when
/// the basis already is adapted.
LocalAlgebra filtration_adapted(const LocalAlgebra& a);

/// Change of basis a'_i = sum_k p(k, i) a_k.
LocalAlgebra rebase(const LocalAlgebra& a, const FqMatrix& p);

/// Same constants read over an extension field.
LocalAlgebra extend_scalars(const LocalAlgebra& a, const FieldEmbedding& e);

}  // namespace pinch

#endif  // PINCH_LOCAL_ALGEBRA_HPP
