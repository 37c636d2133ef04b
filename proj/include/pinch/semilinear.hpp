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

#ifndef PINCH_SEMILINEAR_HPP
#define PINCH_SEMILINEAR_HPP

#include <vector>

#include "pinch/finite_field.hpp"

namespace pinch {

/// A p^t-semilinear map v -> M * v^(p^t), where v^(q) raises every
/// coordinate to the q-th power. Frobenius on an algebra has twist +1,
/// Verschiebung on its dual has twist -1.
class SemilinearMap {
 public:
  SemilinearMap(const GaloisField& field, FqMatrix matrix, int twist);

  static SemilinearMap identity(const GaloisField& field, Eigen::Index n);

  const GaloisField& field() const { return *field_; }
  const FqMatrix& matrix() const { return matrix_; }
  int twist() const { return twist_; }
  Eigen::Index rows() const { return matrix_.rows(); }
  Eigen::Index cols() const { return matrix_.cols(); }

  FqVector operator()(const FqVector& v) const;

 private:
  const GaloisField* field_;
  FqMatrix matrix_;
  int twist_;
};

/// f o g, i.e. (M_f * M_g^(p^t_f), t_f + t_g).
SemilinearMap compose(const SemilinearMap& f, const SemilinearMap& g);

/// f o f o ... o f (k times); k = 0 gives the identity.
SemilinearMap power(const SemilinearMap& f, int k);

struct SemilinearKernel {
  Eigen::Index rank = 0;
  std::vector<FqVector> basis;
};

/// Kernel of f: solve M u = 0 exactly, then pull each basis vector back
/// through the coordinatewise inverse Frobenius p^{-t}.
SemilinearKernel kernel(const SemilinearMap& f);

bool is_zero(const SemilinearMap& f);
SemilinearMap embed(const FieldEmbedding& e, const SemilinearMap& f);

}  // namespace pinch

#endif  // PINCH_SEMILINEAR_HPP
