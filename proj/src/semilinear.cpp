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

#include "pinch/semilinear.hpp"

#include "pinch/linalg.hpp"

namespace pinch {

SemilinearMap::SemilinearMap(const GaloisField& field, FqMatrix matrix, int twist)
    : field_(&field), matrix_(bind(field, matrix)), twist_(twist) {}

SemilinearMap SemilinearMap::identity(const GaloisField& field, Eigen::Index n) {
  return SemilinearMap(field, identity_matrix(field, n), 0);
}

FqVector SemilinearMap::operator()(const FqVector& v) const {
  if (v.size() != cols()) throw Error(ErrorCode::ShapeMismatch, "vector length does not match map");
  if (rows() == 0) return FqVector(0);
  if (cols() == 0) return zero_vector(*field_, rows());
  FqVector tw = v.unaryExpr([this](const Fq& x) { return frobenius(field_->bind(x), twist_); });
  return matrix_ * tw;
}

SemilinearMap compose(const SemilinearMap& f, const SemilinearMap& g) {
  if (&f.field() != &g.field()) throw Error(ErrorCode::FieldMismatch, "compose across fields");
  if (f.cols() != g.rows())
    throw Error(ErrorCode::ShapeMismatch, "cannot compose " + std::to_string(f.rows()) + "x" +
                                              std::to_string(f.cols()) + " after " +
                                              std::to_string(g.rows()) + "x" +
                                              std::to_string(g.cols()));
  FqMatrix m = zero_matrix(f.field(), f.rows(), g.cols());
  if (f.cols() > 0) m = f.matrix() * frobenius(g.matrix(), f.twist());
  return SemilinearMap(f.field(), m, f.twist() + g.twist());
}

SemilinearMap power(const SemilinearMap& f, int k) {
  if (f.rows() != f.cols()) throw Error(ErrorCode::ShapeMismatch, "power of a non-square map");
  SemilinearMap out = SemilinearMap::identity(f.field(), f.rows());
  for (int i = 0; i < k; ++i) out = compose(f, out);
  return out;
}

SemilinearKernel kernel(const SemilinearMap& f) {
  SemilinearKernel out;
  const GaloisField& field = f.field();
  if (f.rows() == 0) {
    for (Eigen::Index j = 0; j < f.cols(); ++j) {
      FqVector e = zero_vector(field, f.cols());
      e(j) = field.one();
      out.basis.push_back(e);
    }
    return out;
  }
  FqMatrix k = bind(field, pinch::kernel(f.matrix()));
  out.rank = f.cols() - k.cols();
  for (Eigen::Index j = 0; j < k.cols(); ++j) out.basis.push_back(frobenius(k.col(j), -f.twist()));
  return out;
}

bool is_zero(const SemilinearMap& f) { return is_zero(f.matrix()); }

SemilinearMap embed(const FieldEmbedding& e, const SemilinearMap& f) {
  return SemilinearMap(e.target(), embed(e, f.matrix()), f.twist());
}

}  // namespace pinch
