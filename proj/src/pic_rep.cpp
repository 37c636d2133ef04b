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

#include "pinch/pic_rep.hpp"

#include <algorithm>
#include <map>

#include "pinch/linalg.hpp"

namespace pinch {

namespace {

bool same_algebra(const LocalAlgebra& a, const LocalAlgebra& b) {
  if (&a == &b) return true;
  if (&a.field() != &b.field() || a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (a.left_mult(i) != b.left_mult(i)) return false;
  return true;
}

}  // namespace

SAObject make_sa_object(std::shared_ptr<const LocalAlgebra> algebra, int dim,
                        std::vector<FqMatrix> components) {
  if (dim < 0 || static_cast<int>(components.size()) != algebra->dim())
    throw Error(ErrorCode::ShapeMismatch, "need one matrix per basis element of m");
  for (auto& c : components) {
    if (c.rows() != dim || c.cols() != dim)
      throw Error(ErrorCode::ShapeMismatch, "component is not dim x dim");
    c = bind(algebra->field(), c);
  }
  return {std::move(algebra), dim, std::move(components)};
}

SAObject unit_object(std::shared_ptr<const LocalAlgebra> algebra) {
  const auto& f = algebra->field();
  std::vector<FqMatrix> comps(algebra->dim(), zero_matrix(f, 1, 1));
  return make_sa_object(std::move(algebra), 1, std::move(comps));
}

FqMatrix kronecker(const FqMatrix& a, const FqMatrix& b) {
  const Fq zero = a.size() ? zero_like(a(0, 0)) : (b.size() ? zero_like(b(0, 0)) : Fq(0));
  FqMatrix out = FqMatrix::Constant(a.rows() * b.rows(), a.cols() * b.cols(), zero);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  return out;
}

SAObject tensor_sa(const SAObject& x, const SAObject& y) {
  if (!same_algebra(*x.algebra, *y.algebra))
    throw Error(ErrorCode::AlgebraMismatch, "tensor of objects over different algebras");
  const LocalAlgebra& a = *x.algebra;
  const auto& f = a.field();
  const FqMatrix id_x = identity_matrix(f, x.dim), id_y = identity_matrix(f, y.dim);
  std::vector<FqMatrix> comps;
  for (int h = 0; h < a.dim(); ++h) {
    FqMatrix c = kronecker(id_x, y.components[h]) + kronecker(x.components[h], id_y);
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        if (!is_zero(a.constant(i, j, h)))
          c += a.constant(i, j, h) * kronecker(x.components[i], y.components[j]);
    comps.push_back(std::move(c));
  }
  return {x.algebra, x.dim * y.dim, std::move(comps)};
}

FqMatrix HopfModule::act(const Word& w) const {
  FqMatrix out = identity_matrix(*field, dim);
  for (Letter l : w) out = out * generators.at(l);
  return out;
}

FqMatrix HopfModule::act(const NcPoly& x) const {
  FqMatrix out = zero_matrix(*field, dim, dim);
  for (const auto& [w, c] : x.terms()) out += c * act(w);
  return out;
}

HopfModule omega(const SAObject& x) { return {&x.algebra->field(), x.dim, x.components}; }

std::optional<FqMatrix> are_isomorphic(const SAObject& x, const SAObject& y, std::size_t budget) {
  if (!same_algebra(*x.algebra, *y.algebra))
    throw Error(ErrorCode::AlgebraMismatch, "objects over different algebras");
  if (x.dim != y.dim) return std::nullopt;
  const auto& f = x.algebra->field();
  const int r = x.dim;
  if (r == 0) return FqMatrix(0, 0);
  // Unknown f(k, l) sits at index k*r + l; equation (f phi_i - psi_i f)(k, l) = 0.
  const int n = x.algebra->dim();
  FqMatrix system = zero_matrix(f, std::max(1, n) * r * r, r * r);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l) {
        const int row = (i * r + k) * r + l;
        for (int s = 0; s < r; ++s) {
          system(row, k * r + s) += x.components[i](s, l);
          system(row, s * r + l) -= y.components[i](k, s);
        }
      }
  const FqMatrix basis = kernel(system);
  const auto d = basis.cols();
  auto assemble = [&](const std::vector<Fq>& coeffs) {
    FqMatrix cand = zero_matrix(f, r, r);
    for (Eigen::Index c = 0; c < d; ++c)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) cand(k, l) += coeffs[c] * basis(k * r + l, c);
    return cand;
  };
  std::size_t tried = 0;
  auto probe = [&](const std::vector<Fq>& coeffs) -> std::optional<FqMatrix> {
    if (tried++ >= budget)
      throw Error(ErrorCode::SearchBudgetExceeded, "intertwiner space too large to enumerate");
    FqMatrix cand = assemble(coeffs);
    if (rank(cand) == r) return cand;
    return std::nullopt;
  };
  // Cheap probes first: the identity when the components agree, then each
  // basis vector of the intertwiner space alone.
  if (x.components == y.components) return identity_matrix(f, r);
  std::vector<Fq> coeffs(d, f.zero());
  for (Eigen::Index c = 0; c < d; ++c) {
    std::fill(coeffs.begin(), coeffs.end(), f.zero());
    coeffs[c] = f.one();
    if (auto found = probe(coeffs)) return found;
  }
  const std::vector<Fq> elems = f.elements();
  std::vector<std::size_t> digits(d, 0);
  for (;;) {
    for (Eigen::Index c = 0; c < d; ++c) coeffs[c] = elems[digits[c]];
    if (auto found = probe(coeffs)) return found;
    Eigen::Index c = 0;
    while (c < d && ++digits[c] == elems.size()) digits[c++] = 0;
    if (c == d) return std::nullopt;
  }
}

UnitGroup unit_group_dim1(const std::shared_ptr<const LocalAlgebra>& algebra) {
  const LocalAlgebra& a = *algebra;
  const auto& f = a.field();
  std::size_t count = 1;
  for (int i = 0; i < a.dim(); ++i) {
    count *= f.order();
    if (count > 256) throw Error(ErrorCode::SearchBudgetExceeded, "more than 256 units in 1 + m");
  }
  const std::vector<Fq> elems = f.elements();
  UnitGroup g;
  std::map<std::vector<std::uint32_t>, int> index;
  auto key = [](const FqVector& v) {
    std::vector<std::uint32_t> k;
    for (Eigen::Index i = 0; i < v.size(); ++i) k.push_back(v(i).packed());
    return k;
  };
  for (std::size_t e = 0; e < count; ++e) {
    FqVector v = zero_vector(f, a.dim());
    std::size_t rest = e;
    for (int i = 0; i < a.dim(); ++i) {
      v(i) = elems[rest % f.order()];
      rest /= f.order();
    }
    index[key(v)] = static_cast<int>(g.elements.size());
    g.elements.push_back(v);
  }
  auto object = [&](const FqVector& v) {
    std::vector<FqMatrix> comps;
    for (int i = 0; i < a.dim(); ++i) comps.push_back(FqMatrix::Constant(1, 1, v(i)));
    return make_sa_object(algebra, 1, std::move(comps));
  };
  const int n = g.order();
  g.table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const SAObject t = tensor_sa(object(g.elements[i]), object(g.elements[j]));
      FqVector v = zero_vector(f, a.dim());
      for (int h = 0; h < a.dim(); ++h) v(h) = t.components[h](0, 0);
      const auto prod = multiply(a, a.element(f.one(), g.elements[i]), a.element(f.one(), g.elements[j]));
      if (prod.scalar != f.one() || prod.m != v)
        throw Error(ErrorCode::InternalInconsistency, "tensor of lines disagrees with unit product");
      g.table[i][j] = index.at(key(v));
    }
  g.identity = index.at(key(zero_vector(f, a.dim())));
  for (int i = 0; i < n; ++i) {
    if (g.table[i][g.identity] != i || g.table[g.identity][i] != i)
      throw Error(ErrorCode::InternalInconsistency, "identity law fails");
    bool has_inverse = false;
    for (int j = 0; j < n && !has_inverse; ++j) has_inverse = g.table[i][j] == g.identity;
    if (!has_inverse) throw Error(ErrorCode::InternalInconsistency, "missing inverse");
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]])
          throw Error(ErrorCode::InternalInconsistency, "associativity fails");
  }
  return g;
}

NormalizedTriple normalize_triple(const TripleObject& t) {
  if (t.v_dim != t.w_dim) throw Error(ErrorCode::ShapeMismatch, "V and W differ in dimension");
  if (t.betas.size() != t.components.size())
    throw Error(ErrorCode::ShapeMismatch, "need one beta per component");
  NormalizedTriple out;
  std::vector<FqMatrix> residues;
  for (std::size_t j = 0; j < t.components.size(); ++j) {
    const AlgebraMatrix& beta = t.betas[j];
    const auto g_inv = inverse(beta.scalar);
    if (!g_inv) throw Error(ErrorCode::NotInvertible, "residue of beta is singular");
    std::vector<FqMatrix> comps;
    for (const FqMatrix& c : beta.m) comps.push_back(c * *g_inv);
    out.objects.push_back(make_sa_object(t.components[j], t.v_dim, std::move(comps)));
    residues.push_back(beta.scalar);
  }
  if (!residues.empty()) {
    const FqMatrix base_inv = *inverse(residues.back());
    for (std::size_t j = 0; j + 1 < residues.size(); ++j)
      out.transitions.push_back(residues[j] * base_inv);
  }
  return out;
}

TripleObject assemble_triple(const NormalizedTriple& n, const FqMatrix& base) {
  if (n.transitions.size() + 1 != n.objects.size() && !(n.objects.empty() && n.transitions.empty()))
    throw Error(ErrorCode::ShapeMismatch, "need one transition per non-base component");
  TripleObject t;
  for (std::size_t j = 0; j < n.objects.size(); ++j) {
    const SAObject& o = n.objects[j];
    const FqMatrix g = j < n.transitions.size() ? FqMatrix(n.transitions[j] * base) : base;
    AlgebraMatrix beta{g, {}};
    for (const FqMatrix& c : o.components) beta.m.push_back(c * g);
    t.components.push_back(o.algebra);
    t.v_dim = t.w_dim = o.dim;
    t.betas.push_back(std::move(beta));
  }
  return t;
}

}  // namespace pinch
