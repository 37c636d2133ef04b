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

#include "pinch/newman.hpp"

#include "pinch/leibniz.hpp"
#include "pinch/linalg.hpp"

namespace pinch {

namespace {

FqMatrix columns(const GaloisField& f, Eigen::Index rows, const std::vector<FqVector>& vs) {
  FqMatrix m = zero_matrix(f, rows, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = vs[k];
  return m;
}

Eigen::Index span_rank(const GaloisField& f, Eigen::Index rows, const std::vector<FqVector>& vs) {
  return vs.empty() ? 0 : rank(columns(f, rows, vs));
}

}  // namespace

DualCoalgebra dual_coalgebra(const LocalAlgebra& a) {
  const GaloisField& f = a.field();
  const int n = a.dim();
  std::vector<FqMatrix> delta(n + 1, zero_matrix(f, n + 1, n + 1));
  delta[0](0, 0) = f.one();
  for (int h = 0; h < n; ++h) {
    delta[h + 1](h + 1, 0) = f.one();
    delta[h + 1](0, h + 1) = f.one();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) delta[h + 1](i + 1, j + 1) = a.constant(i, j, h);
  }
  return {a, std::move(delta)};
}

SemilinearMap ver_dual(const LocalAlgebra& a) {
  const SemilinearMap fr = frobenius_power(a, 1);
  return SemilinearMap(a.field(), frobenius(FqMatrix(fr.matrix().transpose()), -1), -1);
}

std::vector<int> filtration_dims(const LocalAlgebra& a) {
  const SemilinearMap ver = ver_dual(a);
  const int h = height(a);
  std::vector<int> d;
  for (int i = 0; i <= h + 1; ++i) d.push_back(static_cast<int>(kernel(power(ver, i)).basis.size()));
  return d;
}

RegularBasis regular_basis(const LocalAlgebra& a) {
  const GaloisField& f = a.field();
  const Eigen::Index n = a.dim();
  const SemilinearMap ver = ver_dual(a);
  const int h = height(a);

  RegularBasis out;
  // Chain members already placed at each level (level = position + 1).
  std::vector<std::vector<FqVector>> placed(h + 2);
  for (int level = h; level >= 1; --level) {
    std::vector<FqVector> span = kernel(power(ver, level - 1)).basis;
    span.insert(span.end(), placed[level].begin(), placed[level].end());
    Eigen::Index r = span_rank(f, n, span);
    for (const FqVector& cand : kernel(power(ver, level)).basis) {
      span.push_back(cand);
      const Eigen::Index grown = rank(columns(f, n, span));
      if (grown == r) {
        span.pop_back();
        continue;
      }
      r = grown;
      std::vector<FqVector> chain(level);
      FqVector v = cand;
      for (int k = level - 1; k >= 0; --k) {
        chain[k] = v;
        placed[k + 1].push_back(v);
        v = ver(v);
      }
      out.chains.push_back(std::move(chain));
    }
  }
  return out;
}

SigmaDecomposition decompose_sigma(const LocalAlgebra& a) {
  const std::vector<int> d = filtration_dims(a);
  SigmaDecomposition out;
  out.height = height(a);
  for (int l = 1; l <= out.height; ++l) {
    const int c = 2 * d[l] - d[l + 1] - d[l - 1];
    if (c) out.counts[l] = c;
  }
  std::map<int, int> chains;
  for (const auto& chain : regular_basis(a).chains) ++chains[static_cast<int>(chain.size())];
  if (chains != out.counts)
    throw Error(ErrorCode::InternalInconsistency, "closed formula and chain lengths disagree");
  int total = 0;
  for (const auto& [l, c] : out.counts) total += l * c;
  if (total != a.dim() || (out.height > 0 && !out.counts.count(out.height)))
    throw Error(ErrorCode::InternalInconsistency, "decomposition does not account for m*");
  return out;
}

HopfPresentation h_a_presentation(const LocalAlgebra& a) {
  if (!is_filtration_adapted(a))
    throw Error(ErrorCode::NotFiltrationAdapted, "basis is not adapted to the powers of m");
  const GaloisField& f = a.field();
  const std::vector<int> levels = filtration_levels(a);
  std::vector<Generator> gens;
  for (int h = 0; h < a.dim(); ++h) {
    Generator g{"e" + std::to_string(h + 1), levels[h], {}};
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        const Fq c = a.constant(i, j, h);
        if (is_zero(c)) continue;
        g.corrections.push_back({c, NcPoly::monomial({static_cast<Letter>(i)}, f.one()),
                                 NcPoly::monomial({static_cast<Letter>(j)}, f.one())});
      }
    gens.push_back(std::move(g));
  }
  return HopfPresentation(f, std::move(gens));
}

bool word_counts_agree(const LocalAlgebra& a, int max_length) {
  const GaloisField& f = a.field();
  const unsigned p = f.characteristic();
  std::vector<HopfPresentation> factors;
  for (const auto& [l, count] : decompose_sigma(a).counts) {
    int top = 1;
    for (int k = 1; k < l; ++k) top *= static_cast<int>(p);
    for (int c = 0; c < count; ++c) factors.push_back(nw_presentation(l, p, f, top));
  }
  const HopfPresentation ha = h_a_presentation(filtration_adapted(a));
  if (factors.empty()) return ha.size() == 0;
  HopfPresentation product = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) product = free_product(product, factors[k]);
  // Both sides are free on their generators, so words of length k number size^k.
  for (int k = 0; k <= max_length; ++k) {
    long long lhs = 1, rhs = 1;
    for (int j = 0; j < k; ++j) {
      lhs *= static_cast<long long>(ha.size());
      rhs *= static_cast<long long>(product.size());
    }
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace pinch
