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

#ifndef PINCH_PIPELINE_HPP
#define PINCH_PIPELINE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "pinch/hopf.hpp"
#include "pinch/local_algebra.hpp"
#include "pinch/newman.hpp"
#include "pinch/witt.hpp"

namespace pinch {

using Json = nlohmann::ordered_json;

/// One reduced point of C per branch; the entries of a branch are the
/// connected components of D over it.
struct Pinching {
  const GaloisField* field = nullptr;
  std::vector<std::vector<std::shared_ptr<const LocalAlgebra>>> branches;
  std::vector<std::string> warnings;
};

/// Strict reader for the pinching schema. ParseError carries the byte
/// offset; ValidationError names the branch and component (1-based).
Pinching parse_pinching(const std::string& text);

struct ComponentReport {
  SigmaDecomposition decomposition;
  std::vector<int> filtration;
};

struct Pi1Expression {
  int zhat = 0;
  std::map<int, int> nw;  // length -> count
  std::vector<std::vector<ComponentReport>> branches;
};

/// Components are decomposed concurrently; the merge is the sequential fold.
Pi1Expression compute_pi1(const Pinching& pinching);

/// `Zhat^*M * NW(l)^*N * ...`, exponents only above 1, `1` when trivial.
std::string render_text(const Pi1Expression& e);
Json to_json(const Pi1Expression& e);
Json to_json(const SigmaDecomposition& d);

/// Generators with weights and corrections; coefficients are integers over a
/// prime field and coordinate lists otherwise, words are lists of names.
Json presentation_to_json(const HopfPresentation& h);
HopfPresentation presentation_from_json(const Json& j, const GaloisField& field);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Fast cross-checks of every module. `witt_table` replaces the addition
/// polynomials used by the Witt checks (to exercise the failure path).
std::vector<CheckResult> self_check(const std::vector<IntPoly>* witt_table = nullptr);

}  // namespace pinch

#endif  // PINCH_PIPELINE_HPP
