// Copyright 2026 The reliattack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELIATTACK_LIMITS_HPP
#define RELIATTACK_LIMITS_HPP

namespace reliattack {

/// Size caps for the exponential routines. All of them are plain
/// configuration; tests raise them deliberately.
struct Limits {
  /// Largest |S| accepted by reliability_value (cost 2^|S|).
  int reliability_subset_cap = 20;
  /// Largest n accepted by the permutation-enumeration Shapley oracle.
  int definitional_player_cap = 9;
  /// Largest local support (closed neighbourhood, cutoff ball) enumerated
  /// by the centrality closed forms.
  int neighborhood_cap = 20;
  /// Largest author list enumerated by the full-credit closed form.
  int paper_author_cap = 20;
  /// Largest candidate pool for exhaustive removal searches.
  int removal_candidate_cap = 24;
  /// Largest set family accepted by the exact max-coverage solver.
  int bmc_set_cap = 24;
};

}  // namespace reliattack

#endif  // RELIATTACK_LIMITS_HPP
