/*
 * Copyright 2026 The eccs Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ECCS_SELFTEST_HPP_
#define ECCS_SELFTEST_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "eccs/curve.hpp"

namespace eccs {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool passed() const;
};

/// SHA3 known answers plus the toy-curve oracle suite: parameter sanity,
/// the full group table against point_add, the correctness identity for
/// every nonce r in [1, n - 1], and a single-bit tamper sweep. `toy` is
/// normally toy_curve(); tests pass corrupted copies as negative controls.
/// Progress lines go to `log` when non-null.
SelftestReport run_selftest(const CurveParams& toy, std::ostream* log = nullptr);

}  // namespace eccs

#endif  // ECCS_SELFTEST_HPP_
