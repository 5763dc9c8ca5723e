// Copyright 2026 The QSS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qss/qcore/native.h"

#include <numbers>

namespace qss {

Circuit native_decomposition(RotationAxis axis, double theta) {
  constexpr double kPi = std::numbers::pi;
  Circuit c(1);
  if (axis == RotationAxis::kX) {
    c.rz(1, kPi / 2).sx(1).rz(1, theta + kPi).sx(1).rz(1, kPi / 2);
  } else {
    c.sx(1).rz(1, theta + kPi).sx(1).rz(1, kPi);
  }
  return c;
}

}  // namespace qss
