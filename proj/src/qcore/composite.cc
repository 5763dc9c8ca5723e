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

#include "qss/qcore/composite.h"

#include <numbers>

namespace qss {

void append_toffoli(Circuit& c, int a, int b, int t) {
  constexpr double kT = std::numbers::pi / 4;
  c.h(t);
  c.cx(b, t).rz(t, -kT);
  c.cx(a, t).rz(t, kT);
  c.cx(b, t).rz(t, -kT);
  c.cx(a, t).rz(b, kT).rz(t, kT);
  c.h(t);
  c.cx(a, b).rz(a, kT).rz(b, -kT);
  c.cx(a, b);
}

void append_fredkin(Circuit& c, int control, int a, int b) {
  c.cx(b, a);
  append_toffoli(c, control, a, b);
  c.cx(b, a);
}

void append_controlled_ry(Circuit& c, int control, int target, double theta) {
  c.ry(target, theta / 2).cx(control, target).ry(target, -theta / 2).cx(control, target);
}

}  // namespace qss
