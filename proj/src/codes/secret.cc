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

#include "qss/codes/secret.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qss {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSlack = 1e-12;

void check_range(double v, double hi, const char* name) {
  if (!(v >= -kSlack && v <= hi + kSlack)) {
    throw std::invalid_argument(std::string(name) + " = " + std::to_string(v) + " outside [0, " +
                                std::to_string(hi) + "]");
  }
}

}  // namespace

SecretSpec SecretSpec::qubit(double theta, double phi) {
  SecretSpec s;
  s.kind = SecretKind::kQubit;
  s.theta = theta;
  s.phi = phi;
  return s;
}

SecretSpec SecretSpec::qutrit(double theta1, double theta2) {
  SecretSpec s;
  s.kind = SecretKind::kQutrit;
  s.theta1 = theta1;
  s.theta2 = theta2;
  return s;
}

StateVector prepare_secret(const SecretSpec& spec) {
  if (spec.kind == SecretKind::kQubit) {
    check_range(spec.theta, kPi, "theta");
    check_range(spec.phi, 2 * kPi, "phi");
    Vector v(2);
    v << std::cos(spec.theta / 2), std::polar(1.0, spec.phi) * std::sin(spec.theta / 2);
    return StateVector::from_amplitudes(std::move(v));
  }
  check_range(spec.theta1, 2 * kPi, "theta1");
  check_range(spec.theta2, kPi, "theta2");
  const double s2 = std::sin(spec.theta2 / 2);
  return qutrit_state(std::cos(spec.theta2 / 2), s2 * std::cos(spec.theta1), s2 * std::sin(spec.theta1));
}

Circuit secret_preparation_circuit(const SecretSpec& spec) {
  if (spec.kind != SecretKind::kQubit) throw std::invalid_argument("only qubit secrets have a preparation circuit");
  check_range(spec.theta, kPi, "theta");
  check_range(spec.phi, 2 * kPi, "phi");
  Circuit c(1);
  c.rx(1, spec.theta).rz(1, spec.phi + kPi / 2);
  return c;
}

StateVector qutrit_state(Complex a, Complex b, Complex c) {
  Vector v(4);
  v << a, b, c, 0.0;
  return StateVector::from_amplitudes(std::move(v));
}

}  // namespace qss
