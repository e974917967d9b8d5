/*
 * Copyright 2026 The gsde-rl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gsde/nn/tape.hpp"

#include <cmath>

#include "gsde/error.hpp"

namespace gsde::ad {

double Var::value() const { return tape_->value(*this); }

Var Tape::variable(double value) {
  nodes_.push_back({value, {0, 0}, {0.0, 0.0}, 0});
  return Var(this, nodes_.size() - 1);
}

Var Tape::unary(Var a, double value, double da) {
  nodes_.push_back({value, {a.index(), 0}, {da, 0.0}, 1});
  return Var(this, nodes_.size() - 1);
}

Var Tape::binary(Var a, Var b, double value, double da, double db) {
  if (a.tape() != b.tape()) throw ShapeError("tape: operands recorded on different tapes");
  nodes_.push_back({value, {a.index(), b.index()}, {da, db}, 2});
  return Var(this, nodes_.size() - 1);
}

std::vector<double> Tape::gradient(Var output) const {
  std::vector<double> adjoint(nodes_.size(), 0.0);
  adjoint[output.index()] = 1.0;
  for (std::size_t i = output.index() + 1; i-- > 0;) {
    const Node& n = nodes_[i];
    if (adjoint[i] == 0.0) continue;
    for (int p = 0; p < n.arity; ++p) adjoint[n.parents[p]] += n.partials[p] * adjoint[i];
  }
  return adjoint;
}

Var operator+(Var a, Var b) { return a.tape()->binary(a, b, a.value() + b.value(), 1.0, 1.0); }
Var operator-(Var a, Var b) { return a.tape()->binary(a, b, a.value() - b.value(), 1.0, -1.0); }
Var operator*(Var a, Var b) { return a.tape()->binary(a, b, a.value() * b.value(), b.value(), a.value()); }
Var operator/(Var a, Var b) {
  const double inv = 1.0 / b.value();
  return a.tape()->binary(a, b, a.value() * inv, inv, -a.value() * inv * inv);
}
Var operator-(Var a) { return a.tape()->unary(a, -a.value(), -1.0); }
Var operator+(Var a, double c) { return a.tape()->unary(a, a.value() + c, 1.0); }
Var operator-(Var a, double c) { return a.tape()->unary(a, a.value() - c, 1.0); }
Var operator*(Var a, double c) { return a.tape()->unary(a, a.value() * c, c); }
Var operator*(double c, Var a) { return a * c; }
Var operator/(double c, Var a) {
  const double inv = 1.0 / a.value();
  return a.tape()->unary(a, c * inv, -c * inv * inv);
}

Var exp(Var a) {
  const double e = std::exp(a.value());
  return a.tape()->unary(a, e, e);
}
Var log(Var a) { return a.tape()->unary(a, std::log(a.value()), 1.0 / a.value()); }
Var sqrt(Var a) {
  const double s = std::sqrt(a.value());
  return a.tape()->unary(a, s, 0.5 / s);
}
Var tanh(Var a) {
  const double t = std::tanh(a.value());
  return a.tape()->unary(a, t, 1.0 - t * t);
}
Var square(Var a) { return a.tape()->unary(a, a.value() * a.value(), 2.0 * a.value()); }
Var max(Var a, double floor) {
  return a.value() >= floor ? a.tape()->unary(a, a.value(), 1.0) : a.tape()->unary(a, floor, 0.0);
}

}  // namespace gsde::ad
