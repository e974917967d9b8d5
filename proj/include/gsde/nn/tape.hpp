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

#pragma once

#include <cstddef>
#include <vector>

namespace gsde::ad {

class Tape;

/// Handle to a scalar node recorded on a Tape.
class Var {
 public:
  Var() = default;
  double value() const;
  std::size_t index() const noexcept { return index_; }
  Tape* tape() const noexcept { return tape_; }

 private:
  friend class Tape;
  Var(Tape* tape, std::size_t index) : tape_(tape), index_(index) {}
  Tape* tape_ = nullptr;
  std::size_t index_ = 0;
};

/// Scalar reverse-mode tape (Wengert list). Nodes are appended in evaluation
/// order, so a single reverse sweep yields all adjoints.
class Tape {
 public:
  Var variable(double value);
  Var constant(double value) { return variable(value); }

  /// Adjoints of `output` with respect to every recorded node.
  std::vector<double> gradient(Var output) const;

  double value(Var v) const { return nodes_[v.index()].value; }
  std::size_t size() const noexcept { return nodes_.size(); }

  // Used by the operator overloads below.
  Var unary(Var a, double value, double da);
  Var binary(Var a, Var b, double value, double da, double db);

 private:
  struct Node {
    double value;
    std::size_t parents[2];
    double partials[2];
    int arity;
  };
  std::vector<Node> nodes_;
};

Var operator+(Var a, Var b);
Var operator-(Var a, Var b);
Var operator*(Var a, Var b);
Var operator/(Var a, Var b);
Var operator-(Var a);
Var operator+(Var a, double c);
Var operator*(Var a, double c);
Var operator*(double c, Var a);
Var operator-(Var a, double c);
Var operator/(double c, Var a);

Var exp(Var a);
Var log(Var a);
Var sqrt(Var a);
Var tanh(Var a);
Var square(Var a);
/// max(a, floor); the derivative is zero when the floor is active.
Var max(Var a, double floor);

}  // namespace gsde::ad
