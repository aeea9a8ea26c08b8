// Copyright 2026 The sigtrend Authors
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

#ifndef SIGTREND_TESTS_RANDOM_TREE_HPP
#define SIGTREND_TESTS_RANDOM_TREE_HPP

#include <cstdint>
#include <random>

#include "sigtrend/expr.hpp"

namespace sigtrend::expr {

// Random expression trees over a small alphabet.
class TreeGen {
 public:
  TreeGen(std::uint64_t seed, bool negations) : rng_(seed), negations_(negations) {}

  NodePtr operator()(int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : (negations_ ? 5 : 4));
    switch (pick(rng_)) {
      case 0: {
        std::uniform_int_distribution<int> v(1, 9);
        std::uniform_int_distribution<int> frac(0, 3);
        return make_number(static_cast<real>(v(rng_)) / static_cast<real>(1 << frac(rng_)));
      }
      case 1: {
        static const char* names[] = {"x", "y", "z"};
        std::uniform_int_distribution<int> v(0, 2);
        return make_variable(names[v(rng_)]);
      }
      case 2: {
        static const char ops[] = {'+', '-', '*', '/'};
        std::uniform_int_distribution<int> o(0, 3);
        return make_binary(ops[o(rng_)], (*this)(depth - 1), (*this)(depth - 1));
      }
      case 3: {
        // Small integer exponents keep negative bases in the domain.
        std::uniform_int_distribution<int> e(0, 3);
        std::bernoulli_distribution nested(0.2);
        NodePtr exponent = make_number(e(rng_));
        if (nested(rng_)) exponent = make_binary('^', make_number(e(rng_)), make_number(1));
        return make_binary('^', (*this)(depth - 1), exponent);
      }
      case 4:
        return make_call("exp", make_binary('/', (*this)(depth - 1), make_number(16)));
      default:
        return make_negate((*this)(depth - 1));
    }
  }

  Env env() {
    std::uniform_real_distribution<double> u(-3, 3);
    return {{"x", static_cast<real>(u(rng_))}, {"y", static_cast<real>(u(rng_))}, {"z", static_cast<real>(u(rng_))}};
  }

 private:
  std::mt19937_64 rng_;
  bool negations_;
};

}  // namespace sigtrend::expr

#endif  // SIGTREND_TESTS_RANDOM_TREE_HPP
