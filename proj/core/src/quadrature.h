// Copyright 2026 The cachemarket Authors
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

#ifndef CACHEMARKET_SRC_QUADRATURE_H_
#define CACHEMARKET_SRC_QUADRATURE_H_

#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cachemarket/error.h"

namespace cachemarket::internal {

struct Quadrature {
  double value = 0.0;
  double error = 0.0;
};

// Adaptive 61-point Gauss-Kronrod on [a, b].
template <typename F>
Quadrature Integrate(F&& f, double a, double b) {
  Quadrature q;
  q.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, 30, 1e-13, &q.error);
  return q;
}

// Throws NumericalError when the accumulated estimate exceeds `abs_tol`.
inline void CheckQuadrature(const Quadrature& q, double abs_tol,
                            const std::string& what) {
  if (!std::isfinite(q.value) || !(q.error <= abs_tol)) {
    throw NumericalError(what + ": quadrature did not reach tolerance",
                         q.error);
  }
}

}  // namespace cachemarket::internal

#endif  // CACHEMARKET_SRC_QUADRATURE_H_
