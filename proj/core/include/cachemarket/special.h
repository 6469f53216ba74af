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

#ifndef CACHEMARKET_SPECIAL_H_
#define CACHEMARKET_SPECIAL_H_

namespace cachemarket::special {

// Upper incomplete gamma function Gamma(a, x) = int_x^inf t^(a-1) e^-t dt.
//
// Any real a is accepted except non-positive integers. For a <= 0 the
// recurrence Gamma(a, x) = (Gamma(a+1, x) - x^a e^-x) / a lifts the parameter
// into the positive range. Requires x > 0 when a <= 0 and x >= 0 otherwise.
double UpperIncompleteGamma(double a, double x);

// Riemann zeta on (0, 1) and (1, inf) through the Dirichlet eta function,
// summed with Borwein's acceleration. Throws InvalidArgument at s = 1.
double RiemannZeta(double s);

}  // namespace cachemarket::special

#endif  // CACHEMARKET_SPECIAL_H_
