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

#include "cachemarket/special.h"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "cachemarket/error.h"

namespace cachemarket::special {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxTerms = 100000;

// gamma(a, x) by its power series, a > 0.
double LowerGammaSeries(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxTerms; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) {
      return sum * std::exp(-x + a * std::log(x));
    }
  }
  throw NumericalError("incomplete gamma series did not converge", term);
}

// Gamma(a, x) by the Legendre continued fraction (modified Lentz).
double UpperGammaFraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) {
      return std::exp(-x + a * std::log(x)) * h;
    }
  }
  throw NumericalError("incomplete gamma continued fraction did not converge",
                       h);
}

double UpperGammaPositive(double a, double x) {
  if (x == 0.0) return std::tgamma(a);
  if (x < a + 1.0) return std::tgamma(a) - LowerGammaSeries(a, x);
  return UpperGammaFraction(a, x);
}

}  // namespace

double UpperIncompleteGamma(double a, double x) {
  Require(std::isfinite(a) && std::isfinite(x), "incomplete gamma: non-finite input");
  Require(x >= 0.0, "incomplete gamma: x must be non-negative");
  if (a > 0.0) return UpperGammaPositive(a, x);
  Require(a != std::floor(a),
          "incomplete gamma: a must not be a non-positive integer");
  Require(x > 0.0, "incomplete gamma: x must be positive when a <= 0");
  // The continued fraction converges for any a once x is moderately large,
  // and avoids the cancellation the recurrence suffers there.
  if (x >= 1.5 && x >= a + 1.0) return UpperGammaFraction(a, x);
  const int shift = static_cast<int>(std::floor(-a)) + 1;
  double g = UpperGammaPositive(a + shift, x);
  for (int j = shift - 1; j >= 0; --j) {
    const double aj = a + j;
    g = (g - std::exp(aj * std::log(x) - x)) / aj;
  }
  return g;
}

double RiemannZeta(double s) {
  Require(std::isfinite(s), "zeta: argument must be finite");
  Require(s > 0.0, "zeta: argument must be positive");
  if (s == 1.0) throw InvalidArgument("zeta: pole at s = 1");
  constexpr int n = 32;
  std::array<double, n + 1> d{};
  double term = 1.0;
  double acc = 1.0;
  d[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    term *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
    acc += term;
    d[i + 1] = acc;
  }
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = (d[k] - d[n]) * std::pow(k + 1.0, -s);
    sum += (k % 2 == 0) ? t : -t;
  }
  const double eta = -sum / d[n];
  return eta / -std::expm1((1.0 - s) * std::log(2.0));
}

}  // namespace cachemarket::special
