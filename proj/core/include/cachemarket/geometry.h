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

// Downlink SINR coverage and per-UE throughput for base stations drawn from a
// homogeneous Poisson point process. All quantities are in linear units.

#ifndef CACHEMARKET_GEOMETRY_H_
#define CACHEMARKET_GEOMETRY_H_

namespace cachemarket::geometry {

struct NetworkParams {
  double power = 1.0;           // BS transmit power p, W
  double noise = 0.0;           // noise power sigma^2, W
  double path_loss = 4.0;       // path-loss exponent alpha, > 2
  double sinr_threshold = 1.0;  // T, linear
  double bs_density = 1e-4;     // lambda, BS per m^2
  int subchannels = 1;          // L
  double bandwidth = 1e6;       // W, Hz
  double ue_density = 1e-4;     // xi, UE per m^2
  double activity = 0.1;        // eta, in (0, 1)

  // Density of BSs serving the typical UE's MNO (lambda_A) and of
  // co-channel interferers (lambda_I).
  double active_density() const { return bs_density; }
  double interferer_density() const { return bs_density / subchannels; }

  // Throws InvalidArgument on any violated invariant.
  void Validate() const;
};

enum class CoverageMethod { kExactIntegral, kClosedForm, kInterferenceLimited };

const char* CoverageMethodName(CoverageMethod method);

struct CoverageResult {
  double p_c = 0.0;
  double beta = 0.0;
  CoverageMethod method = CoverageMethod::kExactIntegral;
};

// beta = (2/alpha) (T/p)^(2/alpha) E_g[g^(2/alpha) Gamma(-2/alpha, T g/p) -
// Gamma(-2/alpha)], g exponential with mean p, by adaptive quadrature.
// Throws NumericalError when the quadrature error exceeds 1e-9.
double ComputeBeta(const NetworkParams& net);

// P_c = pi lambda int_0^inf exp(-(A z + B z^(alpha/2))) dz with
// A = pi (lambda_I (beta - 1) + lambda_A) and B = T sigma^2 / p.
CoverageResult CoverageExact(const NetworkParams& net);
CoverageResult CoverageExact(const NetworkParams& net, double beta);

// [1 + (beta-1)/L + alpha/(2 pi lambda Gamma(2/alpha)) (T sigma^2/p)^(2/alpha)]^-1
CoverageResult CoverageClosedForm(const NetworkParams& net);
CoverageResult CoverageClosedForm(const NetworkParams& net, double beta);

// L / (beta + L - 1); the noise-free limit of both forms above.
CoverageResult CoverageInterferenceLimited(const NetworkParams& net);
CoverageResult CoverageInterferenceLimited(const NetworkParams& net,
                                           double beta);

// G = p_c (W/L) log2(1 + T), bits per second.
double Throughput(const NetworkParams& net, double p_c);

}  // namespace cachemarket::geometry

#endif  // CACHEMARKET_GEOMETRY_H_
