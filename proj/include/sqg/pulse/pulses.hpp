// Copyright 2026 the sqgsim authors
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

#pragma once

#include <cmath>

#include "sqg/types.hpp"

namespace sqg {

/// Convolution of a rectangle [t_start, t_start + length] with a unit-area
/// Gaussian of width sigma: smooth plateau in [0, 1], symmetric about the
/// rectangle center. Times in ns.
struct RectGaussPulse {
  double t_start = 0.0;
  double length = 0.0;
  double sigma = 1.0;

  double value(double t) const {
    const double s = sigma * std::sqrt(2.0);
    return 0.5 * (std::erf((t - t_start) / s) - std::erf((t - t_start - length) / s));
  }
  double center() const { return t_start + 0.5 * length; }
};

/// Envelope with sinusoidal rise and fall around a constant plateau:
/// 0 -> amp over `rise`, amp for `plateau`, amp -> 0 over `rise`.
struct SinRampEnvelope {
  double t_start = 0.0;
  double plateau = 0.0;
  double rise = 25.0;
  double amp = 0.0;

  double value(double t) const {
    const double u = t - t_start;
    if (u <= 0.0 || u >= plateau + 2.0 * rise) return 0.0;
    if (u < rise) {
      const double s = std::sin(0.5 * kPi * u / rise);
      return amp * s * s;
    }
    if (u <= rise + plateau) return amp;
    const double s = std::sin(0.5 * kPi * (plateau + 2.0 * rise - u) / rise);
    return amp * s * s;
  }
};

/// Parametric flux drive of a tunable coupler, in units of the flux quantum:
/// Phi(t)/Phi0 = dc_bias + envelope(t) * cos(mod_freq * t + phase).
struct FluxDrive {
  double dc_bias = 0.275;
  SinRampEnvelope envelope;
  double mod_freq = 0.0;  // rad/ns
  double phase = 0.0;

  double flux(double t) const {
    const double amp = envelope.value(t);
    return dc_bias + (amp == 0.0 ? 0.0 : amp * std::cos(mod_freq * t + phase));
  }
};

/// SQUID frequency law: wc(Phi) = wc0 sqrt(|cos(pi Phi / Phi0)|).
inline double coupler_frequency(double wc0, double flux_phi0) {
  return wc0 * std::sqrt(std::abs(std::cos(kPi * flux_phi0)));
}

}  // namespace sqg
