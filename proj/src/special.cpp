// Copyright 2026 The primelab Authors
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

#include "primelab/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "primelab/errors.hpp"

namespace primelab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

Complex lanczos_log(Complex s) {
  s -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (s + static_cast<double>(i));
  Complex t = s + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (s + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

Complex log_sin(Complex w) {
  const Complex i(0.0, 1.0);
  double y = w.imag();
  if (std::fabs(y) < 20.0) return std::log(std::sin(w));
  if (y > 0) return -i * w + std::log((std::exp(2.0 * i * w) - 1.0) / (2.0 * i));
  return i * w + std::log((1.0 - std::exp(-2.0 * i * w)) / (2.0 * i));
}

Complex log_cos(Complex w) {
  const Complex i(0.0, 1.0);
  double y = w.imag();
  if (std::fabs(y) < 20.0) return std::log(std::cos(w));
  if (y > 0) return -i * w + std::log((1.0 + std::exp(2.0 * i * w)) / 2.0);
  return i * w + std::log((1.0 + std::exp(-2.0 * i * w)) / 2.0);
}

Complex log_gamma(Complex s) {
  if (nonpositive_integer(s)) throw PoleError("Gamma has a pole at a nonpositive integer");
  if (s.real() < 0.5) {
    // Gamma(s) Gamma(1-s) = pi / sin(pi s)
    return std::log(kPi) - log_sin(kPi * s) - lanczos_log(1.0 - s);
  }
  return lanczos_log(s);
}

Complex complex_gamma(Complex s) { return std::exp(log_gamma(s)); }

Complex weierstrass_gamma(Complex s, long terms) {
  if (nonpositive_integer(s)) throw PoleError("Gamma has a pole at a nonpositive integer");
  if (terms < 1) throw std::invalid_argument("weierstrass_gamma needs at least one term");
  Complex acc = -kEulerGamma * s - std::log(s);
  for (long n = 1; n <= terms; ++n) {
    Complex u = s / static_cast<double>(n);
    acc += u - std::log(1.0 + u);
  }
  return std::exp(acc);
}

double lambert_w0(double x) {
  const double branch = -1.0 / std::numbers::e;
  if (!(x >= branch)) throw std::domain_error("lambert_w0 requires x >= -1/e");
  if (x == branch) return -1.0;
  if (x == 0.0) return 0.0;
  double w;
  if (x < -0.3) {
    w = -1.0 + std::sqrt(2.0 * (1.0 + std::numbers::e * x));
  } else if (x < 3.0) {
    w = std::log1p(x) * 0.8;
  } else {
    double l = std::log(x);
    w = l - std::log(l);
  }
  for (int it = 0; it < 100; ++it) {
    double ew = std::exp(w);
    double f = w * ew - x;
    double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::fabs(step) <= 1e-15 * (1.0 + std::fabs(w))) break;
  }
  return w;
}

}  // namespace primelab
