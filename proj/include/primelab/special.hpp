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

#pragma once

#include <complex>

namespace primelab {

using Complex = std::complex<double>;
// s = a + ib; a is the real part, b the height.
using ComplexPoint = Complex;

// ln Gamma(s) on some branch (only exp of it is meaningful). Lanczos g = 7,
// nine coefficients, with reflection for a < 1/2. Throws PoleError at
// nonpositive integers.
Complex log_gamma(Complex s);
Complex complex_gamma(Complex s);
// Partial Weierstrass product e^{-gamma s}/s prod_{n<=terms} (1+s/n)^{-1} e^{s/n}.
Complex weierstrass_gamma(Complex s, long terms);

// ln sin(w) and ln cos(w), stable for large |Im w|.
Complex log_sin(Complex w);
Complex log_cos(Complex w);

// Principal branch W_0 by Halley iteration; x >= -1/e.
double lambert_w0(double x);

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243104215933593992;

}  // namespace primelab
