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

#include "primelab/log_value.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace primelab {

LogValue LogValue::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("LogValue from non-finite double");
  LogValue r;
  if (v == 0.0) return r;
  r.sign_ = v > 0 ? 1 : -1;
  r.ln_mag_ = std::log(std::fabs(v));
  return r;
}

LogValue LogValue::from_log(double ln_mag, int sign) {
  LogValue r;
  if (sign == 0) return r;
  if (std::isnan(ln_mag)) throw std::invalid_argument("LogValue from NaN log");
  if (ln_mag == -INFINITY) return r;
  r.sign_ = sign > 0 ? 1 : -1;
  r.ln_mag_ = ln_mag;
  return r;
}

double LogValue::to_double() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(ln_mag_);
}

void LogValue::decompose(double& mantissa, long long& exponent10) const {
  if (sign_ == 0) {
    mantissa = 0.0;
    exponent10 = 0;
    return;
  }
  double l10 = log10();
  double e = std::floor(l10);
  mantissa = std::pow(10.0, l10 - e);
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    e += 1.0;
  }
  mantissa *= sign_;
  exponent10 = static_cast<long long>(e);
}

std::string LogValue::scientific(int sig_digits) const {
  double m;
  long long e;
  decompose(m, e);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", sig_digits > 1 ? sig_digits - 1 : 0, m);
  // Rounding can carry the mantissa to 10.
  double rounded = std::atof(buf);
  if (std::fabs(rounded) >= 10.0) {
    e += 1;
    std::snprintf(buf, sizeof buf, "%.*f", sig_digits > 1 ? sig_digits - 1 : 0, m / 10.0);
  }
  return std::string(buf) + "e" + std::to_string(e);
}

LogValue LogValue::operator-() const {
  LogValue r = *this;
  r.sign_ = -r.sign_;
  return r;
}

LogValue operator*(const LogValue& a, const LogValue& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return {};
  return LogValue::from_log(a.ln_mag_ + b.ln_mag_, a.sign_ * b.sign_);
}

LogValue operator/(const LogValue& a, const LogValue& b) {
  if (b.sign_ == 0) throw std::domain_error("LogValue division by zero");
  if (a.sign_ == 0) return {};
  return LogValue::from_log(a.ln_mag_ - b.ln_mag_, a.sign_ * b.sign_);
}

LogValue operator+(const LogValue& a, const LogValue& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  const LogValue& hi = a.ln_mag_ >= b.ln_mag_ ? a : b;
  const LogValue& lo = a.ln_mag_ >= b.ln_mag_ ? b : a;
  double d = lo.ln_mag_ - hi.ln_mag_;
  if (hi.sign_ == lo.sign_) return LogValue::from_log(hi.ln_mag_ + std::log1p(std::exp(d)), hi.sign_);
  if (d == 0.0) return {};
  return LogValue::from_log(hi.ln_mag_ + std::log1p(-std::exp(d)), hi.sign_);
}

LogValue LogValue::pow(double e) const {
  if (sign_ < 0) throw std::domain_error("LogValue pow of negative value");
  if (sign_ == 0) return e > 0 ? LogValue{} : throw std::domain_error("LogValue 0^e, e <= 0");
  return from_log(ln_mag_ * e);
}

bool operator<(const LogValue& a, const LogValue& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  if (a.sign_ == 0) return false;
  return a.sign_ > 0 ? a.ln_mag_ < b.ln_mag_ : a.ln_mag_ > b.ln_mag_;
}

}  // namespace primelab
