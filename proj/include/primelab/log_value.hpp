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

#include <string>

namespace primelab {

// A real number stored as sign and natural log of its magnitude.
class LogValue {
 public:
  LogValue() = default;  // zero

  static LogValue from_double(double v);
  static LogValue from_log(double ln_mag, int sign = 1);
  static LogValue pow10(double exponent) { return from_log(exponent * kLn10); }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  double ln() const { return ln_mag_; }
  double log10() const { return ln_mag_ / kLn10; }
  // Overflows to +-inf or underflows to 0 outside the double range.
  double to_double() const;

  // Decimal mantissa in [1, 10) and exponent.
  void decompose(double& mantissa, long long& exponent10) const;
  std::string scientific(int sig_digits) const;

  LogValue operator-() const;
  friend LogValue operator*(const LogValue& a, const LogValue& b);
  friend LogValue operator/(const LogValue& a, const LogValue& b);
  friend LogValue operator+(const LogValue& a, const LogValue& b);
  friend LogValue operator-(const LogValue& a, const LogValue& b) { return a + (-b); }
  LogValue pow(double e) const;

  friend bool operator<(const LogValue& a, const LogValue& b);
  friend bool operator==(const LogValue& a, const LogValue& b) {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.ln_mag_ == b.ln_mag_);
  }

  static constexpr double kLn10 = 2.302585092994045684017991454684364208;

 private:
  int sign_ = 0;
  double ln_mag_ = 0.0;
};

}  // namespace primelab
