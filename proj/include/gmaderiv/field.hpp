/* Copyright (C) 2026 The gmaderiv authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "gmaderiv/errors.hpp"

namespace gmaderiv {

/// Ground field of a computation: the rationals or a prime field GF(p).
///
/// A Field is a small value; two fields compare equal iff they have the
/// same characteristic (0 for the rationals).
class Field {
 public:
  static Field rationals() { return Field(0); }

  /// GF(p). Throws std::invalid_argument unless p is a prime >= 2
  /// (primality is decided by trial division).
  static Field prime(std::uint64_t p);

  /// 0 for the rationals, p for GF(p).
  std::uint64_t characteristic() const { return ch_; }
  bool is_rational() const { return ch_ == 0; }

  /// "rational" or "prime p", matching the context-document grammar.
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t ch) : ch_(ch) {}
  std::uint64_t ch_;
};

/// Exact element of a ground field.
///
/// Rational values are kept in lowest terms with a positive denominator
/// (GMP canonical form); GF(p) values as the representative in 0..p-1.
/// All arithmetic is exact; mixing fields throws FieldMismatchError.
class Scalar {
 public:
  /// Zero of the rationals. Vectors of scalars default to this; any use
  /// against another field is caught by the arithmetic checks.
  Scalar() : Scalar(Field::rationals()) {}

  /// Zero of the given field.
  explicit Scalar(const Field& f) : field_(f) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return of(f, 1); }
  static Scalar of(const Field& f, long long n);

  /// Parses "num", "num/den" (rationals) or an integer (GF(p), reduced
  /// mod p). Throws std::invalid_argument on malformed text or zero
  /// denominator. The canonical serialization is str().
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical string form: "n" or "n/d" with d > 1 for rationals,
  /// the representative 0..p-1 for GF(p).
  std::string str() const;

  Scalar operator-() const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  mpq_class q_;           // payload when rational
  std::uint64_t r_ = 0;   // payload when prime field
};

}  // namespace gmaderiv
