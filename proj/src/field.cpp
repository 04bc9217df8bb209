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
#include "gmaderiv/field.hpp"

#include <stdexcept>

namespace gmaderiv {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d <= p / d; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : p - (b - a);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

// Extended Euclid; requires gcd(a, p) = 1, i.e. a != 0 in GF(p).
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "rational" : "prime " + std::to_string(ch_);
}

Scalar Scalar::of(const Field& f, long long n) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = mpq_class(static_cast<long>(n));
  } else {
    const std::uint64_t p = f.characteristic();
    long long m = n % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  const std::string str(text);
  if (f.is_rational()) {
    const auto slash = str.find('/');
    mpz_class num, den;
    try {
      if (slash == std::string::npos) {
        num = mpz_class(str);
        den = 1;
      } else {
        num = mpz_class(str.substr(0, slash));
        den = mpz_class(str.substr(slash + 1));
      }
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed rational '" + str + "'");
    }
    if (den == 0) throw std::invalid_argument("zero denominator in '" + str + "'");
    Scalar s(f);
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }
  mpz_class v;
  try {
    v = mpz_class(str);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed prime-field element '" + str + "'");
  }
  mpz_class p(static_cast<unsigned long>(f.characteristic()));
  mpz_class rep;
  mpz_mod(rep.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  Scalar s(f);
  s.r_ = rep.get_ui();
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

std::string Scalar::str() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = inv_mod(r_, field_.characteristic());
  return s;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    throw FieldMismatchError("scalar over " + field_.name() + " mixed with scalar over " +
                             other.field_.name());
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational())
    q_ += rhs.q_;
  else
    r_ = add_mod(r_, rhs.r_, field_.characteristic());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational())
    q_ -= rhs.q_;
  else
    r_ = sub_mod(r_, rhs.r_, field_.characteristic());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational())
    q_ *= rhs.q_;
  else
    r_ = mul_mod(r_, rhs.r_, field_.characteristic());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_field(rhs);
  return lhs.field_.is_rational() ? lhs.q_ == rhs.q_ : lhs.r_ == rhs.r_;
}

}  // namespace gmaderiv
