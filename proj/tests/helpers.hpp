#pragma once

#include <random>
#include <string>
#include <vector>

#include "gmaderiv/gallery.hpp"

namespace testutil {

using namespace gmaderiv;

inline Field QQ() { return Field::rationals(); }
inline Field GF(std::uint64_t p) { return Field::prime(p); }

inline Scalar sc(const Field& f, const std::string& text) { return Scalar::parse(f, text); }

inline Vec vec_of(const Field& f, const std::vector<std::string>& entries) {
  Vec v;
  v.reserve(entries.size());
  for (const auto& e : entries) v.push_back(Scalar::parse(f, e));
  return v;
}

inline Matrix matrix_of(const Field& f, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar::parse(f, rows[i][j]));
  return m;
}

/// Uniform-ish random scalar: small integers over the rationals, uniform
/// representative over GF(p).
inline Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_rational()) {
    std::uniform_int_distribution<int> d(-3, 3);
    return Scalar::of(f, d(rng));
  }
  std::uniform_int_distribution<std::uint64_t> d(0, f.characteristic() - 1);
  return Scalar::of(f, static_cast<long long>(d(rng)));
}

inline Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
  return v;
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(f, rng);
  return m;
}

/// Random linear combination of the basis of a map subspace.
inline LinearMap random_member(const MapSubspace& space, const Field& f, std::mt19937_64& rng) {
  LinearMap m(f, space.algebra_dim, space.algebra_dim);
  for (const auto& b : space.basis) {
    const Scalar c = random_scalar(f, rng);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) += c * b.at(i, j);
  }
  return m;
}

}  // namespace testutil
