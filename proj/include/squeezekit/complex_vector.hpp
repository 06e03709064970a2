#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace squeezekit {

using Complex = std::complex<double>;

/// A point of C^n. Always has dim >= 1 and finite entries.
class ComplexVector {
 public:
  explicit ComplexVector(std::vector<Complex> entries);
  ComplexVector(std::initializer_list<Complex> entries);

  static ComplexVector zeros(std::size_t dim);
  /// Builds a vector from interleaved (re, im) pairs.
  static ComplexVector from_interleaved(std::span<const double> values);

  std::size_t dim() const { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Complex>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::vector<double> interleaved() const;

  double norm2() const;
  double norm_inf() const;
  bool is_zero() const;

  ComplexVector& operator+=(const ComplexVector& other);
  ComplexVector& operator-=(const ComplexVector& other);
  ComplexVector& operator*=(Complex factor);

  friend ComplexVector operator+(ComplexVector a, const ComplexVector& b) { return a += b; }
  friend ComplexVector operator-(ComplexVector a, const ComplexVector& b) { return a -= b; }
  friend ComplexVector operator*(Complex c, ComplexVector a) { return a *= c; }
  friend ComplexVector operator*(ComplexVector a, Complex c) { return a *= c; }
  friend ComplexVector operator/(ComplexVector a, Complex c) { return a *= (1.0 / c); }
  friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

 private:
  struct Unchecked {};
  ComplexVector(Unchecked, std::vector<Complex> entries) : entries_(std::move(entries)) {}

  std::vector<Complex> entries_;
};

/// Hermitian product sum_i a_i conj(b_i).
Complex inner(const ComplexVector& a, const ComplexVector& b);

double distance2(const ComplexVector& a, const ComplexVector& b);

/// Throws ArgumentError unless `z.dim() == dim`.
void require_dim(const ComplexVector& z, std::size_t dim, const char* what);

std::string to_string(const ComplexVector& z);

}  // namespace squeezekit
