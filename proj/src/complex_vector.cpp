#include "squeezekit/complex_vector.hpp"

#include <cmath>
#include <sstream>

#include "squeezekit/errors.hpp"

namespace squeezekit {

namespace {

void validate(const std::vector<Complex>& entries) {
  if (entries.empty()) throw ArgumentError("ComplexVector: dimension must be at least 1");
  for (const auto& c : entries) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw ArgumentError("ComplexVector: entries must be finite");
  }
}

}  // namespace

ComplexVector::ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  validate(entries_);
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries) : entries_(entries) {
  validate(entries_);
}

ComplexVector ComplexVector::zeros(std::size_t dim) {
  if (dim == 0) throw ArgumentError("ComplexVector: dimension must be at least 1");
  return ComplexVector(Unchecked{}, std::vector<Complex>(dim));
}

ComplexVector ComplexVector::from_interleaved(std::span<const double> values) {
  if (values.size() % 2 != 0)
    throw ArgumentError("ComplexVector: interleaved input needs an even number of reals");
  std::vector<Complex> out;
  out.reserve(values.size() / 2);
  for (std::size_t i = 0; i < values.size(); i += 2) out.emplace_back(values[i], values[i + 1]);
  return ComplexVector(std::move(out));
}

std::vector<double> ComplexVector::interleaved() const {
  std::vector<double> out;
  out.reserve(2 * entries_.size());
  for (const auto& c : entries_) {
    out.push_back(c.real());
    out.push_back(c.imag());
  }
  return out;
}

double ComplexVector::norm2() const {
  double s = 0.0;
  for (const auto& c : entries_) s += std::norm(c);
  return std::sqrt(s);
}

double ComplexVector::norm_inf() const {
  double m = 0.0;
  for (const auto& c : entries_) m = std::max(m, std::abs(c));
  return m;
}

bool ComplexVector::is_zero() const {
  for (const auto& c : entries_)
    if (c != Complex{}) return false;
  return true;
}

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
  require_dim(other, dim(), "ComplexVector +=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& other) {
  require_dim(other, dim(), "ComplexVector -=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexVector& ComplexVector::operator*=(Complex factor) {
  for (auto& c : entries_) c *= factor;
  return *this;
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  require_dim(b, a.dim(), "inner");
  Complex s{};
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

double distance2(const ComplexVector& a, const ComplexVector& b) { return (a - b).norm2(); }

void require_dim(const ComplexVector& z, std::size_t dim, const char* what) {
  if (z.dim() != dim) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (expected " << dim << ", got " << z.dim() << ")";
    throw ArgumentError(msg.str());
  }
}

std::string to_string(const ComplexVector& z) {
  std::ostringstream out;
  out.precision(17);
  out << "(";
  for (std::size_t i = 0; i < z.dim(); ++i) {
    if (i) out << ", ";
    out << z[i].real() << (z[i].imag() < 0 ? "-" : "+") << std::abs(z[i].imag()) << "i";
  }
  out << ")";
  return out.str();
}

}  // namespace squeezekit
