#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace centro {

using MultiIndex = std::vector<std::size_t>;

/// Real vector of fixed dimension. Components are finite.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim, double fill = 0.0);
  explicit Vector(std::vector<double> components);
  Vector(std::initializer_list<double> components);

  std::size_t dim() const noexcept { return components_.size(); }
  std::span<const double> components() const noexcept { return components_; }
  double operator[](std::size_t i) const { return components_[i]; }

  static Vector ones(std::size_t dim) { return Vector(dim, 1.0); }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> components_;
};

/// Order-m, dimension-n real hypercubic tensor.
///
/// Entries are stored row-major with the last index varying fastest, so the
/// zero-based multi-index (i1, ..., im) lives at offset sum_j ij * n^(m-j).
/// A useful consequence: the fully reversed index (n-1-i1, ..., n-1-im)
/// lives at offset size()-1-offset.
class DenseTensor {
 public:
  /// Zero tensor.
  DenseTensor(std::size_t order, std::size_t dim);
  /// Takes ownership of `entries`; its length must be dim^order and every
  /// value finite.
  DenseTensor(std::size_t order, std::size_t dim, std::vector<double> entries);

  static DenseTensor identity(std::size_t order, std::size_t dim);
  static DenseTensor filled(std::size_t order, std::size_t dim, double value);
  /// Order-2 tensor from row-major nested rows.
  static DenseTensor matrix(std::initializer_list<std::initializer_list<double>> rows);
  /// Order-1 tensor holding the components of `v`.
  static DenseTensor from_vector(const Vector& v);

  std::size_t order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const double> entries() const noexcept { return entries_; }

  double operator[](std::size_t offset) const { return entries_[offset]; }
  /// Zero-based multi-index access.
  double at(std::span<const std::size_t> index) const;

  std::size_t offset_of(std::span<const std::size_t> index) const;
  MultiIndex index_of(std::size_t offset) const;

  bool same_shape(const DenseTensor& other) const noexcept {
    return order_ == other.order_ && dim_ == other.dim_;
  }
  double max_abs() const noexcept;

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

 private:
  std::size_t order_;
  std::size_t dim_;
  std::vector<double> entries_;
};

/// dim^order, throwing ResourceError on overflow.
std::size_t checked_power(std::size_t dim, std::size_t order);

Vector flip_vector(const Vector& x);
/// A^c: entry (i1..im) of the result is entry (n-i1+1 .. n-im+1) of `a`.
DenseTensor reverse_tensor(const DenseTensor& a);

/// A x^{m-1}: contracts every slot but the first with `x`.
Vector apply(const DenseTensor& a, const Vector& x);
/// A x^m, the homogeneous form attached to `a`.
double poly_eval(const DenseTensor& a, const Vector& x);
Vector power_vector(const Vector& x, unsigned p);
Vector row_sums(const DenseTensor& a);

DenseTensor hadamard(const DenseTensor& a, const DenseTensor& b);
DenseTensor add(const DenseTensor& a, const DenseTensor& b);
DenseTensor sub(const DenseTensor& a, const DenseTensor& b);
DenseTensor scale(const DenseTensor& a, double t);

double dot(const Vector& x, const Vector& y);
double norm2(const Vector& x);
Vector scale(const Vector& x, double t);
Vector sub(const Vector& x, const Vector& y);
double max_abs(const Vector& x) noexcept;
double max_abs_diff(const DenseTensor& a, const DenseTensor& b);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) noexcept;
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace centro
