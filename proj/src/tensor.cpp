#include "centrosym/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "centrosym/errors.hpp"

namespace centro {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      throw InputError(std::string(what) + ": non-finite value at position " +
                       std::to_string(k));
    }
  }
}

void require_same_shape(const DenseTensor& a, const DenseTensor& b, const char* op) {
  if (!a.same_shape(b)) {
    throw InputError(std::string(op) + ": shape mismatch (order " +
                     std::to_string(a.order()) + " dim " + std::to_string(a.dim()) +
                     " vs order " + std::to_string(b.order()) + " dim " +
                     std::to_string(b.dim()) + ")");
  }
}

void require_dim(const DenseTensor& a, const Vector& x, const char* op) {
  if (a.dim() != x.dim()) {
    throw InputError(std::string(op) + ": tensor dim " + std::to_string(a.dim()) +
                     " but vector dim " + std::to_string(x.dim()));
  }
}

// x (x) x (x) ... (x) x with p factors, row-major. Products accumulate left to
// right over the slots.
std::vector<double> outer_power(const Vector& x, std::size_t p) {
  std::vector<double> w{1.0};
  for (std::size_t slot = 0; slot < p; ++slot) {
    std::vector<double> next;
    next.reserve(w.size() * x.dim());
    for (double head : w) {
      for (double xi : x.components()) next.push_back(head * xi);
    }
    w = std::move(next);
  }
  return w;
}

template <class Op>
DenseTensor zip(const DenseTensor& a, const DenseTensor& b, const char* name, Op op) {
  require_same_shape(a, b, name);
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = op(a[k], b[k]);
  return DenseTensor(a.order(), a.dim(), std::move(out));
}

}  // namespace

void CompensatedSum::add(double v) noexcept {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v)) {
    carry_ += (sum_ - t) + v;
  } else {
    carry_ += (v - t) + sum_;
  }
  sum_ = t;
}

std::size_t checked_power(std::size_t dim, std::size_t order) {
  std::size_t result = 1;
  for (std::size_t k = 0; k < order; ++k) {
    if (dim != 0 && result > std::numeric_limits<std::size_t>::max() / dim) {
      throw ResourceError("entry count " + std::to_string(dim) + "^" +
                          std::to_string(order) + " overflows");
    }
    result *= dim;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Vector

Vector::Vector(std::size_t dim, double fill) : components_(dim, fill) {
  require_finite(components_, "Vector");
}

Vector::Vector(std::vector<double> components) : components_(std::move(components)) {
  require_finite(components_, "Vector");
}

Vector::Vector(std::initializer_list<double> components) : components_(components) {
  require_finite(components_, "Vector");
}

// ---------------------------------------------------------------------------
// DenseTensor

DenseTensor::DenseTensor(std::size_t order, std::size_t dim)
    : order_(order), dim_(dim) {
  if (order == 0 || dim == 0) throw InputError("DenseTensor: order and dim must be >= 1");
  entries_.assign(checked_power(dim, order), 0.0);
}

DenseTensor::DenseTensor(std::size_t order, std::size_t dim, std::vector<double> entries)
    : order_(order), dim_(dim), entries_(std::move(entries)) {
  if (order == 0 || dim == 0) throw InputError("DenseTensor: order and dim must be >= 1");
  const std::size_t expected = checked_power(dim, order);
  if (entries_.size() != expected) {
    throw InputError("DenseTensor: expected " + std::to_string(expected) +
                     " entries, got " + std::to_string(entries_.size()));
  }
  require_finite(entries_, "DenseTensor");
}

DenseTensor DenseTensor::identity(std::size_t order, std::size_t dim) {
  DenseTensor t(order, dim);
  // Offset of (i, i, ..., i) is i * (1 + n + ... + n^{m-1}).
  std::size_t stride = 0;
  for (std::size_t k = 0, p = 1; k < order; ++k, p *= dim) stride += p;
  for (std::size_t i = 0; i < dim; ++i) t.entries_[i * stride] = 1.0;
  return t;
}

DenseTensor DenseTensor::filled(std::size_t order, std::size_t dim, double value) {
  return DenseTensor(order, dim, std::vector<double>(checked_power(dim, order), value));
}

DenseTensor DenseTensor::matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t n = rows.size();
  std::vector<double> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InputError("DenseTensor::matrix: rows must be square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return DenseTensor(2, n, std::move(entries));
}

DenseTensor DenseTensor::from_vector(const Vector& v) {
  return DenseTensor(1, v.dim(), {v.components().begin(), v.components().end()});
}

std::size_t DenseTensor::offset_of(std::span<const std::size_t> index) const {
  if (index.size() != order_) throw InputError("DenseTensor: index arity mismatch");
  std::size_t offset = 0;
  for (std::size_t i : index) {
    if (i >= dim_) throw InputError("DenseTensor: index out of range");
    offset = offset * dim_ + i;
  }
  return offset;
}

MultiIndex DenseTensor::index_of(std::size_t offset) const {
  MultiIndex index(order_);
  for (std::size_t j = order_; j-- > 0;) {
    index[j] = offset % dim_;
    offset /= dim_;
  }
  return index;
}

double DenseTensor::at(std::span<const std::size_t> index) const {
  return entries_[offset_of(index)];
}

double DenseTensor::max_abs() const noexcept {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::abs(v));
  return m;
}

// ---------------------------------------------------------------------------
// Operations

Vector flip_vector(const Vector& x) {
  std::vector<double> out(x.components().rbegin(), x.components().rend());
  return Vector(std::move(out));
}

DenseTensor reverse_tensor(const DenseTensor& a) {
  std::vector<double> out(a.entries().rbegin(), a.entries().rend());
  return DenseTensor(a.order(), a.dim(), std::move(out));
}

Vector apply(const DenseTensor& a, const Vector& x) {
  require_dim(a, x, "apply");
  if (a.order() < 2) throw InputError("apply: tensor order must be >= 2");
  const std::vector<double> w = outer_power(x, a.order() - 1);
  const std::size_t n = a.dim();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    CompensatedSum acc;
    const std::size_t base = i * w.size();
    for (std::size_t o = 0; o < w.size(); ++o) acc.add(a[base + o] * w[o]);
    out[i] = acc.value();
  }
  return Vector(std::move(out));
}

double poly_eval(const DenseTensor& a, const Vector& x) {
  require_dim(a, x, "poly_eval");
  const std::vector<double> w = outer_power(x, a.order());
  CompensatedSum acc;
  for (std::size_t o = 0; o < w.size(); ++o) acc.add(a[o] * w[o]);
  return acc.value();
}

Vector power_vector(const Vector& x, unsigned p) {
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    double v = 1.0;
    for (unsigned k = 0; k < p; ++k) v *= x[i];
    out[i] = v;
  }
  return Vector(std::move(out));
}

Vector row_sums(const DenseTensor& a) {
  const std::size_t n = a.dim();
  const std::size_t row = a.size() / n;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    CompensatedSum acc;
    for (std::size_t o = 0; o < row; ++o) acc.add(a[i * row + o]);
    out[i] = acc.value();
  }
  return Vector(std::move(out));
}

DenseTensor hadamard(const DenseTensor& a, const DenseTensor& b) {
  return zip(a, b, "hadamard", [](double u, double v) { return u * v; });
}

DenseTensor add(const DenseTensor& a, const DenseTensor& b) {
  return zip(a, b, "add", [](double u, double v) { return u + v; });
}

DenseTensor sub(const DenseTensor& a, const DenseTensor& b) {
  return zip(a, b, "sub", [](double u, double v) { return u - v; });
}

DenseTensor scale(const DenseTensor& a, double t) {
  std::vector<double> out(a.entries().begin(), a.entries().end());
  for (double& v : out) v *= t;
  return DenseTensor(a.order(), a.dim(), std::move(out));
}

double dot(const Vector& x, const Vector& y) {
  if (x.dim() != y.dim()) throw InputError("dot: dimension mismatch");
  CompensatedSum acc;
  for (std::size_t i = 0; i < x.dim(); ++i) acc.add(x[i] * y[i]);
  return acc.value();
}

double norm2(const Vector& x) { return std::sqrt(dot(x, x)); }

Vector scale(const Vector& x, double t) {
  std::vector<double> out(x.components().begin(), x.components().end());
  for (double& v : out) v *= t;
  return Vector(std::move(out));
}

Vector sub(const Vector& x, const Vector& y) {
  if (x.dim() != y.dim()) throw InputError("sub: dimension mismatch");
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] - y[i];
  return Vector(std::move(out));
}

double max_abs(const Vector& x) noexcept {
  double m = 0.0;
  for (double v : x.components()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const DenseTensor& a, const DenseTensor& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace centro
