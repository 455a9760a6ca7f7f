#include "centrosym/inverse.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "centrosym/errors.hpp"
#include "centrosym/product.hpp"
#include "centrosym/structure.hpp"

namespace centro {

namespace {

// Offset step between consecutive diagonal entries (i,..,i) -> (i+1,..,i+1).
std::size_t diagonal_stride(std::size_t order, std::size_t dim) {
  std::size_t stride = 0;
  for (std::size_t k = 0, p = 1; k < order; ++k, p *= dim) stride += p;
  return stride;
}

std::vector<double> diagonal_of(const DenseTensor& a) {
  const std::size_t stride = diagonal_stride(a.order(), a.dim());
  std::vector<double> d(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) d[i] = a[i * stride];
  return d;
}

void require_diagonal_centro(const DenseTensor& a, const char* op) {
  if (a.order() < 2) throw InputError(std::string(op) + ": tensor order must be >= 2");
  if (!is_diagonal(a)) throw InputError(std::string(op) + ": tensor is not diagonal");
  if (!check_structure(a).is_centro()) {
    throw InputError(std::string(op) + ": tensor is not centrosymmetric");
  }
}

DenseTensor diagonal_tensor(std::size_t order, const std::vector<double>& diag) {
  const std::size_t n = diag.size();
  std::vector<double> entries(checked_power(n, order), 0.0);
  const std::size_t stride = diagonal_stride(order, n);
  for (std::size_t i = 0; i < n; ++i) entries[i * stride] = diag[i];
  return DenseTensor(order, n, std::move(entries));
}

std::size_t product_order(const DenseTensor& left, const DenseTensor& right) {
  return (left.order() - 1) * (right.order() - 1) + 1;
}

Eigen::MatrixXd to_eigen(std::size_t n, const std::vector<double>& row_major) {
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row_major[i * n + j];
  return m;
}

// a_{i j j .. j} for all i, j, row-major.
std::vector<double> leading_slice(const DenseTensor& a) {
  const std::size_t n = a.dim();
  const std::size_t tail_stride = diagonal_stride(a.order() - 1, n);
  const std::size_t row = a.size() / n;
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a[i * row + j * tail_stride];
  return m;
}

InverseResult recover(const DenseTensor& a, Side side, const std::vector<double>& inverse_entries,
                      const RecoveryOptions& options) {
  const std::size_t n = a.dim();
  InverseResult result;
  result.side = side;
  result.order = 2;
  result.residual = std::numeric_limits<double>::infinity();

  const Eigen::MatrixXd m = to_eigen(n, inverse_entries);
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  const double rcond = lu.rcond();
  result.condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(rcond * options.max_condition >= 1.0)) {
    result.diagnostic = "candidate matrix is numerically singular";
    return result;
  }
  const Eigen::MatrixXd inv = lu.inverse();
  std::vector<double> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = inv(i, j);
  if (!std::all_of(entries.begin(), entries.end(), [](double v) { return std::isfinite(v); })) {
    result.diagnostic = "candidate matrix is numerically singular";
    return result;
  }
  DenseTensor b(2, n, std::move(entries));

  result.residual = verify_inverse(a, b, side);
  const double bmax = std::max(1.0, b.max_abs());
  const double amax = std::max(1.0, a.max_abs());
  // Entry scale of the verifying product.
  const double scale = side == Side::left
                           ? static_cast<double>(n) * amax * bmax
                           : static_cast<double>(a.size() / n) * amax *
                                 std::pow(bmax, static_cast<double>(a.order() - 1));
  if (!(result.residual <= options.residual_tol * scale)) {
    result.diagnostic = std::string("tensor admits no order-2 ") +
                        (side == Side::left ? "left" : "right") + " inverse";
    return result;
  }
  result.centro_verdict = check_structure(b).is_centro();
  result.inverse = std::move(b);
  return result;
}

}  // namespace

std::string_view to_string(Side side) noexcept { return side == Side::left ? "left" : "right"; }

bool is_diagonal(const DenseTensor& a) {
  const std::size_t stride = diagonal_stride(a.order(), a.dim());
  const double limit = 1e-14 * std::max(1.0, a.max_abs());
  for (std::size_t o = 0; o < a.size(); ++o) {
    if (o % stride != 0 && std::abs(a[o]) > limit) return false;
  }
  return true;
}

InverseResult find_inverse(const DenseTensor& a, Side side, std::size_t k) {
  if (a.order() >= 2 && is_diagonal(a)) {
    return side == Side::left ? diagonal_left_inverse(a, k) : diagonal_right_inverse(a, k);
  }
  if (k != 2) throw InputError("inverse: order > 2 is only available for diagonal tensors");
  return side == Side::left ? recover_order2_left_inverse(a) : recover_order2_right_inverse(a);
}

double real_root(double v, unsigned p) {
  return std::copysign(std::pow(std::abs(v), 1.0 / static_cast<double>(p)), v);
}

double verify_inverse(const DenseTensor& tensor, const DenseTensor& candidate, Side side) {
  const DenseTensor& left = side == Side::left ? candidate : tensor;
  const DenseTensor& right = side == Side::left ? tensor : candidate;
  const DenseTensor product = shao_product(left, right);
  return max_abs_diff(product, DenseTensor::identity(product_order(left, right), product.dim()));
}

InverseResult diagonal_left_inverse(const DenseTensor& a, std::size_t k) {
  if (k < 2) throw InputError("diagonal_left_inverse: inverse order must be >= 2");
  require_diagonal_centro(a, "diagonal_left_inverse");
  std::vector<double> diag = diagonal_of(a);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == 0.0) {
      throw DomainError("no left inverse: diagonal entry " + std::to_string(i + 1) + " is zero");
    }
    diag[i] = 1.0 / std::pow(diag[i], static_cast<double>(k - 1));
  }
  InverseResult result;
  result.side = Side::left;
  result.order = k;
  result.inverse = diagonal_tensor(k, diag);
  result.residual = verify_inverse(a, *result.inverse, Side::left);
  result.centro_verdict = check_structure(*result.inverse).is_centro();
  return result;
}

InverseResult diagonal_right_inverse(const DenseTensor& a, std::size_t k) {
  if (k < 2) throw InputError("diagonal_right_inverse: inverse order must be >= 2");
  require_diagonal_centro(a, "diagonal_right_inverse");
  const unsigned root = static_cast<unsigned>(a.order() - 1);
  const bool odd_order = a.order() % 2 == 1;
  std::vector<double> diag = diagonal_of(a);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == 0.0) {
      throw DomainError("no right inverse: diagonal entry " + std::to_string(i + 1) + " is zero");
    }
    if (odd_order && diag[i] < 0.0) {
      throw DomainError("no real right inverse: odd order with negative diagonal entry " +
                        std::to_string(i + 1));
    }
    diag[i] = real_root(1.0 / diag[i], root);
  }
  InverseResult result;
  result.side = Side::right;
  result.order = k;
  result.inverse = diagonal_tensor(k, diag);
  result.residual = verify_inverse(a, *result.inverse, Side::right);
  result.centro_verdict = check_structure(*result.inverse).is_centro();
  return result;
}

InverseResult recover_order2_left_inverse(const DenseTensor& a, const RecoveryOptions& options) {
  if (a.order() < 2) throw InputError("recover_order2_left_inverse: tensor order must be >= 2");
  if (!check_structure(a).is_centro()) {
    throw InputError("recover_order2_left_inverse: tensor is not centrosymmetric");
  }
  return recover(a, Side::left, leading_slice(a), options);
}

InverseResult recover_order2_right_inverse(const DenseTensor& a, const RecoveryOptions& options) {
  if (a.order() < 2 || a.order() % 2 == 1) {
    throw InputError("recover_order2_right_inverse: tensor order must be even");
  }
  if (!check_structure(a).is_centro()) {
    throw InputError("recover_order2_right_inverse: tensor is not centrosymmetric");
  }
  std::vector<double> slice = leading_slice(a);
  const unsigned root = static_cast<unsigned>(a.order() - 1);
  for (double& v : slice) v = real_root(v, root);
  return recover(a, Side::right, slice, options);
}

}  // namespace centro
