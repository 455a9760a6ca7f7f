#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "centrosym/tensor.hpp"

namespace centro {

/// Orientation follows the defining identity A B = I: A is a left inverse of
/// B and B is a right inverse of A.
enum class Side { left, right };

std::string_view to_string(Side side) noexcept;

struct InverseResult {
  /// Empty when no inverse was found; `diagnostic` then says why.
  std::optional<DenseTensor> inverse;
  Side side = Side::left;
  std::size_t order = 2;
  /// max |(product - I)| over all entries; infinity when nothing was formed.
  double residual = 0.0;
  bool centro_verdict = false;
  /// 1-norm condition estimate of the recovered matrix (recovery only).
  std::optional<double> condition;
  std::string diagnostic;

  bool found() const noexcept { return inverse.has_value(); }
};

/// Residual of a claimed inverse. Side::left: `candidate` * `tensor` = I.
/// Side::right: `tensor` * `candidate` = I.
double verify_inverse(const DenseTensor& tensor, const DenseTensor& candidate, Side side);

/// Order-k diagonal B with B A = I for a diagonal centrosymmetric A:
/// b_{i..i} = 1 / a_{i..i}^{k-1}. Throws DomainError on a zero diagonal entry
/// and InputError when A is not diagonal and centrosymmetric.
InverseResult diagonal_left_inverse(const DenseTensor& a, std::size_t k);

/// Order-k diagonal B with A B = I: b_{i..i} = a_{i..i}^{-1/(m-1)}, the real
/// root. Odd m requires positive diagonal entries (DomainError otherwise).
InverseResult diagonal_right_inverse(const DenseTensor& a, std::size_t k);

struct RecoveryOptions {
  /// Candidate matrices with a larger 1-norm condition estimate count as
  /// singular.
  double max_condition = 1e12;
  /// Product residual must stay below this times the product's entry scale.
  double residual_tol = 1e-10;
};

/// Order-2 left inverse B (B A = I) of a centrosymmetric A. Any such B
/// satisfies A = B^{-1} I, so a_{ij..j} = (B^{-1})_{ij}; the candidate is the
/// inverse of that matrix, accepted only if the product verifies.
InverseResult recover_order2_left_inverse(const DenseTensor& a, const RecoveryOptions& options = {});

/// Order-2 right inverse B (A B = I) of a centrosymmetric A of even order.
/// Here a_{ij..j} = ((B^{-1})_{ij})^{m-1} and m-1 is odd, so the real root
/// recovers B^{-1}. Throws InputError for odd m.
InverseResult recover_order2_right_inverse(const DenseTensor& a, const RecoveryOptions& options = {});

/// True when every off-diagonal entry is at most 1e-14 * max(1, max|a|).
bool is_diagonal(const DenseTensor& a);

/// Dispatch used by front ends: diagonal tensors get the order-k diagonal
/// construction, anything else the order-2 recovery (k must be 2).
InverseResult find_inverse(const DenseTensor& a, Side side, std::size_t k);

/// sign(v) |v|^{1/p} for odd p.
double real_root(double v, unsigned p);

}  // namespace centro
