#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "centrosym/tensor.hpp"

namespace centro {

/// Reflection symmetry of a vector under J (reversal of components).
enum class VectorSymmetry { symmetric, skew_symmetric, abs_symmetric, neither };

std::string_view to_string(VectorSymmetry s) noexcept;

/// Real H-eigenpair: A x^{m-1} = lambda x^{[m-1]}.
struct EigenPair {
  double lambda = 0.0;
  Vector x;
  /// max_i |(A x^{m-1})_i - lambda x_i^{m-1}| for the stored x.
  double residual = 0.0;
  VectorSymmetry classification = VectorSymmetry::neither;
};

struct SolverStats {
  std::size_t starts = 0;
  std::size_t converged = 0;
  /// Converged pairs merged into an earlier one.
  std::size_t deduplicated = 0;
};

struct EigenSet {
  std::vector<EigenPair> pairs;
  SolverStats stats;
};

struct SolverOptions {
  std::size_t starts = 50;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  double class_tol = 1e-8;
  std::size_t max_iterations = 100;
  double dedup_lambda = 1e-8;
  double dedup_vector = 1e-6;
};

/// max_i |(A x^{m-1})_i - lambda x_i^{m-1}|. Throws InputError for x = 0 or
/// mismatched dimensions.
double residual(const DenseTensor& a, double lambda, const Vector& x);

/// Tests Jx = x, then Jx = -x, then J|x| = |x| (max-norm within `tol`).
VectorSymmetry classify_vector(const Vector& x, double tol = 1e-8);

/// Unit Euclidean norm, first component with |x_i| > 1e-8 made positive.
Vector canonicalize(const Vector& x);

/// Builds a pair for (lambda, x) with x canonicalized; residual and
/// classification are computed, not assumed.
EigenPair make_pair(const DenseTensor& a, double lambda, const Vector& x, double class_tol = 1e-8);

/// The two pairs every centrosymmetric dimension-2 tensor has:
/// lambda_e = sum_{i2..im} a_{1 i2..im} with x = (1,1)/sqrt2, and
/// lambda_u = sum a_{1 i2..im} (-1)^{i2+..+im+m-1} with x = (1,-1)/sqrt2.
/// Throws InputError unless `a` is centrosymmetric of dimension 2.
std::array<EigenPair, 2> closed_form_dim2(const DenseTensor& a);

/// For centrosymmetric dimension-3 tensors of even order:
/// lambda = sum_{i2..im in {1,3}} a_{1 i2..im} (-1)^{#(i_j = 3)} with
/// x = (1,0,-1)/sqrt2.
EigenPair closed_form_dim3_even(const DenseTensor& a);

/// Multistart damped Newton on
///   F(x, lambda) = [A x^{m-1} - lambda x^{[m-1]};  (x.x - 1)/2].
/// Converged pairs are canonicalized, sorted by (lambda, x) and deduplicated.
/// Finding every real eigenpair is not guaranteed.
EigenSet solve_eigen(const DenseTensor& a, const SolverOptions& options = {});

/// (lambda, Jx) for centrosymmetric A, (-lambda, Jx) for skew A with
/// lambda != 0. The reflected pair is re-verified against `tol`; a failure
/// throws TheoremViolation. Unstructured A throws InputError.
EigenPair reflect_pair(const DenseTensor& a, const EigenPair& pair, double tol = 1e-10);

}  // namespace centro
