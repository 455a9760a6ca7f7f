#pragma once

#include <cstddef>
#include <span>

#include "centrosym/tensor.hpp"

namespace centro {

/// Shape bookkeeping for the general product of an order-m tensor with an
/// order-k tensor of the same dimension.
struct ProductShape {
  std::size_t left_order;
  std::size_t right_order;
  std::size_t dim;

  std::size_t result_order() const noexcept { return (left_order - 1) * (right_order - 1) + 1; }
  /// dim^result_order(); throws ResourceError on overflow.
  std::size_t result_size() const;
};

struct ProductOptions {
  /// Largest entry count any result (or intermediate) may have.
  std::size_t max_entries = std::size_t{1} << 26;
};

/// General tensor product AB of an order-m (m >= 2) tensor with an order-k
/// (k >= 1) tensor:
///
///   c_{i a1 ... a_{m-1}} = sum_{i2..im} a_{i i2..im} b_{i2 a1} ... b_{im a_{m-1}}
///
/// where each a_j runs over (k-1)-multi-indices. The result has order
/// (m-1)(k-1)+1. Evaluated as m-1 successive mode contractions with B viewed
/// as an n x n^{k-1} matrix.
DenseTensor shao_product(const DenseTensor& a, const DenseTensor& b,
                         const ProductOptions& options = {});

/// B * A for an n x n matrix B (order-2 tensor): acts on the leading index.
DenseTensor matrix_times_tensor(const DenseTensor& matrix, const DenseTensor& a,
                                const ProductOptions& options = {});
/// A * B for an n x n matrix B: acts on every trailing index.
DenseTensor tensor_times_matrix(const DenseTensor& a, const DenseTensor& matrix,
                                const ProductOptions& options = {});

/// Left-associated fold ((A1 A2) A3) ... As. Requires at least two factors.
DenseTensor chain_product(std::span<const DenseTensor> factors,
                          const ProductOptions& options = {});

enum class Parity { centro, skew };

/// Structure of AB predicted from the structures of A (order m) and B:
/// centro*centro is centro, skew*centro is skew, centro*skew flips with
/// (-1)^{m-1} and skew*skew with (-1)^m.
Parity product_parity(Parity left, Parity right, std::size_t left_order);

/// Exchange matrix J with J_{ij} = 1 iff i + j = n + 1 (1-based).
DenseTensor exchange_matrix(std::size_t n);

}  // namespace centro
