#include "centrosym/product.hpp"

#include <string>
#include <vector>

#include "centrosym/errors.hpp"

namespace centro {

std::size_t ProductShape::result_size() const { return checked_power(dim, result_order()); }

DenseTensor shao_product(const DenseTensor& a, const DenseTensor& b,
                         const ProductOptions& options) {
  if (a.order() < 2) throw InputError("shao_product: left factor must have order >= 2");
  if (a.dim() != b.dim()) {
    throw InputError("shao_product: dimension mismatch (" + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()) + ")");
  }
  const ProductShape shape{a.order(), b.order(), a.dim()};
  const std::size_t n = shape.dim;
  const std::size_t result_size = shape.result_size();
  if (result_size > options.max_entries || a.size() > options.max_entries) {
    throw ResourceError("shao_product: result of order " +
                        std::to_string(shape.result_order()) + " and dim " +
                        std::to_string(n) + " exceeds the cap of " +
                        std::to_string(options.max_entries) + " entries");
  }

  // B as an n x q matrix, q = n^{k-1}.
  const std::size_t q = b.size() / n;

  // Contract trailing modes one at a time. Before step p the working tensor
  // has layout [n] x [q]^{p} x [n]^{m-1-p}; the contracted mode has stride
  // `tail` = n^{m-2-p} and is replaced by a block of size q.
  std::vector<double> work(a.entries().begin(), a.entries().end());
  std::size_t head = n;  // product of dims before the contracted mode
  for (std::size_t p = 0; p + 1 < a.order(); ++p) {
    const std::size_t tail = work.size() / (head * n);
    std::vector<double> next(head * q * tail);
    for (std::size_t h = 0; h < head; ++h) {
      for (std::size_t alpha = 0; alpha < q; ++alpha) {
        for (std::size_t t = 0; t < tail; ++t) {
          CompensatedSum acc;
          for (std::size_t j = 0; j < n; ++j) {
            acc.add(work[(h * n + j) * tail + t] * b[j * q + alpha]);
          }
          next[(h * q + alpha) * tail + t] = acc.value();
        }
      }
    }
    work = std::move(next);
    head *= q;
  }
  return DenseTensor(shape.result_order(), n, std::move(work));
}

DenseTensor matrix_times_tensor(const DenseTensor& matrix, const DenseTensor& a,
                                const ProductOptions& options) {
  if (matrix.order() != 2) throw InputError("matrix_times_tensor: left factor must be a matrix");
  return shao_product(matrix, a, options);
}

DenseTensor tensor_times_matrix(const DenseTensor& a, const DenseTensor& matrix,
                                const ProductOptions& options) {
  if (matrix.order() != 2) throw InputError("tensor_times_matrix: right factor must be a matrix");
  return shao_product(a, matrix, options);
}

DenseTensor chain_product(std::span<const DenseTensor> factors, const ProductOptions& options) {
  if (factors.size() < 2) throw InputError("chain_product: need at least two factors");
  DenseTensor acc = shao_product(factors[0], factors[1], options);
  for (std::size_t s = 2; s < factors.size(); ++s) {
    acc = shao_product(acc, factors[s], options);
  }
  return acc;
}

Parity product_parity(Parity left, Parity right, std::size_t left_order) {
  const bool m_even = left_order % 2 == 0;
  if (left == Parity::centro && right == Parity::centro) return Parity::centro;
  if (left == Parity::skew && right == Parity::centro) return Parity::skew;
  if (left == Parity::centro) return m_even ? Parity::skew : Parity::centro;
  return m_even ? Parity::centro : Parity::skew;
}

DenseTensor exchange_matrix(std::size_t n) {
  if (n == 0) throw InputError("exchange_matrix: n must be >= 1");
  std::vector<double> entries(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + (n - 1 - i)] = 1.0;
  return DenseTensor(2, n, std::move(entries));
}

}  // namespace centro
