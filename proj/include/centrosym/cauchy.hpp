#pragma once

#include <cstddef>

#include "centrosym/tensor.hpp"

namespace centro {

/// Cauchy tensor of order m generated by c, with entries
/// 1 / (c_{i1} + ... + c_{im}).
struct CauchySpec {
  Vector generating;
  std::size_t order = 2;
};

/// Throws DomainError naming the first index multiset whose generating sum
/// has magnitude below 1e-14 * max(1, max|c_i|). Throws InputError for order 0
/// or an empty generating vector.
void validate(const CauchySpec& spec);

/// Dense form of the Cauchy tensor. Index sums add the generating values in
/// ascending order, so entries are bit-identical under any index permutation
/// and under reversal when c is a palindrome.
DenseTensor materialize(const CauchySpec& spec);

/// Jc = c within `tol` (vector-level test; no materialization).
bool cauchy_is_centro(const CauchySpec& spec, double tol = 1e-10);
/// Jc = -c within `tol` for even n; always false for odd n, where the central
/// diagonal entry 1/(m c_mid) would have to vanish. Does not check that the
/// spec can be materialized: for even m every skew c produces a zero sum.
bool cauchy_is_skew(const CauchySpec& spec, double tol = 1e-10);
/// Materializes C and checks both JC = C and CJ = C with general products.
bool cauchy_check_JC(const CauchySpec& spec, double tol = 1e-10);

/// Mirrors the first ceil(n/2) entries onto the back half.
Vector palindromize(const Vector& c);

}  // namespace centro
