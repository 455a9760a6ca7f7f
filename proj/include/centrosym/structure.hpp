#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "centrosym/product.hpp"
#include "centrosym/tensor.hpp"

namespace centro {

enum class Verdict { centrosymmetric, skew_centrosymmetric, both, neither };

std::string_view to_string(Verdict v) noexcept;

struct StructureReport {
  Verdict verdict = Verdict::neither;
  /// Deviation for the reported verdict; the centrosymmetric deviation when
  /// the verdict is `neither`.
  double max_violation = 0.0;
  /// 1-based multi-index where that deviation is largest.
  MultiIndex worst_index;
  double tolerance_used = 0.0;

  bool is_centro() const noexcept {
    return verdict == Verdict::centrosymmetric || verdict == Verdict::both;
  }
  bool is_skew() const noexcept {
    return verdict == Verdict::skew_centrosymmetric || verdict == Verdict::both;
  }
};

/// 1e-12 * max(1, max|a|).
double default_tolerance(const DenseTensor& a);

/// Compares `a` with its reversal A^c entry by entry.
StructureReport check_structure(const DenseTensor& a, std::optional<double> tol = {});
/// Same verdict, computed by forming J A J with general products.
StructureReport check_via_J(const DenseTensor& a, std::optional<double> tol = {});
/// Same verdict, computed by comparing A J against +-J A.
StructureReport check_commutation(const DenseTensor& a, std::optional<double> tol = {});

struct Decomposition {
  DenseTensor centro;
  DenseTensor skew;
};

/// A = (A + A^c)/2 + (A - A^c)/2.
Decomposition decompose(const DenseTensor& a);

enum class Kind { centro, skew, general };

/// Uniform[-1, 1] entries mirrored to the requested structure. For skew
/// tensors of odd dimension the central entry (its own mirror image) is 0.
/// Deterministic in `seed`.
DenseTensor random_structured(std::size_t order, std::size_t dim, Kind kind, std::uint64_t seed);

struct RowSumCheck {
  bool holds = true;
  /// 1-based row index of the first failing row.
  std::optional<std::size_t> witness;
  double max_gap = 0.0;
};

/// Checks r_i = r_{n-i+1} (centro) or r_i = -r_{n-i+1} (skew), and for odd n
/// with skew structure that the central row sum vanishes. Gaps are measured
/// against tol * max(1, max_i sum |a_{i...}|).
RowSumCheck verify_row_sum_symmetry(const DenseTensor& a, Parity assumed, double tol = 1e-12);
/// Classifies `a` first; throws InputError when it is neither centro nor skew.
RowSumCheck verify_row_sum_symmetry(const DenseTensor& a, double tol = 1e-12);

struct ReflectionCheck {
  bool holds = true;
  std::size_t trials = 0;
  /// Largest |f(Jx) -+ f(x)| / max(1, |f(x)|) seen.
  double worst_gap = 0.0;
};

/// Samples `trials` vectors in [-1,1]^n and checks f(Jx) = f(x) for centro
/// tensors, f(Jx) = -f(x) for skew ones, f(x) = A x^m.
ReflectionCheck verify_poly_reflection(const DenseTensor& a, std::size_t trials,
                                       std::uint64_t seed, double tol = 1e-10);

}  // namespace centro
