#include "centrosym/structure.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "centrosym/errors.hpp"

namespace centro {

namespace {

struct Deviation {
  double max = 0.0;
  std::size_t offset = 0;
};

// Largest |lhs[k] - sign * rhs[k]|, first offset on ties.
Deviation deviation(const DenseTensor& lhs, const DenseTensor& rhs, double sign) {
  Deviation d;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    const double gap = std::abs(lhs[k] - sign * rhs[k]);
    if (gap > d.max) {
      d.max = gap;
      d.offset = k;
    }
  }
  return d;
}

MultiIndex one_based(const DenseTensor& shape, std::size_t offset) {
  MultiIndex index = shape.index_of(offset);
  for (auto& i : index) ++i;
  return index;
}

StructureReport classify(const DenseTensor& shape, const Deviation& centro_dev,
                         const Deviation& skew_dev, double tol) {
  const bool centro_ok = centro_dev.max <= tol;
  const bool skew_ok = skew_dev.max <= tol;
  StructureReport report;
  report.tolerance_used = tol;
  const Deviation* shown = &centro_dev;
  if (centro_ok && skew_ok) {
    report.verdict = Verdict::both;
    if (skew_dev.max > centro_dev.max) shown = &skew_dev;
  } else if (centro_ok) {
    report.verdict = Verdict::centrosymmetric;
  } else if (skew_ok) {
    report.verdict = Verdict::skew_centrosymmetric;
    shown = &skew_dev;
  } else {
    report.verdict = Verdict::neither;
  }
  report.max_violation = shown->max;
  report.worst_index = one_based(shape, shown->offset);
  return report;
}

double resolve_tolerance(const DenseTensor& a, std::optional<double> tol) {
  if (!tol) return default_tolerance(a);
  if (!(*tol >= 0.0)) throw InputError("tolerance must be nonnegative");
  return *tol;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::centrosymmetric: return "centrosymmetric";
    case Verdict::skew_centrosymmetric: return "skew-centrosymmetric";
    case Verdict::both: return "both";
    case Verdict::neither: return "neither";
  }
  return "neither";
}

double default_tolerance(const DenseTensor& a) { return 1e-12 * std::max(1.0, a.max_abs()); }

StructureReport check_structure(const DenseTensor& a, std::optional<double> tol) {
  const double t = resolve_tolerance(a, tol);
  const DenseTensor rev = reverse_tensor(a);
  return classify(a, deviation(a, rev, 1.0), deviation(a, rev, -1.0), t);
}

StructureReport check_via_J(const DenseTensor& a, std::optional<double> tol) {
  const double t = resolve_tolerance(a, tol);
  const DenseTensor j = exchange_matrix(a.dim());
  if (a.order() == 1) {
    // (J a) J is undefined for order 1; compare J a with a.
    const DenseTensor ja = shao_product(j, a);
    return classify(a, deviation(ja, a, 1.0), deviation(ja, a, -1.0), t);
  }
  const DenseTensor jaj = shao_product(shao_product(j, a), j);
  return classify(a, deviation(jaj, a, 1.0), deviation(jaj, a, -1.0), t);
}

StructureReport check_commutation(const DenseTensor& a, std::optional<double> tol) {
  const double t = resolve_tolerance(a, tol);
  const DenseTensor j = exchange_matrix(a.dim());
  if (a.order() == 1) {
    // For vectors AJ is the empty-contraction identity and JA the flip.
    const DenseTensor ja = shao_product(j, a);
    return classify(a, deviation(a, ja, 1.0), deviation(a, ja, -1.0), t);
  }
  const DenseTensor aj = shao_product(a, j);
  const DenseTensor ja = shao_product(j, a);
  return classify(a, deviation(aj, ja, 1.0), deviation(aj, ja, -1.0), t);
}

Decomposition decompose(const DenseTensor& a) {
  const DenseTensor rev = reverse_tensor(a);
  std::vector<double> c(a.size()), s(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    c[k] = 0.5 * (a[k] + rev[k]);
    s[k] = 0.5 * (a[k] - rev[k]);
  }
  return {DenseTensor(a.order(), a.dim(), std::move(c)),
          DenseTensor(a.order(), a.dim(), std::move(s))};
}

DenseTensor random_structured(std::size_t order, std::size_t dim, Kind kind, std::uint64_t seed) {
  const std::size_t size = checked_power(dim, order);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> entries(size);
  if (kind == Kind::general) {
    for (double& v : entries) v = unit(rng);
    return DenseTensor(order, dim, std::move(entries));
  }
  const double sign = kind == Kind::centro ? 1.0 : -1.0;
  for (std::size_t k = 0; k < size; ++k) {
    const std::size_t mirror = size - 1 - k;
    if (k < mirror) {
      entries[k] = unit(rng);
      entries[mirror] = sign * entries[k];
    } else if (k == mirror) {
      entries[k] = kind == Kind::centro ? unit(rng) : 0.0;
    }
  }
  return DenseTensor(order, dim, std::move(entries));
}

RowSumCheck verify_row_sum_symmetry(const DenseTensor& a, Parity assumed, double tol) {
  const Vector r = row_sums(a);
  const std::size_t n = a.dim();
  const std::size_t row = a.size() / n;
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double abs_sum = 0.0;
    for (std::size_t o = 0; o < row; ++o) abs_sum += std::abs(a[i * row + o]);
    scale = std::max(scale, abs_sum);
  }
  const double bound = tol * scale;
  const double sign = assumed == Parity::centro ? 1.0 : -1.0;

  RowSumCheck check;
  auto record = [&](std::size_t i, double gap) {
    check.max_gap = std::max(check.max_gap, gap);
    if (gap > bound && check.holds) {
      check.holds = false;
      check.witness = i + 1;
    }
  };
  for (std::size_t i = 0; i < n; ++i) record(i, std::abs(r[i] - sign * r[n - 1 - i]));
  if (assumed == Parity::skew && n % 2 == 1) record(n / 2, std::abs(r[n / 2]));
  return check;
}

RowSumCheck verify_row_sum_symmetry(const DenseTensor& a, double tol) {
  const StructureReport report = check_structure(a);
  if (report.is_centro()) return verify_row_sum_symmetry(a, Parity::centro, tol);
  if (report.is_skew()) return verify_row_sum_symmetry(a, Parity::skew, tol);
  throw InputError("verify_row_sum_symmetry: tensor is neither centrosymmetric nor skew");
}

ReflectionCheck verify_poly_reflection(const DenseTensor& a, std::size_t trials,
                                       std::uint64_t seed, double tol) {
  const StructureReport report = check_structure(a);
  double sign = 1.0;
  if (report.verdict == Verdict::skew_centrosymmetric) {
    sign = -1.0;
  } else if (report.verdict == Verdict::neither) {
    throw InputError("verify_poly_reflection: tensor is neither centrosymmetric nor skew");
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  ReflectionCheck check;
  check.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<double> xs(a.dim());
    for (double& v : xs) v = unit(rng);
    const Vector x(std::move(xs));
    const double fx = poly_eval(a, x);
    const double fjx = poly_eval(a, flip_vector(x));
    const double gap = std::abs(fjx - sign * fx) / std::max(1.0, std::abs(fx));
    check.worst_gap = std::max(check.worst_gap, gap);
    if (gap > tol) check.holds = false;
  }
  return check;
}

}  // namespace centro
