#include "centrosym/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "centrosym/errors.hpp"
#include "centrosym/product.hpp"

namespace centro {

namespace {

double sorted_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

std::string describe_multiset(const MultiIndex& zero_based) {
  std::string out = "{";
  for (std::size_t k = 0; k < zero_based.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(zero_based[k] + 1);
  }
  return out + "}";
}

double threshold(const Vector& c) { return 1e-14 * std::max(1.0, max_abs(c)); }

}  // namespace

void validate(const CauchySpec& spec) {
  const std::size_t n = spec.generating.dim();
  const std::size_t m = spec.order;
  if (m == 0 || n == 0) throw InputError("CauchySpec: order and dimension must be >= 1");
  const double limit = threshold(spec.generating);

  // Nondecreasing index sequences enumerate every multiset once.
  MultiIndex idx(m, 0);
  std::vector<double> values(m);
  while (true) {
    for (std::size_t k = 0; k < m; ++k) values[k] = spec.generating[idx[k]];
    if (std::abs(sorted_sum(values)) < limit) {
      throw DomainError("Cauchy tensor undefined: generating entries at index multiset " +
                        describe_multiset(idx) + " sum to zero");
    }
    std::size_t pos = m;
    while (pos > 0 && idx[pos - 1] == n - 1) --pos;
    if (pos == 0) break;
    const std::size_t bumped = idx[pos - 1] + 1;
    for (std::size_t k = pos - 1; k < m; ++k) idx[k] = bumped;
  }
}

DenseTensor materialize(const CauchySpec& spec) {
  validate(spec);
  const std::size_t n = spec.generating.dim();
  const std::size_t m = spec.order;
  const std::size_t size = checked_power(n, m);
  std::vector<double> entries(size);
  std::vector<double> values(m);
  MultiIndex idx(m, 0);
  for (std::size_t o = 0; o < size; ++o) {
    for (std::size_t k = 0; k < m; ++k) values[k] = spec.generating[idx[k]];
    entries[o] = 1.0 / sorted_sum(values);
    for (std::size_t k = m; k-- > 0;) {
      if (++idx[k] < n) break;
      idx[k] = 0;
    }
  }
  return DenseTensor(m, n, std::move(entries));
}

bool cauchy_is_centro(const CauchySpec& spec, double tol) {
  const Vector& c = spec.generating;
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(c[i] - c[n - 1 - i]) > tol) return false;
  }
  return true;
}

bool cauchy_is_skew(const CauchySpec& spec, double tol) {
  const Vector& c = spec.generating;
  const std::size_t n = c.dim();
  if (n % 2 == 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(c[i] + c[n - 1 - i]) > tol) return false;
  }
  return true;
}

bool cauchy_check_JC(const CauchySpec& spec, double tol) {
  const DenseTensor c = materialize(spec);
  const DenseTensor j = exchange_matrix(c.dim());
  const double bound = tol * std::max(1.0, c.max_abs());
  if (c.order() == 1) return max_abs_diff(shao_product(j, c), c) <= bound;
  return max_abs_diff(shao_product(j, c), c) <= bound &&
         max_abs_diff(shao_product(c, j), c) <= bound;
}

Vector palindromize(const Vector& c) {
  const std::size_t n = c.dim();
  std::vector<double> out(c.components().begin(), c.components().end());
  for (std::size_t i = 0; i < n / 2; ++i) out[n - 1 - i] = out[i];
  return Vector(std::move(out));
}

}  // namespace centro
