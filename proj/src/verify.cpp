#include "centrosym/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "centrosym/cauchy.hpp"
#include "centrosym/eigenpairs.hpp"
#include "centrosym/errors.hpp"
#include "centrosym/inverse.hpp"
#include "centrosym/product.hpp"
#include "centrosym/structure.hpp"

namespace centro {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Kind pick_kind(Rng& rng) { return pick(rng, 0, 1) == 0 ? Kind::centro : Kind::skew; }

Parity as_parity(Kind k) { return k == Kind::centro ? Parity::centro : Parity::skew; }

Parity flipped(Parity p) { return p == Parity::centro ? Parity::skew : Parity::centro; }

const char* name_of(Parity p) { return p == Parity::centro ? "centro" : "skew"; }

bool matches(const StructureReport& r, Parity expected) {
  return expected == Parity::centro ? r.is_centro() : r.is_skew();
}

// One property: `body` returns a counterexample payload for a failing trial,
// or null.
struct Property {
  const char* name;
  const char* statement;
  std::function<Json(Rng&, bool fault)> body;
};

Json instance(const DenseTensor& a) { return Json{{"tensor", to_json(a)}}; }

Json characterization(Rng& rng, bool fault) {
  const std::size_t m = pick(rng, 2, 4), n = pick(rng, 2, 5);
  const std::size_t k = pick(rng, 0, 2);
  const Kind kind = k == 0 ? Kind::centro : k == 1 ? Kind::skew : Kind::general;
  const DenseTensor a = random_structured(m, n, kind, rng());
  const StructureReport direct = check_structure(a);
  const StructureReport via_j = check_via_J(a);
  const StructureReport commute = check_commutation(a);
  Verdict expected = kind == Kind::centro  ? Verdict::centrosymmetric
                     : kind == Kind::skew ? Verdict::skew_centrosymmetric
                                          : Verdict::neither;
  if (fault && expected != Verdict::neither) {
    expected = expected == Verdict::centrosymmetric ? Verdict::skew_centrosymmetric
                                                    : Verdict::centrosymmetric;
  }
  if (direct.verdict == expected && via_j.verdict == expected && commute.verdict == expected) {
    return nullptr;
  }
  Json j = instance(a);
  j["direct"] = to_string(direct.verdict);
  j["via_J"] = to_string(via_j.verdict);
  j["commutation"] = to_string(commute.verdict);
  return j;
}

Json product_closure(Rng& rng, bool fault) {
  const std::size_t m = pick(rng, 2, 4), k = pick(rng, 1, 3), n = pick(rng, 2, 4);
  const Kind ka = pick_kind(rng), kb = pick_kind(rng);
  const DenseTensor a = random_structured(m, n, ka, rng());
  const DenseTensor b = random_structured(k, n, kb, rng());
  Parity expected = product_parity(as_parity(ka), as_parity(kb), m);
  if (fault) expected = flipped(expected);
  const DenseTensor c = shao_product(a, b);
  const StructureReport r = check_structure(c, 1e-10 * std::max(1.0, c.max_abs()));
  if (matches(r, expected)) return nullptr;
  return Json{{"left", to_json(a)}, {"right", to_json(b)}, {"expected", name_of(expected)},
              {"verdict", to_string(r.verdict)}};
}

Json chain_closure(Rng& rng, bool fault) {
  const std::size_t n = pick(rng, 2, 4);
  std::vector<DenseTensor> factors;
  factors.push_back(random_structured(pick(rng, 2, 3), n, Kind::centro, rng()));
  factors.push_back(random_structured(2, n, Kind::centro, rng()));
  factors.push_back(random_structured(pick(rng, 1, 2), n, Kind::centro, rng()));
  const DenseTensor c = chain_product(factors);
  const StructureReport r = check_structure(c, 1e-10 * std::max(1.0, c.max_abs()));
  if (matches(r, fault ? Parity::skew : Parity::centro)) return nullptr;
  return Json{{"product", to_json(c)}, {"verdict", to_string(r.verdict)}};
}

Json hadamard_parity(Rng& rng, bool fault) {
  const std::size_t m = pick(rng, 2, 4), n = pick(rng, 2, 5);
  const Kind ka = pick_kind(rng), kb = pick_kind(rng);
  const DenseTensor a = random_structured(m, n, ka, rng());
  const DenseTensor b = random_structured(m, n, kb, rng());
  Parity expected = ka == kb ? Parity::centro : Parity::skew;
  if (fault) expected = flipped(expected);
  const StructureReport r = check_structure(hadamard(a, b));
  if (matches(r, expected)) return nullptr;
  return Json{{"left", to_json(a)}, {"right", to_json(b)}, {"expected", name_of(expected)}};
}

Json decomposition(Rng& rng, bool fault) {
  const std::size_t m = pick(rng, 1, 4), n = pick(rng, 2, 5);
  const DenseTensor a = random_structured(m, n, Kind::general, rng());
  const Decomposition d = decompose(a);
  const double scale = std::max(1.0, a.max_abs());
  const double recon = max_abs_diff(add(d.centro, d.skew), a);
  const StructureReport rc = check_structure(d.centro, 1e-13 * scale);
  const StructureReport rs = check_structure(d.skew, 1e-13 * scale);
  const bool ok = matches(rc, fault ? Parity::skew : Parity::centro) &&
                  matches(rs, fault ? Parity::centro : Parity::skew) && recon <= 1e-14 * scale;
  if (ok) return nullptr;
  Json j = instance(a);
  j["reconstruction_error"] = recon;
  return j;
}

Json row_sums_property(Rng& rng, bool fault) {
  const std::size_t m = pick(rng, 1, 4), n = pick(rng, 2, 5);
  const Kind kind = pick_kind(rng);
  const DenseTensor a = random_structured(m, n, kind, rng());
  const Parity assumed = fault ? flipped(as_parity(kind)) : as_parity(kind);
  const RowSumCheck check = verify_row_sum_symmetry(a, assumed);
  bool ok = check.holds;
  if (kind == Kind::skew && n % 2 == 1) {
    // The self-mirrored diagonal entry must be exactly zero.
    const std::size_t mid = a.size() / 2;
    ok = ok && a[mid] == 0.0;
  }
  if (ok) return nullptr;
  Json j = instance(a);
  j["assumed"] = name_of(assumed);
  j["witness"] = check.witness ? Json(*check.witness) : Json(nullptr);
  return j;
}

Json poly_reflection(Rng& rng, bool fault) {
  const std::size_t m = pick(rng, 1, 5), n = pick(rng, 2, 5);
  const Kind kind = pick_kind(rng);
  const DenseTensor a = random_structured(m, n, kind, rng());
  double sign = kind == Kind::centro ? 1.0 : -1.0;
  if (fault) sign = -sign;
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> xs(n);
    for (double& v : xs) v = unit(rng);
    const Vector x(std::move(xs));
    const double fx = poly_eval(a, x);
    const double fjx = poly_eval(a, flip_vector(x));
    if (std::abs(fjx - sign * fx) > 1e-10 * std::max(1.0, std::abs(fx))) {
      Json j = instance(a);
      j["x"] = to_json(x);
      j["f_x"] = fx;
      j["f_Jx"] = fjx;
      return j;
    }
  }
  return nullptr;
}

Vector random_generating(Rng& rng, std::size_t n, int mode) {
  std::uniform_real_distribution<double> positive(0.2, 3.0);
  std::vector<double> c(n);
  for (double& v : c) v = positive(rng);
  if (mode == 1) return palindromize(Vector(std::move(c)));
  if (mode == 2) {
    // skew-symmetric; the middle entry of odd n is forced to 0
    for (std::size_t i = 0; i < n / 2; ++i) c[n - 1 - i] = -c[i];
    if (n % 2 == 1) c[n / 2] = 0.0;
  }
  return Vector(std::move(c));
}

Json cauchy_equivalence(Rng& rng, bool fault) {
  const std::size_t n = pick(rng, 2, 5), m = pick(rng, 2, 4);
  const int mode = static_cast<int>(pick(rng, 0, 2));
  const CauchySpec spec{random_generating(rng, n, mode), m};
  DenseTensor c(1, 1);
  try {
    c = materialize(spec);
  } catch (const DomainError&) {
    // Skew generating vectors always produce a zero sum for even m.
    return nullptr;
  }
  const StructureReport r = check_structure(c, 1e-10 * std::max(1.0, c.max_abs()));
  const bool centro = cauchy_is_centro(spec) != fault;
  const bool skew = cauchy_is_skew(spec);
  const bool ok = centro == r.is_centro() && skew == r.is_skew() &&
                  cauchy_check_JC(spec) == cauchy_is_centro(spec) && !(n % 2 == 1 && r.is_skew());
  if (ok) return nullptr;
  return Json{{"spec", to_json(spec)}, {"verdict", to_string(r.verdict)}};
}

Json diagonal_inverse(Rng& rng, bool fault) {
  const std::size_t m = pick(rng, 2, 4), n = pick(rng, 2, 4), k = pick(rng, 2, 3);
  std::uniform_real_distribution<double> mag(0.5, 4.0);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double v = mag(rng);
    // negative entries are allowed only where a real inverse still exists
    if (m % 2 == 0 && pick(rng, 0, 1) == 1) v = -v;
    diag[i] = v;
    diag[n - 1 - i] = v;
  }
  DenseTensor a(m, n);
  {
    std::vector<double> entries(a.size(), 0.0);
    std::size_t stride = 0;
    for (std::size_t q = 0, p = 1; q < m; ++q, p *= n) stride += p;
    for (std::size_t i = 0; i < n; ++i) entries[i * stride] = diag[i];
    a = DenseTensor(m, n, std::move(entries));
  }
  const InverseResult left = diagonal_left_inverse(a, k);
  const InverseResult right = diagonal_right_inverse(a, k);
  const double left_res = verify_inverse(a, *left.inverse, fault ? Side::right : Side::left);
  const double right_res = verify_inverse(a, *right.inverse, Side::right);
  if (left_res <= 1e-13 && right_res <= 1e-13 && left.centro_verdict && right.centro_verdict) {
    return nullptr;
  }
  Json j = instance(a);
  j["k"] = k;
  j["left_residual"] = left_res;
  j["right_residual"] = right_res;
  return j;
}

DenseTensor well_conditioned_centro_matrix(Rng& rng, std::size_t n) {
  const DenseTensor r = random_structured(2, n, Kind::centro, rng());
  return add(r, scale(DenseTensor::identity(2, n), static_cast<double>(n) + 1.0));
}

Json order2_recovery(Rng& rng, bool fault) {
  const std::size_t n = pick(rng, 2, 4);
  const std::size_t m = 2 * pick(rng, 1, 2);  // even, so both sides apply
  const DenseTensor d = well_conditioned_centro_matrix(rng, n);
  const DenseTensor id2 = DenseTensor::identity(2, n);

  // A = D I has left inverse D^{-1}; A = I D has right inverse D^{-1}.
  const InverseResult left = recover_order2_left_inverse(shao_product(d, DenseTensor::identity(m, n)));
  const InverseResult right = recover_order2_right_inverse(shao_product(DenseTensor::identity(m, n), d));
  bool ok = left.found() && right.found() && left.centro_verdict && right.centro_verdict;
  double left_gap = 0.0, right_gap = 0.0;
  if (ok) {
    const DenseTensor& target = fault ? d : id2;
    left_gap = max_abs_diff(shao_product(d, *left.inverse), target);
    right_gap = max_abs_diff(shao_product(d, *right.inverse), target);
    ok = left_gap <= 1e-9 && right_gap <= 1e-9;
  }
  if (ok) return nullptr;
  return Json{{"matrix", to_json(d)}, {"order", m}, {"left_gap", left_gap}, {"right_gap", right_gap}};
}

Json closed_forms(Rng& rng, bool fault) {
  const double sign = fault ? -1.0 : 1.0;
  const DenseTensor a2 = random_structured(pick(rng, 2, 5), 2, Kind::centro, rng());
  for (const EigenPair& p : closed_form_dim2(a2)) {
    const double scale = std::max(1.0, a2.max_abs());
    if (residual(a2, sign * p.lambda, p.x) > 1e-12 * scale) {
      Json j = instance(a2);
      j["lambda"] = p.lambda;
      return j;
    }
  }
  const DenseTensor a3 = random_structured(2 * pick(rng, 1, 2), 3, Kind::centro, rng());
  const EigenPair p = closed_form_dim3_even(a3);
  const double scale = std::max(1.0, a3.max_abs());
  if (residual(a3, sign * p.lambda, p.x) > 1e-12 * scale || p.x[1] != 0.0) {
    Json j = instance(a3);
    j["lambda"] = p.lambda;
    return j;
  }
  return nullptr;
}

Json eigen_reflection(Rng& rng, bool fault, Kind kind, std::size_t starts) {
  const std::size_t m = pick(rng, 2, 4), n = pick(rng, 2, 4);
  const DenseTensor a = random_structured(m, n, kind, rng());
  SolverOptions options;
  options.starts = starts;
  options.seed = rng();
  const EigenSet set = solve_eigen(a, options);
  for (const EigenPair& p : set.pairs) {
    if (kind == Kind::skew && std::abs(p.lambda) <= 1e-8) continue;
    double lambda = kind == Kind::centro ? p.lambda : -p.lambda;
    if (fault) lambda = -lambda;
    const Vector jx = flip_vector(p.x);
    const double r = residual(a, lambda, jx);
    if (r > 1e-10) {
      Json j = instance(a);
      j["pair"] = to_json(p);
      j["reflected_residual"] = r;
      return j;
    }
  }
  return nullptr;
}

Json cauchy_eigenvectors(Rng& rng, bool fault, std::size_t starts) {
  const std::size_t m = pick(rng, 2, 4), n = pick(rng, 2, 4);
  const CauchySpec spec{random_generating(rng, n, 1), m};
  const DenseTensor c = materialize(spec);
  SolverOptions options;
  options.starts = starts;
  options.seed = rng();
  const EigenSet set = solve_eigen(c, options);
  for (const EigenPair& p : set.pairs) {
    if (std::abs(p.lambda) <= 1e-8) continue;
    const VectorSymmetry cls = classify_vector(p.x, 1e-8);
    bool ok = m % 2 == 0 ? cls == VectorSymmetry::symmetric
                         : cls == VectorSymmetry::symmetric || cls == VectorSymmetry::abs_symmetric;
    if (fault) ok = cls == VectorSymmetry::skew_symmetric;
    if (!ok) return Json{{"spec", to_json(spec)}, {"pair", to_json(p)}};
  }
  return nullptr;
}

std::vector<Property> properties(const VerifyOptions& options) {
  const std::size_t starts = options.eigen_starts;
  return {
      {"structure_characterization",
       "direct, J-sandwich and commutation tests give the same verdict", characterization},
      {"product_parity", "general products follow the centro/skew parity table", product_closure},
      {"chain_product_closure", "products of centrosymmetric tensors stay centrosymmetric",
       chain_closure},
      {"hadamard_parity", "Hadamard products follow the centro/skew parity table", hadamard_parity},
      {"decomposition", "every tensor splits into a centro part plus a skew part", decomposition},
      {"row_sum_symmetry", "row sums mirror (centro) or anti-mirror (skew)", row_sums_property},
      {"poly_reflection", "f(Jx) = f(x) for centro, f(Jx) = -f(x) for skew", poly_reflection},
      {"cauchy_equivalence", "Cauchy tensor structure matches generating-vector symmetry",
       cauchy_equivalence},
      {"diagonal_inverse", "diagonal constructions give exact left and right inverses",
       diagonal_inverse},
      {"order2_inverse_recovery", "order-2 inverses are recovered and centrosymmetric",
       order2_recovery},
      {"closed_form_eigenpairs", "dimension-2 and dimension-3 closed-form eigenpairs verify",
       closed_forms},
      {"eigen_reflection_centro", "(lambda, Jx) is an eigenpair of a centrosymmetric tensor",
       [starts](Rng& rng, bool fault) { return eigen_reflection(rng, fault, Kind::centro, starts); }},
      {"eigen_pairing_skew", "(-lambda, Jx) is an eigenpair of a skew tensor for lambda != 0",
       [starts](Rng& rng, bool fault) { return eigen_reflection(rng, fault, Kind::skew, starts); }},
      {"cauchy_eigvec_symmetry",
       "Cauchy eigenvectors are symmetric (even order) or abs-symmetric (odd order)",
       [starts](Rng& rng, bool fault) { return cauchy_eigenvectors(rng, fault, starts); }},
  };
}

}  // namespace

bool VerifyReport::all_passed() const noexcept {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const PropertyOutcome& o) { return o.passed(); });
}

std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& p : properties({})) names.emplace_back(p.name);
  return names;
}

VerifyReport verify_all(const VerifyOptions& options) {
  VerifyReport report;
  report.seed = options.seed;
  report.trials = options.trials;
  if (options.trials == 0) return report;
  std::uint64_t salt = 0;
  for (const Property& p : properties(options)) {
    Rng rng(options.seed + 0x9E3779B97F4A7C15ULL * ++salt);
    PropertyOutcome outcome;
    outcome.name = p.name;
    outcome.statement = p.statement;
    outcome.trials = options.trials;
    const bool fault = options.fault == p.name;
    for (std::size_t t = 0; t < options.trials; ++t) {
      Json failure = p.body(rng, fault);
      if (!failure.is_null()) {
        if (outcome.failures == 0) outcome.counterexample = std::move(failure);
        ++outcome.failures;
      }
    }
    report.outcomes.push_back(std::move(outcome));
  }
  return report;
}

Json to_json(const VerifyReport& report) {
  Json results = Json::array();
  for (const auto& o : report.outcomes) {
    results.push_back(Json{{"property", o.name},
                           {"statement", o.statement},
                           {"trials", o.trials},
                           {"failures", o.failures},
                           {"passed", o.passed()},
                           {"counterexample", o.counterexample}});
  }
  return Json{{"seed", report.seed},
              {"trials", report.trials},
              {"all_passed", report.all_passed()},
              {"results", results}};
}

}  // namespace centro
