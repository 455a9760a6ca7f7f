#include "centrosym/eigenpairs.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "centrosym/errors.hpp"
#include "centrosym/structure.hpp"

namespace centro {

namespace {

void require_nonzero(const Vector& x, const char* op) {
  if (max_abs(x) == 0.0) throw InputError(std::string(op) + ": zero vector");
}

// Values of G(x) = A x^{m-1} and its Jacobian dG/dx in one sweep.
struct Linearization {
  Eigen::VectorXd value;
  Eigen::MatrixXd jacobian;
};

Linearization linearize(const DenseTensor& a, const Eigen::VectorXd& x) {
  const std::size_t n = a.dim();
  const std::size_t slots = a.order() - 1;
  const std::size_t row = a.size() / n;
  Linearization lin{Eigen::VectorXd::Zero(n), Eigen::MatrixXd::Zero(n, n)};
  std::vector<std::size_t> digits(slots, 0);
  std::vector<double> prefix(slots + 1), suffix(slots + 1);
  for (std::size_t o = 0; o < row; ++o) {
    prefix[0] = 1.0;
    for (std::size_t p = 0; p < slots; ++p) prefix[p + 1] = prefix[p] * x[digits[p]];
    suffix[slots] = 1.0;
    for (std::size_t p = slots; p-- > 0;) suffix[p] = suffix[p + 1] * x[digits[p]];
    for (std::size_t i = 0; i < n; ++i) {
      const double entry = a[i * row + o];
      if (entry == 0.0) continue;
      lin.value[i] += entry * prefix[slots];
      for (std::size_t p = 0; p < slots; ++p) {
        lin.jacobian(i, digits[p]) += entry * prefix[p] * suffix[p + 1];
      }
    }
    for (std::size_t p = slots; p-- > 0;) {
      if (++digits[p] < n) break;
      digits[p] = 0;
    }
  }
  return lin;
}

struct NewtonState {
  Eigen::VectorXd x;
  double lambda;
};

Eigen::VectorXd system_value(const DenseTensor& a, const NewtonState& s, Linearization* lin_out) {
  const std::size_t n = a.dim();
  const int p = static_cast<int>(a.order() - 1);
  Linearization lin = linearize(a, s.x);
  Eigen::VectorXd f(n + 1);
  for (std::size_t i = 0; i < n; ++i) f[i] = lin.value[i] - s.lambda * std::pow(s.x[i], p);
  f[n] = 0.5 * (s.x.squaredNorm() - 1.0);
  if (lin_out) *lin_out = std::move(lin);
  return f;
}

bool finite(const Eigen::VectorXd& v) { return v.allFinite(); }

Eigen::MatrixXd system_jacobian(const DenseTensor& a, const NewtonState& s, const Linearization& lin) {
  const std::size_t n = a.dim();
  const double m1 = static_cast<double>(a.order() - 1);
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n + 1, n + 1);
  jac.topLeftCorner(n, n) = lin.jacobian;
  for (std::size_t i = 0; i < n; ++i) {
    jac(i, i) -= s.lambda * m1 * std::pow(s.x[i], m1 - 1.0);
    jac(i, n) = -std::pow(s.x[i], m1);
    jac(n, i) = s.x[i];
  }
  return jac;
}

// Undamped minimum-norm steps (tiny singular values dropped), keeping the
// iterate with the smallest residual. At roots on a curve of solutions, or
// with a singular Jacobian, plain Newton stalls or drifts.
void polish(const DenseTensor& a, NewtonState& s, Linearization& lin, Eigen::VectorXd& f,
            const SolverOptions& options) {
  const std::size_t n = a.dim();
  NewtonState cur = s;
  Linearization cur_lin = lin;
  Eigen::VectorXd cur_f = f;
  double best = f.lpNorm<Eigen::Infinity>();
  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(system_jacobian(a, cur, cur_lin));
    cod.setThreshold(1e-10);
    const Eigen::VectorXd step = cod.solve(-cur_f);
    if (!finite(step)) break;
    cur = NewtonState{cur.x + step.head(n), cur.lambda + step[n]};
    cur_f = system_value(a, cur, &cur_lin);
    if (!finite(cur_f)) break;
    const double norm = cur_f.lpNorm<Eigen::Infinity>();
    if (norm <= best) {
      best = norm;
      s = cur;
      lin = cur_lin;
      f = cur_f;
    }
    if (step.lpNorm<Eigen::Infinity>() <= 1e-15 * (1.0 + std::abs(cur.lambda))) break;
  }
}

// Damped Newton from one start. Returns true when ||F||_inf <= tol.
bool newton(const DenseTensor& a, NewtonState& s, const SolverOptions& options) {
  const std::size_t n = a.dim();
  Linearization lin;
  Eigen::VectorXd f = system_value(a, s, &lin);
  double fnorm = f.lpNorm<Eigen::Infinity>();
  for (std::size_t it = 0; it < options.max_iterations && fnorm > options.tol; ++it) {
    const Eigen::VectorXd step = system_jacobian(a, s, lin).partialPivLu().solve(-f);
    if (!finite(step)) break;

    double t = 1.0;
    bool accepted = false;
    while (t >= 1.0 / 1024.0) {
      NewtonState trial{s.x + t * step.head(n), s.lambda + t * step[n]};
      Linearization trial_lin;
      const Eigen::VectorXd trial_f = system_value(a, trial, &trial_lin);
      const double trial_norm = trial_f.lpNorm<Eigen::Infinity>();
      if (finite(trial_f) && trial_norm < fnorm) {
        s = std::move(trial);
        lin = std::move(trial_lin);
        f = trial_f;
        fnorm = trial_norm;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;
  }
  if (!(fnorm <= options.tol)) return false;
  polish(a, s, lin, f, options);
  return true;
}

bool lex_less(const EigenPair& p, const EigenPair& q) {
  if (p.lambda != q.lambda) return p.lambda < q.lambda;
  return std::lexicographical_compare(p.x.components().begin(), p.x.components().end(),
                                      q.x.components().begin(), q.x.components().end());
}

bool same_pair(const EigenPair& p, const EigenPair& q, const SolverOptions& options) {
  if (std::abs(p.lambda - q.lambda) > options.dedup_lambda) return false;
  double diff = 0.0, sum = 0.0;
  for (std::size_t i = 0; i < p.x.dim(); ++i) {
    diff += (p.x[i] - q.x[i]) * (p.x[i] - q.x[i]);
    sum += (p.x[i] + q.x[i]) * (p.x[i] + q.x[i]);
  }
  return std::sqrt(std::min(diff, sum)) <= options.dedup_vector;
}

}  // namespace

std::string_view to_string(VectorSymmetry s) noexcept {
  switch (s) {
    case VectorSymmetry::symmetric: return "symmetric";
    case VectorSymmetry::skew_symmetric: return "skew-symmetric";
    case VectorSymmetry::abs_symmetric: return "abs-symmetric";
    case VectorSymmetry::neither: return "neither";
  }
  return "neither";
}

double residual(const DenseTensor& a, double lambda, const Vector& x) {
  require_nonzero(x, "residual");
  const Vector ax = apply(a, x);
  const Vector xp = power_vector(x, static_cast<unsigned>(a.order() - 1));
  double r = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) r = std::max(r, std::abs(ax[i] - lambda * xp[i]));
  return r;
}

VectorSymmetry classify_vector(const Vector& x, double tol) {
  require_nonzero(x, "classify_vector");
  const Vector jx = flip_vector(x);
  const std::size_t n = x.dim();
  double sym = 0.0, skew = 0.0, abs_sym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sym = std::max(sym, std::abs(x[i] - jx[i]));
    skew = std::max(skew, std::abs(x[i] + jx[i]));
    abs_sym = std::max(abs_sym, std::abs(std::abs(x[i]) - std::abs(jx[i])));
  }
  if (sym <= tol) return VectorSymmetry::symmetric;
  if (skew <= tol) return VectorSymmetry::skew_symmetric;
  if (abs_sym <= tol) return VectorSymmetry::abs_symmetric;
  return VectorSymmetry::neither;
}

Vector canonicalize(const Vector& x) {
  require_nonzero(x, "canonicalize");
  double nrm = norm2(x);
  double sign = 1.0;
  for (double v : x.components()) {
    if (std::abs(v) / nrm > 1e-8) {
      sign = v < 0.0 ? -1.0 : 1.0;
      break;
    }
  }
  return scale(x, sign / nrm);
}

EigenPair make_pair(const DenseTensor& a, double lambda, const Vector& x, double class_tol) {
  EigenPair pair;
  pair.lambda = lambda;
  pair.x = canonicalize(x);
  pair.residual = residual(a, lambda, pair.x);
  pair.classification = classify_vector(pair.x, class_tol);
  return pair;
}

std::array<EigenPair, 2> closed_form_dim2(const DenseTensor& a) {
  if (a.dim() != 2 || a.order() < 2) {
    throw InputError("closed_form_dim2: need dimension 2 and order >= 2");
  }
  if (!check_structure(a).is_centro()) {
    throw InputError("closed_form_dim2: tensor is not centrosymmetric");
  }
  const std::size_t row = a.size() / 2;
  CompensatedSum even, alternating;
  for (std::size_t o = 0; o < row; ++o) {
    even.add(a[o]);
    // Parity of the number of trailing indices equal to 2 is the parity of
    // the popcount of the zero-based offset.
    const bool odd = (__builtin_popcountll(static_cast<unsigned long long>(o)) & 1) != 0;
    alternating.add(odd ? -a[o] : a[o]);
  }
  const double h = 1.0 / std::sqrt(2.0);
  EigenPair e;
  e.lambda = even.value();
  e.x = Vector{h, h};
  e.residual = residual(a, e.lambda, e.x);
  e.classification = VectorSymmetry::symmetric;
  EigenPair u;
  u.lambda = alternating.value();
  u.x = Vector{h, -h};
  u.residual = residual(a, u.lambda, u.x);
  u.classification = VectorSymmetry::skew_symmetric;
  return {e, u};
}

EigenPair closed_form_dim3_even(const DenseTensor& a) {
  if (a.dim() != 3 || a.order() < 2 || a.order() % 2 == 1) {
    throw InputError("closed_form_dim3_even: need dimension 3 and even order");
  }
  if (!check_structure(a).is_centro()) {
    throw InputError("closed_form_dim3_even: tensor is not centrosymmetric");
  }
  const std::size_t slots = a.order() - 1;
  CompensatedSum acc;
  // Trailing indices range over {1, 3} (zero-based {0, 2}); bit p of `mask`
  // selects 3 in slot p.
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots); ++mask) {
    std::size_t offset = 0;
    for (std::size_t p = slots; p-- > 0;) offset = offset * 3 + (((mask >> p) & 1) ? 2 : 0);
    const bool odd = (__builtin_popcountll(static_cast<unsigned long long>(mask)) & 1) != 0;
    acc.add(odd ? -a[offset] : a[offset]);
  }
  const double h = 1.0 / std::sqrt(2.0);
  EigenPair pair;
  pair.lambda = acc.value();
  pair.x = Vector{h, 0.0, -h};
  pair.residual = residual(a, pair.lambda, pair.x);
  pair.classification = VectorSymmetry::skew_symmetric;
  return pair;
}

EigenSet solve_eigen(const DenseTensor& a, const SolverOptions& options) {
  if (a.order() < 2) throw InputError("solve_eigen: tensor order must be >= 2");
  const std::size_t n = a.dim();
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  EigenSet set;
  set.stats.starts = options.starts;
  std::vector<EigenPair> found;
  for (std::size_t s = 0; s < options.starts; ++s) {
    Eigen::VectorXd x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = gauss(rng);
    if (x.norm() == 0.0) continue;
    x.normalize();
    Linearization lin = linearize(a, x);
    const int p = static_cast<int>(a.order() - 1);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double xp = std::pow(x[i], p);
      num += lin.value[i] * xp;
      den += xp * xp;
    }
    NewtonState state{x, den > 0.0 ? num / den : 0.0};
    if (!newton(a, state, options)) continue;
    if (state.x.norm() == 0.0) continue;

    const Vector v(std::vector<double>(state.x.data(), state.x.data() + n));
    EigenPair pair = make_pair(a, state.lambda, v, options.class_tol);
    if (pair.residual > options.tol) continue;
    ++set.stats.converged;
    found.push_back(std::move(pair));
  }

  std::sort(found.begin(), found.end(), lex_less);
  for (auto& pair : found) {
    const bool dup = std::any_of(set.pairs.begin(), set.pairs.end(),
                                 [&](const EigenPair& kept) { return same_pair(kept, pair, options); });
    if (dup) {
      ++set.stats.deduplicated;
    } else {
      set.pairs.push_back(std::move(pair));
    }
  }
  return set;
}

EigenPair reflect_pair(const DenseTensor& a, const EigenPair& pair, double tol) {
  const StructureReport report = check_structure(a);
  if (report.verdict == Verdict::neither) {
    throw InputError("reflect_pair: tensor is neither centrosymmetric nor skew");
  }
  if (!(residual(a, pair.lambda, pair.x) <= tol)) {
    throw InputError("reflect_pair: input pair does not satisfy the eigen-equation");
  }
  EigenPair reflected;
  reflected.lambda = report.is_centro() ? pair.lambda : -pair.lambda;
  reflected.x = flip_vector(pair.x);
  reflected.residual = residual(a, reflected.lambda, reflected.x);
  reflected.classification = classify_vector(reflected.x);
  if (!(reflected.residual <= tol)) {
    throw TheoremViolation("reflected eigenpair has residual " + std::to_string(reflected.residual) +
                           " above " + std::to_string(tol));
  }
  return reflected;
}

}  // namespace centro
