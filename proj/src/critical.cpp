#include "lgfano/critical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lgfano {

Tolerances Tolerances::defaults(const CIModel& model, mpfr_prec_t prec) {
  Tolerances t{
      .residual = Real::from_string("1e-30", prec),
      .value = Real::from_string("1e-10", prec) *
               (Real(1L, prec) + Real(static_cast<long>(model.index), prec) * d_root(model, prec)),
      .dedup = Real::from_string("1e-20", prec),
      .value_match_rel = Real::from_string("1e-20", prec),
      .cluster_radius = Real::from_string("0.1", prec),
  };
  return t;
}

DerivativeCache::DerivativeCache(LaurentPoly f) : f_(std::move(f)) {
  const int n = f_.nvars();
  grad_.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) grad_.push_back(partial_derivative(f_, static_cast<size_t>(i)));
  hess_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      hess_[static_cast<size_t>(i)].push_back(
          partial_derivative(grad_[static_cast<size_t>(i)], static_cast<size_t>(j)));
}

Complex DerivativeCache::value(const VectorXc& z, mpfr_prec_t prec) const {
  return evaluate(f_, as_span(z), prec);
}

VectorXc DerivativeCache::gradient(const VectorXc& z, mpfr_prec_t prec) const {
  VectorXc g(nvars());
  for (int i = 0; i < nvars(); ++i)
    g(i) = evaluate(grad_[static_cast<size_t>(i)], as_span(z), prec);
  return g;
}

MatrixXc DerivativeCache::hessian(const VectorXc& z, mpfr_prec_t prec) const {
  const int n = nvars();
  MatrixXc h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      h(i, j) = evaluate(hess_[static_cast<size_t>(i)][static_cast<size_t>(j - i)], as_span(z), prec);
      if (j != i) h(j, i) = h(i, j);
    }
  return h;
}

namespace {

Real sup_norm(const VectorXc& v) {
  Real m = Real::zero(64);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Real a = abs(v(i));
    if (a > m) m = a;
  }
  return m;
}

Real sup_distance(const VectorXc& a, const VectorXc& b) {
  Real m = Real::zero(64);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    Real d = abs(a(i) - b(i));
    if (d > m) m = d;
  }
  return m;
}

}  // namespace

std::vector<CriticalPointRecord> symmetric_critical_points(const CIModel& model,
                                                           mpfr_prec_t prec) {
  LaurentPoly f = build_givental(model);
  Real root = d_root(model, prec);
  std::vector<CriticalPointRecord> out;
  const int n = model.dim;
  const int x_count = n - (model.index - 1);
  for (int r = 0; r < model.index; ++r) {
    Complex y = Complex::root_of_unity(r, model.index, prec) * root;
    CriticalPointRecord rec;
    rec.coordinates = VectorXc(n);
    for (int i = 0; i < x_count; ++i) rec.coordinates(i) = Complex::one(prec);
    for (int i = x_count; i < n; ++i) rec.coordinates(i) = y;
    rec.value = evaluate(f, as_span(rec.coordinates), prec);
    rec.residual = sup_norm(gradient_at(f, as_span(rec.coordinates), prec));
    rec.branch = r;
    rec.classification = PointClass::nonzero_value;
    Real residual_tol = Tolerances::defaults(model, prec).residual;
    if (!(rec.residual < residual_tol))
      throw std::logic_error("symmetric critical point failed residual certification");
    out.push_back(std::move(rec));
  }
  return out;
}

NewtonResult newton_refine(const DerivativeCache& cache, VectorXc start,
                           const ProbeConfig& config, const Real& residual_tol) {
  const mpfr_prec_t prec = config.precision_bits;
  NewtonResult res;
  res.point = std::move(start);
  res.residual = Real::from_string("inf", prec);
  Real blow_up = Real::from_string("1e40", prec);
  for (int iter = 0; iter <= config.newton_max_iter; ++iter) {
    res.iterations = iter;
    for (Eigen::Index i = 0; i < res.point.size(); ++i) {
      if (!res.point(i).is_finite() || res.point(i).is_zero() || abs(res.point(i)) > blow_up) {
        res.status = NewtonStatus::diverged;
        return res;
      }
    }
    VectorXc g = cache.gradient(res.point, prec);
    res.residual = sup_norm(g);
    if (!res.residual.is_finite()) {
      res.status = NewtonStatus::diverged;
      return res;
    }
    if (res.residual < residual_tol) {
      res.status = NewtonStatus::converged;
      res.value = cache.value(res.point, prec);
      return res;
    }
    if (iter == config.newton_max_iter) break;
    MatrixXc h = cache.hessian(res.point, prec);
    Real scale = Real::zero(prec);
    for (Eigen::Index i = 0; i < h.rows(); ++i)
      for (Eigen::Index j = 0; j < h.cols(); ++j) {
        Real a = abs(h(i, j));
        if (a > scale) scale = a;
      }
    Real pivot_floor = scale * Real::two_pow(-(static_cast<long>(prec) - 16), prec);
    auto step = solve_linear(std::move(h), g, pivot_floor);
    if (!step) {
      res.status = NewtonStatus::singular_jacobian;
      return res;
    }
    res.point -= *step;
  }
  res.status = NewtonStatus::diverged;
  return res;
}

NewtonResult newton_refine(const LaurentPoly& f, VectorXc start, const ProbeConfig& config,
                           const Real& residual_tol) {
  DerivativeCache cache(f);
  return newton_refine(cache, std::move(start), config, residual_tol);
}

namespace {

uint64_t splitmix_next(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform01(uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

// pure function of (seed, trial): coordinates sampled log-uniform in modulus
// over [r_min, r_max], uniform in argument
VectorXc probe_start(const CIModel& model, const ProbeConfig& cfg, int trial) {
  uint64_t state = cfg.seed ^ (static_cast<uint64_t>(trial) + 1) * 0xd1342543de82ef95ull;
  VectorXc z(model.dim);
  const double log_lo = std::log(cfg.r_min);
  const double log_hi = std::log(cfg.r_max);
  for (int i = 0; i < model.dim; ++i) {
    double u_mod = uniform01(splitmix_next(state));
    double u_arg = uniform01(splitmix_next(state));
    double modulus = std::exp(log_lo + u_mod * (log_hi - log_lo));
    Real m(modulus, cfg.precision_bits);
    Real angle = Real(2L, cfg.precision_bits) * Real::pi(cfg.precision_bits) *
                 Real(u_arg, cfg.precision_bits);
    z(i) = Complex::from_polar(m, angle);
  }
  return z;
}

}  // namespace

ProbeOutcome probe_random(const CIModel& model, const ProbeConfig& config,
                          const Tolerances& tol) {
  if (config.trials < 1) throw std::invalid_argument("probe trials must be >= 1");
  if (!(config.r_min > 0.0) || !(config.r_max > config.r_min))
    throw std::invalid_argument("probe annulus must satisfy 0 < r_min < r_max");
  DerivativeCache cache(build_givental(model));
  ProbeOutcome out;
  out.stats.trials = config.trials;
  for (int trial = 0; trial < config.trials; ++trial) {
    NewtonResult res = newton_refine(cache, probe_start(model, config, trial), config,
                                     tol.residual);
    switch (res.status) {
      case NewtonStatus::diverged:
        ++out.stats.diverged;
        continue;
      case NewtonStatus::singular_jacobian:
        ++out.stats.singular;
        continue;
      case NewtonStatus::converged:
        break;
    }
    ++out.stats.converged;
    bool known = false;
    for (CriticalPointRecord& rec : out.points) {
      if (sup_distance(rec.coordinates, res.point) < tol.dedup) {
        ++rec.hits;
        known = true;
        break;
      }
    }
    if (!known) {
      CriticalPointRecord rec;
      rec.coordinates = std::move(res.point);
      rec.value = res.value;
      rec.residual = res.residual;
      rec.branch = std::nullopt;
      out.points.push_back(std::move(rec));
    }
  }
  out.stats.distinct = static_cast<int>(out.points.size());
  return out;
}

std::vector<CriticalPointRecord> merge_points(std::vector<CriticalPointRecord> base,
                                              const std::vector<CriticalPointRecord>& extra,
                                              const Real& dedup_tol) {
  for (const CriticalPointRecord& cand : extra) {
    bool known = false;
    for (CriticalPointRecord& rec : base) {
      if (sup_distance(rec.coordinates, cand.coordinates) < dedup_tol) {
        rec.hits += cand.hits;
        known = true;
        break;
      }
    }
    if (!known) base.push_back(cand);
  }
  return base;
}

Classified classify(const std::vector<CriticalPointRecord>& points, const Tolerances& tol) {
  Classified out;
  for (CriticalPointRecord rec : points) {
    if (abs(rec.value) > tol.value) {
      rec.classification = PointClass::nonzero_value;
      out.nonzero.push_back(std::move(rec));
    } else {
      rec.classification = PointClass::near_zero_value;
      out.near_zero.push_back(std::move(rec));
    }
  }
  std::sort(out.nonzero.begin(), out.nonzero.end(),
            [](const CriticalPointRecord& a, const CriticalPointRecord& b) {
              Real aa = arg(a.value), ab = arg(b.value);
              if (aa != ab) return aa < ab;
              Real ra = real(a.value), rb = real(b.value);
              if (ra != rb) return ra < rb;
              return imag(a.value) < imag(b.value);
            });
  // greedy clustering, reported by count only
  std::vector<VectorXc> reps;
  for (const CriticalPointRecord& rec : out.near_zero) {
    bool matched = false;
    for (const VectorXc& rep : reps)
      if (sup_distance(rep, rec.coordinates) < tol.cluster_radius) {
        matched = true;
        break;
      }
    if (!matched) reps.push_back(rec.coordinates);
  }
  out.near_zero_clusters = static_cast<int>(reps.size());
  return out;
}

}  // namespace lgfano
