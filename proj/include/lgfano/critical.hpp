#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lgfano/linalg.hpp"
#include "lgfano/model.hpp"

namespace lgfano {

enum class PointClass { nonzero_value, near_zero_value };

struct CriticalPointRecord {
  VectorXc coordinates;
  Complex value;
  std::optional<int> branch;  // 0..index-1 for the symmetric family
  Real residual;              // max |df/dx_i| at the point
  PointClass classification = PointClass::nonzero_value;
  int hits = 1;  // how many probe starts landed here
};

struct Tolerances {
  Real residual;         // certification bound on the gradient sup-norm
  Real value;            // |f| split between central and non-central points
  Real dedup;            // coordinate sup-distance identifying two finds
  Real value_match_rel;  // relative tolerance for matching expected values
  Real cluster_radius;   // near-zero reporting granularity

  // residual 1e-30, value 1e-10*(1 + index*d^(1/index)), dedup 1e-20,
  // match 1e-20 relative; stated for 256-bit work
  static Tolerances defaults(const CIModel& model, mpfr_prec_t precision_bits);
};

struct ProbeConfig {
  uint64_t seed = 42;
  int trials = 200;
  mpfr_prec_t precision_bits = 256;
  int newton_max_iter = 80;
  double r_min = 0.2;  // sampling annulus for each coordinate modulus
  double r_max = 5.0;
};

enum class NewtonStatus { converged, diverged, singular_jacobian };

struct NewtonResult {
  NewtonStatus status = NewtonStatus::diverged;
  VectorXc point;
  Complex value;
  Real residual;
  int iterations = 0;
};

// Symbolic gradient and Hessian of a fixed polynomial, differentiated once.
class DerivativeCache {
 public:
  explicit DerivativeCache(LaurentPoly f);
  const LaurentPoly& poly() const { return f_; }
  int nvars() const { return f_.nvars(); }
  Complex value(const VectorXc& z, mpfr_prec_t prec) const;
  VectorXc gradient(const VectorXc& z, mpfr_prec_t prec) const;
  MatrixXc hessian(const VectorXc& z, mpfr_prec_t prec) const;

 private:
  LaurentPoly f_;
  std::vector<LaurentPoly> grad_;
  std::vector<std::vector<LaurentPoly>> hess_;  // upper triangle
};

// The index closed-form points: x-coordinates 1, y-coordinates
// phase(r) * d^(1/index); each record re-certified by its gradient residual.
// Throws std::logic_error if certification fails.
std::vector<CriticalPointRecord> symmetric_critical_points(const CIModel& model,
                                                           mpfr_prec_t precision_bits);

NewtonResult newton_refine(const DerivativeCache& cache, VectorXc start,
                           const ProbeConfig& config, const Real& residual_tol);
NewtonResult newton_refine(const LaurentPoly& f, VectorXc start, const ProbeConfig& config,
                           const Real& residual_tol);

struct ProbeStats {
  int trials = 0;
  int converged = 0;
  int diverged = 0;
  int singular = 0;
  int distinct = 0;
};

struct ProbeOutcome {
  std::vector<CriticalPointRecord> points;  // deduplicated, discovery order
  ProbeStats stats;
};

// Seeded random starts, Newton, deduplication. The trial -> start map is a
// pure function of (seed, trial index), so results do not depend on
// scheduling.
ProbeOutcome probe_random(const CIModel& model, const ProbeConfig& config,
                          const Tolerances& tol);

// Fold probe findings into the symmetric list: coincident points bump hits,
// genuinely new ones are appended.
std::vector<CriticalPointRecord> merge_points(std::vector<CriticalPointRecord> base,
                                              const std::vector<CriticalPointRecord>& extra,
                                              const Real& dedup_tol);

struct Classified {
  std::vector<CriticalPointRecord> nonzero;    // sorted by argument of value
  std::vector<CriticalPointRecord> near_zero;  // discovery order
  int near_zero_clusters = 0;
};

Classified classify(const std::vector<CriticalPointRecord>& points, const Tolerances& tol);

}  // namespace lgfano
