#pragma once

#include <utility>
#include <vector>

#include "lgfano/critical.hpp"
#include "lgfano/model.hpp"
#include "lgfano/root_ext.hpp"

namespace Eigen {
template <>
struct NumTraits<lgfano::RootExt> : GenericNumTraits<lgfano::RootExt> {
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = HugeCost,
    AddCost = HugeCost,
    MulCost = HugeCost
  };
  typedef lgfano::RootExt Real;
  typedef lgfano::RootExt NonInteger;
  typedef lgfano::RootExt Nested;
  static inline lgfano::RootExt epsilon() { return lgfano::RootExt(0); }
  static inline lgfano::RootExt dummy_precision() { return lgfano::RootExt(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace lgfano {

using ChartPoly = Laurent<RootExt>;
using MatrixXre = Eigen::Matrix<RootExt, Eigen::Dynamic, Eigen::Dynamic>;

// Determinant of the m x m matrix with constant diagonal and constant
// off-diagonal, via the factored form (diag-off)^(m-1) * (diag+(m-1)*off).
// The second component reports whether the determinant vanishes, which
// happens exactly when diag == off (m >= 2) or diag + (m-1)*off == 0.
std::pair<Rational, bool> uniform_matrix_det(const Rational& off, const Rational& diag, int m);

// Local equation of the compactified family at the branch-r critical point,
// written in coordinates centered at the point and expanded exactly over
// Q[t]/(t^index - d); t stands for the branch value of d^(1/index).
// Variable order: a-groups first, then b_1..b_{index-1}.
struct ChartPolynomial {
  ChartPoly g;
  int branch = 0;
};

// Throws std::logic_error if the constant or a linear coefficient survives
// reduction (both must vanish identically in the ring).
ChartPolynomial build_chart_polynomial(const CIModel& model, int branch = 0);

// Matrix of the quadratic form of g: H_uu = 2 * coeff(v_u^2),
// H_uv = coeff(v_u v_v).
MatrixXre extract_quadratic_matrix(const ChartPoly& g);

// Two candidate diagonal conventions for the a-blocks of the closed form:
// `plain` puts D_i on the diagonal, `doubled` puts 2*D_i. Off-diagonal
// entries are M_i = D_i - d in both; the b-block is 2*t^(index-2) diagonal
// with t^(index-2) off-diagonal in both.
enum class DiagConvention { plain, doubled };

MatrixXre closed_form_matrix(const CIModel& model, DiagConvention convention);

struct BlockFactors {
  char kind = 'a';  // 'a' for a degree block, 'b' for the tail block
  int block_index = 0;
  int size = 0;
  std::vector<RootExt> factors;  // {diag} for size 1, {diag-off, diag+(m-1)off} otherwise
  bool nondegenerate = false;
};

struct NondegeneracyReport {
  std::vector<BlockFactors> blocks;
  bool nondegenerate = true;
};

// Per-block determinant factors of the closed form, exact, plus a numeric
// evaluation at t -> positive real root as a cross-check.
NondegeneracyReport block_nondegeneracy(const CIModel& model, DiagConvention convention,
                                        mpfr_prec_t precision_bits = 256);

enum class ConventionMatch { plain, doubled, both, neither };

// Exact chart-side analysis at a given branch (the ring data is branch
// independent; the branch only selects the numeric evaluation phase).
struct ChartAnalysis {
  ChartPolynomial chart;
  bool constant_zero = false;
  bool linear_zero = false;
  MatrixXre extracted;
  MatrixXre closed_plain;
  MatrixXre closed_doubled;
  ConventionMatch convention_match = ConventionMatch::neither;
  NondegeneracyReport blocks;  // for the matched convention (plain on ties)
};

ChartAnalysis analyze_chart(const CIModel& model, int branch = 0,
                            mpfr_prec_t precision_bits = 256);

// Numeric certification at one critical point: ordinary double point iff the
// full Hessian has rank n, ranks read from singular values against
// 1e-10 * sigma_max.
struct HessianReport {
  int branch = -1;  // -1 for unlabeled points
  MatrixXc numeric_hessian;
  std::vector<Real> singular_values;  // descending
  int rank = 0;
  int dimension = 0;
  bool odp_certified = false;
};

HessianReport certify_odp(const CIModel& model, const CriticalPointRecord& point,
                          mpfr_prec_t precision_bits);

}  // namespace lgfano
