#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgfano/laurent.hpp"

namespace lgfano {

// Descriptor of a smooth Fano complete intersection of hypersurfaces of
// degrees d_1..d_k in projective space P^ambient. An empty degree list is
// projective space itself.
struct CIModel {
  std::vector<int> degrees;            // each >= 2
  int ambient = 0;                     // N
  int dim = 0;                         // n = N - k
  int index = 0;                       // i_X = N + 1 - sum d_i
  Integer dconst;                      // d = prod d_i^{d_i}, empty product 1
  std::vector<std::string> var_names;  // x_{i,j} groups then y_1..y_{index-1}

  int k() const { return static_cast<int>(degrees.size()); }
  std::string descriptor() const;
};

struct ModelInvariants {
  int dim = 0;
  int index = 0;
  Integer dconst;
  std::vector<Complex> expected_critical_values;  // index entries, branch order
  int expected_exceptional_count = 0;
  std::optional<long> h1nm1;  // absent for dim < 2
  bool baseline_only = false;  // dim == 1 results are reference-level only
};

// Validates and derives the invariants. Throws std::invalid_argument for
// non-Fano input (index <= 0), degrees <= 1, dim < 1, or k > ambient - 1.
CIModel make_model(const std::vector<int>& degrees, int ambient);

// `d1,...,dk@N` or `@N`
CIModel parse_descriptor(const std::string& text);

// The mirror Laurent polynomial in exactly dim variables:
// prod_i (x_{i,1}+...+x_{i,d_i-1}+1)^{d_i} / (prod x prod y) + y_1+...+y_{index-1}.
LaurentPoly build_givental(const CIModel& model);

// positive real index-th root of dconst
Real d_root(const CIModel& model, mpfr_prec_t precision_bits);

// index * d^(1/index) * exp(2*pi*i*r/index) for r = 0..index-1
Complex expected_critical_value(const CIModel& model, int branch, mpfr_prec_t precision_bits);

ModelInvariants invariants(const CIModel& model, mpfr_prec_t precision_bits);

// h^{1,n-1} of the smooth complete intersection, dim >= 2
long hodge_h1nm1(const CIModel& model);

}  // namespace lgfano
