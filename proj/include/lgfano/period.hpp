#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgfano/model.hpp"

namespace lgfano {

inline constexpr size_t kDefaultTermCap = 5'000'000;

// Raised when the incremental power of the mirror polynomial outgrows the
// configured term cap; carries how many orders were completed.
struct PeriodCapExceeded : std::runtime_error {
  PeriodCapExceeded(size_t completed, size_t terms)
      : std::runtime_error("period term cap exceeded after order " + std::to_string(completed)),
        completed_orders(completed),
        term_count(terms) {}
  size_t completed_orders;
  size_t term_count;
};

struct PeriodReport {
  std::string descriptor;
  size_t max_order = 0;      // requested M
  size_t computed_order = 0; // == max_order unless capped
  bool capped = false;
  std::vector<Rational> constant_terms;  // computed_order + 1 entries
  std::vector<Rational> closed_form;     // same length
  bool match = false;
  std::optional<size_t> first_mismatch;
};

// Constant terms of f^m for m = 0..M, exact. Throws PeriodCapExceeded when an
// intermediate power outgrows term_cap.
std::vector<Rational> period_sequence(const CIModel& model, size_t M,
                                      size_t term_cap = kDefaultTermCap);

// Closed-form coefficients: zero unless m = index*l, then
// (index*l)! * prod_i (d_i*l)! / (l!)^(ambient+1).
std::vector<Rational> givental_coefficients(const CIModel& model, size_t M);

// Entrywise comparison of the two sequences; on a cap the comparison covers
// the orders actually computed and the report says so.
PeriodReport compare_periods(const CIModel& model, size_t M,
                             size_t term_cap = kDefaultTermCap);

}  // namespace lgfano
