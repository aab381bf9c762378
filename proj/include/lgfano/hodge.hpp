#pragma once

#include <vector>

#include "lgfano/rational.hpp"

namespace lgfano {

struct CIModel;

// chi_p = chi(Omega^p) for p = 0..n, computed by Hirzebruch-Riemann-Roch as
// the h^n coefficient of the chi_y class of the virtual tangent bundle,
// evaluated at integer y-samples and interpolated. Exact.
std::vector<Rational> chi_y_polynomial(const CIModel& model);

// h^{1,n-1} extracted from chi_1; requires dim >= 2
long hodge_h1nm1(const CIModel& model);

}  // namespace lgfano
