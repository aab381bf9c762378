#include "lgfano/root_ext.hpp"

#include <sstream>
#include <stdexcept>

namespace lgfano {

std::pair<RootExt, RootExt> RootExt::align(const RootExt& a, const RootExt& b) {
  if (a.coef_.size() == b.coef_.size()) {
    if (a.coef_.size() > 1 && a.radicand_ != b.radicand_)
      throw std::invalid_argument("ring mismatch: different radicands");
    return {a, b};
  }
  if (a.is_scalar()) {
    RootExt x(b);
    for (Rational& q : x.coef_) q = 0;
    x.coef_[0] = a.coef_[0];
    return {x, b};
  }
  if (b.is_scalar()) {
    RootExt y(a);
    for (Rational& q : y.coef_) q = 0;
    y.coef_[0] = b.coef_[0];
    return {a, y};
  }
  throw std::invalid_argument("ring mismatch: different degrees");
}

std::string RootExt::str() const {
  if (is_scalar()) return to_string(coef_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t i = coef_.size(); i-- > 0;) {
    if (coef_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(coef_[i]);
    if (i >= 1) os << "*t";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  os << " mod t^" << coef_.size() << " - " << to_string(radicand_);
  return os.str();
}

}  // namespace lgfano
