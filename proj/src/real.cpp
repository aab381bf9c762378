#include "lgfano/real.hpp"

namespace lgfano {

std::string Real::str(size_t digits10) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_signbit(v_) ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";
  if (digits10 == 0) digits10 = mpfr_get_str_ndigits(10, mpfr_get_prec(v_));
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, digits10, v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  size_t last = mant.find_last_not_of('0');
  mant.erase(last + 1);
  std::string out = neg ? "-" : "";
  out += mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e" + std::to_string(static_cast<long>(e - 1));
  return out;
}

}  // namespace lgfano
