#include "hypgamma/format.hpp"

#include <cstdlib>

namespace hypgamma {

std::string format_value(const PrecReal& v, int digits) {
  if (v.is_zero()) return "0";
  const std::string sci = v.to_string(digits);
  const auto epos = sci.find('e');
  if (epos == std::string::npos) return sci;
  const int exp10 = std::atoi(sci.c_str() + epos + 1);
  if (exp10 >= -4 && exp10 < digits) {
    int decimals = digits - 1 - exp10;
    if (decimals < 0) decimals = 0;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rf", decimals, v.raw());
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }
  return sci;
}

}  // namespace hypgamma
