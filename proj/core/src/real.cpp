#include "zetablock/real.hpp"

#include "zetablock/errors.hpp"

namespace zetablock {

namespace {
std::string take_formatted(const char* fmt, int digits, const Real& x) {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, fmt, digits, x.raw()) < 0 || buf == nullptr)
    throw Error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}
}  // namespace

std::string to_fixed(const Real& x, int digits) {
  return take_formatted("%.*Rf", digits, x);
}

std::string to_scientific(const Real& x, int digits) {
  return take_formatted("%.*Re", digits, x);
}

Real real_from_string(const std::string& text, mpfr_prec_t prec) {
  if (text.empty()) throw ParseError("empty number");
  Real r(prec);
  const char* begin = text.c_str();
  char* end = nullptr;
  mpfr_strtofr(r.raw(), begin, &end, 10, MPFR_RNDN);
  if (end != begin + text.size())
    throw ParseError("not a decimal literal: '" + text + "'");
  return r;
}

}  // namespace zetablock
