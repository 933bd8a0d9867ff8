#include "zetablock/parse.hpp"

#include <cctype>

#include "zetablock/errors.hpp"

namespace zetablock {

namespace {

std::string strip(const std::string& text) {
  size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  return text.substr(a, b - a);
}

/// Position of the +/- that splits real and imaginary parts, or npos.
/// Signs at position 0 and signs directly after an exponent marker belong
/// to the literals themselves.
size_t split_position(const std::string& text) {
  for (size_t i = 1; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch != '+' && ch != '-') continue;
    const char prev = text[i - 1];
    if (prev == 'e' || prev == 'E') continue;
    return i;
  }
  return std::string::npos;
}

}  // namespace

Complex parse_complex(const std::string& text, const PrecisionContext& ctx) {
  const std::string body = strip(text);
  if (body.empty()) throw ParseError("empty complex literal");
  const mpfr_prec_t p = ctx.mantissa_bits;

  const size_t split = split_position(body);
  if (split == std::string::npos) {
    if (body.back() == 'i' || body.back() == 'I')
      throw ParseError("complex literal must be RE, RE+IMi or RE-IMi: '" + text + "'");
    return Complex::from_real(real_from_string(body, p));
  }

  if (body.back() != 'i' && body.back() != 'I')
    throw ParseError("imaginary part must end in 'i': '" + text + "'");
  const std::string re_part = body.substr(0, split);
  std::string im_part = body.substr(split, body.size() - split - 1);
  if (im_part == "+" || im_part == "-") im_part += "1";
  return {real_from_string(re_part, p), real_from_string(im_part, p)};
}

std::string format_fixed(const Real& x, int digits) { return to_fixed(x, digits); }

std::string format_scientific(const Real& x, int digits) { return to_scientific(x, digits); }

}  // namespace zetablock
