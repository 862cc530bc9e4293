#include "lglab/rational.hpp"

#include "lglab/error.hpp"

#include <cctype>

namespace lglab {

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos > start;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (!digits(i)) throw ParseError("expected an integer", i);
  std::size_t num_end = i;
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    std::size_t start = ++i;
    if (!digits(i)) throw ParseError("expected a denominator", i);
    den = std::string(text.substr(start, i - start));
  }
  if (i != text.size()) throw ParseError("unexpected character in rational", i);
  std::string num(text.substr(0, num_end));
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw DomainError("zero denominator in rational literal");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace lglab
