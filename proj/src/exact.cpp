#include "p1gw/exact.hpp"

#include <gmp.h>

#include <cctype>
#include <vector>

#include "p1gw/errors.hpp"

namespace p1gw {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(int n, int k) {
  if (n < 0) throw InvalidArgument("binomial with negative n");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt pow(const BigInt& b, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rational pow(const Rational& r, int e) {
  if (e < 0) {
    if (r == 0) throw InvalidArgument("zero raised to a negative power");
    Rational inv = 1 / r;
    return pow(inv, -e);
  }
  const auto ue = static_cast<unsigned>(e);
  Rational out(pow(BigInt(r.get_num()), ue), pow(BigInt(r.get_den()), ue));
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return MalformedValue("not a rational: \"" + std::string(text) + "\""); };
  if (text.empty()) throw bad();
  std::size_t pos = 0;
  auto digits = [&](std::size_t from) {
    std::size_t i = from;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return i;
  };
  if (text[pos] == '-' || text[pos] == '+') ++pos;
  std::size_t end_num = digits(pos);
  if (end_num == pos) throw bad();
  std::size_t end = end_num;
  if (end < text.size()) {
    if (text[end] != '/') throw bad();
    std::size_t end_den = digits(end + 1);
    if (end_den == end + 1 || end_den != text.size()) throw bad();
    end = end_den;
  }
  std::string s(text.front() == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw bad();
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& r, int digits) {
  if (r == 0) return "0";
  mpf_class f(0, 512);
  f = r;
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fe", digits - 1, f.get_mpf_t());
  return std::string(buf.data());
}

}  // namespace p1gw
