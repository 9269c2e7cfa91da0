#include "gwp/scalar.hpp"

#include <cctype>

#include "gwp/error.hpp"

namespace gwp {

  namespace {
    bool all_digits(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
      num = body.substr(0, slash);
      den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  std::string to_string(Rational const& q) {
    return q.get_str(10);
  }

  std::string to_string(Scalar const& z) {
    if (z.is_real()) {
      return to_string(z.re());
    }
    if (sgn(z.re()) == 0) {
      return to_string(z.im()) + "i";
    }
    std::string im = to_string(z.im());
    if (im.front() != '-') {
      im = "+" + im;
    }
    return to_string(z.re()) + im + "i";
  }

  std::ostream& operator<<(std::ostream& os, Scalar const& z) {
    return os << to_string(z);
  }

}  // namespace gwp
