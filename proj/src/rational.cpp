#include "diastat/rational.hpp"

#include <charconv>
#include <stdexcept>

#include "diastat/errors.hpp"

namespace diastat {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> long long {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw InvalidParameterError("malformed rational component: '" +
                                  std::string(s) + "'");
    }
    return value;
  };

  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(parse_int(text));
    }
    const long long num = parse_int(text.substr(0, slash));
    const long long den = parse_int(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const boost::bad_rational&) {
    throw InvalidParameterError("zero denominator in rational: '" +
                                std::string(text) + "'");
  }
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace diastat
