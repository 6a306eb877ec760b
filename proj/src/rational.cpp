#include "ordlogic/rational.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <sstream>

namespace ordlogic {

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

std::string render_approx(const Rat& r) {
  std::ostringstream os;
  os << to_string(r);
  if (r.denominator() != 1) {
    double d = static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (~%.4f)", d);
    os << buf;
  }
  return os.str();
}

std::optional<Rat> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      size_t p1 = 0, p2 = 0;
      long long num = std::stoll(text.substr(0, slash), &p1);
      long long den = std::stoll(text.substr(slash + 1), &p2);
      if (p1 != slash || p2 != text.size() - slash - 1 || den == 0) return std::nullopt;
      return Rat(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      size_t p = 0;
      long long num = std::stoll(digits, &p);
      if (p != digits.size()) return std::nullopt;
      long long den = 1;
      for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return Rat(num, den);
    }
    size_t p = 0;
    long long num = std::stoll(text, &p);
    if (p != text.size()) return std::nullopt;
    return Rat(num);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

namespace {

std::optional<long long> isqrt_exact(long long v) {
  if (v < 0) return std::nullopt;
  long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
  for (long long c = std::max(0LL, r - 2); c <= r + 2; ++c)
    if (c * c == v) return c;
  return std::nullopt;
}

}  // namespace

std::optional<Rat> rational_sqrt_exact(const Rat& r) {
  if (r < 0) return std::nullopt;
  auto n = isqrt_exact(r.numerator());
  auto d = isqrt_exact(r.denominator());
  if (n && d) return Rat(*n, *d);
  return std::nullopt;
}

Rat rational_sqrt(const Rat& r) {
  if (auto exact = rational_sqrt_exact(r)) return *exact;
  double d = std::sqrt(static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()));
  // continued-fraction style approximation with a bounded denominator
  long long den = 1000000;
  long long num = static_cast<long long>(std::llround(d * static_cast<double>(den)));
  return Rat(num, den);
}

Rat clamp01(const Rat& r) {
  if (r < Rat(0)) return Rat(0);
  if (r > Rat(1)) return Rat(1);
  return r;
}

}  // namespace ordlogic
