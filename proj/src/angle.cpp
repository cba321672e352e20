#include "mbqc/angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <regex>

#include "json.hpp"

namespace mbqc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalize(double v) {
  double r = std::fmod(v, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

int normalize_quarters(int k) { return ((k % 8) + 8) % 8; }

}  // namespace

Angle Angle::radians(double value) {
  return Angle(normalize(value), std::nullopt);
}

Angle Angle::quarters(int k) {
  int q = normalize_quarters(k);
  return Angle(q * std::numbers::pi / 4.0, q);
}

std::optional<Angle> Angle::parse(std::string_view text) {
  static const std::regex symbolic(R"((-)?(\d*)pi(?:/(\d+))?)");
  std::string s(text);
  std::smatch m;
  if (s == "0") return quarters(0);
  if (std::regex_match(s, m, symbolic)) {
    int num = m[2].length() ? std::stoi(m[2]) : 1;
    int den = m[3].length() ? std::stoi(m[3]) : 1;
    if (den == 0) return std::nullopt;
    if (m[1].length()) num = -num;
    if ((4 * num) % den == 0) return quarters(4 * num / den);
    return radians(num * std::numbers::pi / den);
  }
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return radians(v);
}

std::string Angle::to_string() const {
  if (quarters_) {
    static const char* names[8] = {"0",  "pi/4",  "pi/2",  "3pi/4",
                                   "pi", "5pi/4", "3pi/2", "7pi/4"};
    return names[*quarters_];
  }
  return nlohmann::json(value_).dump();
}

Angle operator+(const Angle& a, const Angle& b) {
  if (a.quarters_ && b.quarters_) return Angle::quarters(*a.quarters_ + *b.quarters_);
  return Angle::radians(a.value_ + b.value_);
}

Angle operator-(const Angle& a, const Angle& b) { return a + (-b); }

Angle Angle::operator-() const {
  if (quarters_) return quarters(-*quarters_);
  return radians(-value_);
}

}  // namespace mbqc
