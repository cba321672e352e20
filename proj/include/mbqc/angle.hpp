#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace mbqc {

/** Angle in [0, 2π), remembering when it is an exact multiple of π/4. */
class Angle {
 public:
  Angle() = default;

  static Angle radians(double value);
  /** k·π/4, exact. */
  static Angle quarters(int k);
  /** Parses "0", "pi", "3pi/4", "-pi/2" or a decimal number of radians. */
  static std::optional<Angle> parse(std::string_view text);

  double value() const { return value_; }
  std::optional<int> quarters() const { return quarters_; }
  bool exact() const { return quarters_.has_value(); }
  /** Canonical text: symbolic when exact, shortest round-trip decimal otherwise. */
  std::string to_string() const;

  friend Angle operator+(const Angle& a, const Angle& b);
  friend Angle operator-(const Angle& a, const Angle& b);
  Angle operator-() const;
  friend bool operator==(const Angle& a, const Angle& b) {
    return a.value_ == b.value_ && a.quarters_ == b.quarters_;
  }

 private:
  Angle(double value, std::optional<int> quarters) : value_(value), quarters_(quarters) {}

  double value_ = 0.0;
  std::optional<int> quarters_ = 0;
};

}  // namespace mbqc
