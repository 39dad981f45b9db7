#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace thresh {

// Exact fraction p/q in lowest terms with q > 0. Threshold fractions are kept
// rational so that "at least an alpha fraction" never suffers rounding ties.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "p/q", an integer, or a decimal literal such as "0.25".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // ceil(x * k) and floor(x * k) for integer k >= 0.
  std::int64_t ceil_times(std::int64_t k) const;
  std::int64_t floor_times(std::int64_t k) const;

  bool strictly_between_zero_and_one() const { return num_ > 0 && num_ < den_; }

  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace thresh
