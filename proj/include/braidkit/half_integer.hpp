#pragma once

#include <compare>
#include <string>

namespace braidkit {

// Value in (1/2)Z, stored as twice the value.
class HalfInteger {
public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
  static constexpr HalfInteger from_int(int value) { return HalfInteger(2 * value); }

  constexpr int twice() const noexcept { return twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
  constexpr double to_double() const noexcept { return twice_ / 2.0; }

  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline std::string to_string(HalfInteger h) {
  if (h.is_integer()) return std::to_string(h.twice() / 2);
  return std::to_string(h.twice()) + "/2";
}

}  // namespace braidkit
