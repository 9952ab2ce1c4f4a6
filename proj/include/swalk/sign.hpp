#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace swalk {

/// Element of the two-element sign group {+, -}.
enum class Sign : std::uint8_t { plus = 0, minus = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<Sign>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr Sign& operator*=(Sign& a, Sign b) noexcept { return a = a * b; }

constexpr Sign sign_mul(Sign a, Sign b) noexcept { return a * b; }

constexpr Sign negate(Sign s) noexcept { return s * Sign::minus; }

constexpr char to_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

/// Accepts exactly "+" or "-".
constexpr std::optional<Sign> parse_sign(std::string_view text) noexcept {
  if (text == "+") return Sign::plus;
  if (text == "-") return Sign::minus;
  return std::nullopt;
}

}  // namespace swalk
