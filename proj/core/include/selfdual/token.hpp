#pragma once

#include <compare>
#include <cstdint>

namespace selfdual {

// A single value of a surjection over A u K: either a letter of the alphabet or
// a numeral. Letters compare below every numeral and among themselves by index,
// so the default ordering on the raw encoding is the order on A u K.
class Token {
 public:
  constexpr Token() = default;

  static constexpr Token numeral(int n) { return Token(n); }
  static constexpr Token letter(int index) { return Token(index - kLetterBias); }

  constexpr bool is_letter() const { return raw_ < 0; }
  constexpr bool is_numeral() const { return raw_ >= 0; }

  // Numeral value, or letter index for letters.
  constexpr int value() const { return is_letter() ? raw_ + kLetterBias : raw_; }

  constexpr auto operator<=>(const Token&) const = default;

 private:
  static constexpr std::int32_t kLetterBias = 1 << 30;

  constexpr explicit Token(std::int32_t raw) : raw_(raw) {}

  std::int32_t raw_ = 0;
};

}  // namespace selfdual
