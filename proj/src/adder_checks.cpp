#include "revbcd/adder_checks.hpp"

#include <stdexcept>

namespace revbcd {

namespace {

struct Operands {
  std::uint64_t a;
  std::uint64_t b;
  std::uint64_t cin;
};

Operands split(std::uint64_t x, std::size_t width, bool has_carry_in) {
  const std::size_t c = has_carry_in ? 1 : 0;
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  return {(x >> (width + c)) & mask, (x >> c) & mask, has_carry_in ? (x & 1u) : 0};
}

}  // namespace

std::uint64_t to_bcd(std::uint64_t value, std::size_t digits) {
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < digits; ++i) {
    packed |= (value % 10) << (4 * i);
    value /= 10;
  }
  return packed;
}

bool from_bcd(std::uint64_t packed, std::size_t digits, std::uint64_t& value) {
  value = 0;
  for (std::size_t i = digits; i-- > 0;) {
    const auto nibble = (packed >> (4 * i)) & 0xFu;
    if (nibble > 9) return false;
    value = value * 10 + nibble;
  }
  return true;
}

AdderSpec binary_adder_spec(std::size_t bits, bool has_carry_in) {
  if (bits < 1 || 2 * bits + 1 > 63) throw std::invalid_argument("unsupported adder width");
  AdderSpec spec;
  spec.input_width = 2 * bits + (has_carry_in ? 1 : 0);
  spec.output_width = bits + 1;
  spec.oracle = [bits, has_carry_in](std::uint64_t x) {
    const auto ops = split(x, bits, has_carry_in);
    return ops.a + ops.b + ops.cin;
  };
  spec.domain = [](std::uint64_t) { return true; };
  return spec;
}

AdderSpec bcd_adder_spec(std::size_t digits, bool has_carry_in) {
  if (digits < 1 || 8 * digits + 1 > 63) throw std::invalid_argument("unsupported digit count");
  const std::size_t width = 4 * digits;
  AdderSpec spec;
  spec.input_width = 2 * width + (has_carry_in ? 1 : 0);
  spec.output_width = width + 1;
  std::uint64_t modulus = 1;
  for (std::size_t i = 0; i < digits; ++i) modulus *= 10;
  spec.oracle = [=](std::uint64_t x) {
    const auto ops = split(x, width, has_carry_in);
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    from_bcd(ops.a, digits, a);
    from_bcd(ops.b, digits, b);
    const auto sum = a + b + ops.cin;
    return ((sum / modulus) << width) | to_bcd(sum % modulus, digits);
  };
  spec.domain = [=](std::uint64_t x) {
    const auto ops = split(x, width, has_carry_in);
    std::uint64_t ignored = 0;
    return from_bcd(ops.a, digits, ignored) && from_bcd(ops.b, digits, ignored);
  };
  return spec;
}

}  // namespace revbcd
