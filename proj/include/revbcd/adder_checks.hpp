#pragma once

#include <cstddef>
#include <cstdint>

#include "revbcd/simulator.hpp"

namespace revbcd {

/// Reference behavior of an adder over packed patterns, using the port
/// layout of the builders: operand A bits, operand B bits, optional carry-in
/// (inputs); carry-out followed by sum bits (outputs).
struct AdderSpec {
  Oracle oracle;
  Domain domain;
  std::size_t input_width;
  std::size_t output_width;
};

/// Binary addition of two `bits`-wide operands.
AdderSpec binary_adder_spec(std::size_t bits, bool has_carry_in);

/// Decimal addition of two `digits`-digit BCD operands; the domain holds
/// only patterns whose every nibble is a valid digit.
AdderSpec bcd_adder_spec(std::size_t digits, bool has_carry_in);

std::uint64_t to_bcd(std::uint64_t value, std::size_t digits);
/// Returns false when some nibble exceeds 9.
bool from_bcd(std::uint64_t packed, std::size_t digits, std::uint64_t& value);

}  // namespace revbcd
