#pragma once

#include <cstddef>
#include <string>

#include "revbcd/netlist.hpp"

namespace revbcd {

enum class BcdDesign {
  kFeynmanCopiers,  // design 1: four FG copy gates
  kHnfgCopiers,     // design 2: one HNFG and two FG copy gates
};

enum class CarryIn {
  kPrimary,       // cin is the last primary input
  kConstantZero,  // cin is tied to a constant 0
};

struct BuildOptions {
  CarryIn carry_in = CarryIn::kPrimary;
  std::string wire_prefix;
};

/// Four PFAG full adders in ripple. Inputs a3..a0 b3..b0 cin, outputs
/// c4 s3 s2 s1 s0, so the packed output equals a + b + cin.
Netlist build_ripple_adder();

/// One-digit BCD adder. Inputs a3..a0 b3..b0 [cin], outputs cout z3..z0.
/// Both designs use 19 constant lines in either carry-in mode.
Netlist build_bcd_adder(BcdDesign design, const BuildOptions& opts = {});

/// n digits of design 2 rippling decimal carry. Inputs are operand A's
/// digits most significant first, then B's, then cin; outputs are the final
/// carry followed by the sum digits most significant first. Wires of digit
/// i carry the prefix "d<i>_". Throws std::invalid_argument for n < 1.
Netlist build_bcd_chain(std::size_t digits);

}  // namespace revbcd
