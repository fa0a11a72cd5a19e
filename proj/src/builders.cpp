#include "revbcd/builders.hpp"

#include <array>
#include <stdexcept>

namespace revbcd {

namespace {

using Bus = std::array<std::string, 4>;  // index = bit weight exponent

class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::string name) { net_.name = std::move(name); }

  void set_prefix(std::string prefix) {
    prefix_ = std::move(prefix);
    next_constant_ = 0;
    next_garbage_ = 0;
  }

  std::string w(const std::string& local) const { return prefix_ + local; }

  std::string input(const std::string& local) {
    net_.primary_inputs.push_back(w(local));
    return net_.primary_inputs.back();
  }

  std::string constant(const std::string& local, std::uint8_t value = 0) {
    net_.constants.push_back({w(local), value});
    return net_.constants.back().wire;
  }

  std::string zero() { return constant("k" + std::to_string(next_constant_++)); }
  std::string garbage() { return w("g" + std::to_string(next_garbage_++)); }

  void gate(std::string_view name, std::vector<std::string> inputs,
            std::vector<std::string> outputs) {
    net_.gates.push_back({builtin(name), std::move(inputs), std::move(outputs)});
  }

  void output(const std::string& wire) { net_.primary_outputs.push_back(wire); }

  Netlist finish() && {
    require_valid(net_);
    return std::move(net_);
  }

 private:
  Netlist net_;
  std::string prefix_;
  std::size_t next_constant_ = 0;
  std::size_t next_garbage_ = 0;
};

Bus declare_bus(CircuitBuilder& cb, const std::string& stem) {
  Bus bus;
  for (int i = 3; i >= 0; --i) bus[i] = cb.input(stem + std::to_string(i));
  return bus;
}

struct RippleResult {
  Bus sum;
  std::string carry;
};

// PFAG(a_i, b_i, c_i, 0) -> (garbage, garbage, s_i, c_{i+1}).
RippleResult ripple_stage(CircuitBuilder& cb, const Bus& a, const Bus& b, std::string carry) {
  RippleResult r;
  for (int i = 0; i < 4; ++i) {
    r.sum[i] = cb.w("s" + std::to_string(i));
    auto next = cb.w("c" + std::to_string(i + 1));
    auto g0 = cb.garbage();
    auto g1 = cb.garbage();
    cb.gate("PFAG", {a[i], b[i], carry, cb.zero()}, {g0, g1, r.sum[i], next});
    carry = next;
  }
  r.carry = carry;
  return r;
}

struct DigitResult {
  Bus z;
  std::string cout;
};

// Binary sum s, overflow ov = c4 + s3 s2 + s3 s1, then s + 0110 when ov.
// With reuse_zero the tripler's constant-0 output feeds the last correction
// adder instead of a fresh constant line.
DigitResult bcd_digit(CircuitBuilder& cb, BcdDesign design, const Bus& a, const Bus& b,
                      const std::string& cin, bool reuse_zero) {
  const auto [s, c4] = ripple_stage(cb, a, b, cin);

  // PFAG(s2, 0, 0, 0) = (s2, s2, s2, 0)
  const auto spare_zero = reuse_zero ? cb.w("zero") : std::string();
  {
    auto g0 = cb.garbage();
    auto k0 = cb.zero();
    auto k1 = cb.zero();
    auto k2 = cb.zero();
    cb.gate("PFAG", {s[2], k0, k1, k2},
            {cb.w("s2_1"), cb.w("s2_2"), g0, reuse_zero ? spare_zero : cb.garbage()});
  }

  if (design == BcdDesign::kHnfgCopiers) {
    auto k0 = cb.zero();
    auto k1 = cb.zero();
    cb.gate("HNFG", {s[1], k0, s[3], k1},
            {cb.w("s1_1"), cb.w("s1_2"), cb.w("s3_1"), cb.w("s3_2")});
  } else {
    cb.gate("FG", {s[1], cb.zero()}, {cb.w("s1_1"), cb.w("s1_2")});
    cb.gate("FG", {s[3], cb.zero()}, {cb.w("s3_1"), cb.w("s3_2")});
  }

  // x1 = s2 ^ s1 and x2 = s2 s1 are never both 1, so the detector PFAG's
  // carry output reduces to (s1 | s2) s3 ^ c4.
  {
    auto g0 = cb.garbage();
    cb.gate("PG", {cb.w("s2_1"), cb.w("s1_1"), cb.zero()}, {g0, cb.w("x1"), cb.w("x2")});
    auto g1 = cb.garbage();
    auto g2 = cb.garbage();
    auto g3 = cb.garbage();
    cb.gate("PFAG", {cb.w("x1"), cb.w("x2"), cb.w("s3_1"), c4}, {g1, g2, g3, cb.w("ov")});
  }

  DigitResult r;
  r.cout = cb.w("cout");
  cb.gate("FG", {cb.w("ov"), cb.zero()}, {cb.w("ov_1"), cb.w("ov_m")});
  cb.gate("FG", {cb.w("ov_m"), cb.zero()}, {cb.w("ov_2"), r.cout});

  // Correction adder: s + (0, ov, ov, 0) with a zero carry-in.
  for (int i = 0; i < 4; ++i) r.z[i] = cb.w("z" + std::to_string(i));
  {
    auto g0 = cb.garbage();
    auto g1 = cb.garbage();
    auto k0 = cb.zero();
    auto k1 = cb.zero();
    auto k2 = cb.zero();
    cb.gate("PFAG", {s[0], k0, k1, k2}, {g0, g1, r.z[0], cb.w("e1")});
  }
  {
    auto g0 = cb.garbage();
    auto g1 = cb.garbage();
    cb.gate("PFAG", {cb.w("s1_2"), cb.w("ov_1"), cb.w("e1"), cb.zero()},
            {g0, g1, r.z[1], cb.w("e2")});
  }
  {
    auto g0 = cb.garbage();
    auto g1 = cb.garbage();
    cb.gate("PFAG", {cb.w("s2_2"), cb.w("ov_2"), cb.w("e2"), cb.zero()},
            {g0, g1, r.z[2], cb.w("e3")});
  }
  {
    auto g0 = cb.garbage();
    auto g1 = cb.garbage();
    auto addend = reuse_zero ? spare_zero : cb.zero();
    auto k0 = cb.zero();
    auto g2 = cb.garbage();
    cb.gate("PFAG", {cb.w("s3_2"), addend, cb.w("e3"), k0}, {g0, g1, r.z[3], g2});
  }
  return r;
}

}  // namespace

Netlist build_ripple_adder() {
  CircuitBuilder cb("ripple4");
  const auto a = declare_bus(cb, "a");
  const auto b = declare_bus(cb, "b");
  const auto cin = cb.input("cin");
  const auto r = ripple_stage(cb, a, b, cin);
  cb.output(r.carry);
  for (int i = 3; i >= 0; --i) cb.output(r.sum[i]);
  return std::move(cb).finish();
}

Netlist build_bcd_adder(BcdDesign design, const BuildOptions& opts) {
  std::string name = design == BcdDesign::kFeynmanCopiers ? "bcd1" : "bcd2";
  if (opts.carry_in == CarryIn::kConstantZero) name += "_const_cin";
  CircuitBuilder cb(name);
  cb.set_prefix(opts.wire_prefix);
  const auto a = declare_bus(cb, "a");
  const auto b = declare_bus(cb, "b");
  const bool primary = opts.carry_in == CarryIn::kPrimary;
  const auto cin = primary ? cb.input("cin") : cb.constant("cin", 0);
  const auto r = bcd_digit(cb, design, a, b, cin, !primary);
  cb.output(r.cout);
  for (int i = 3; i >= 0; --i) cb.output(r.z[i]);
  return std::move(cb).finish();
}

Netlist build_bcd_chain(std::size_t digits) {
  if (digits < 1) throw std::invalid_argument("bcd chain needs at least one digit");
  CircuitBuilder cb("bcd_chain_" + std::to_string(digits));
  auto prefix = [](std::size_t i) { return "d" + std::to_string(i) + "_"; };

  std::vector<Bus> a(digits), b(digits);
  for (std::size_t i = digits; i-- > 0;) {
    cb.set_prefix(prefix(i));
    a[i] = declare_bus(cb, "a");
  }
  for (std::size_t i = digits; i-- > 0;) {
    cb.set_prefix(prefix(i));
    b[i] = declare_bus(cb, "b");
  }
  cb.set_prefix("");
  std::string carry = cb.input("cin");

  std::vector<Bus> z(digits);
  for (std::size_t i = 0; i < digits; ++i) {
    cb.set_prefix(prefix(i));
    auto r = bcd_digit(cb, BcdDesign::kHnfgCopiers, a[i], b[i], carry, false);
    z[i] = r.z;
    carry = r.cout;
  }
  cb.output(carry);
  for (std::size_t i = digits; i-- > 0;) {
    for (int bit = 3; bit >= 0; --bit) cb.output(z[i][bit]);
  }
  return std::move(cb).finish();
}

}  // namespace revbcd
