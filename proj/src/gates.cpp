#include "revbcd/gates.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <sstream>

namespace revbcd {

std::string to_string(const LogicCost& cost) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](std::uint64_t n, const char* symbol) {
    if (n == 0) return;
    if (!first) os << '+';
    os << n << symbol;
    first = false;
  };
  term(cost.alpha, "α");
  term(cost.beta, "β");
  term(cost.delta, "δ");
  if (first) os << '0';
  return os.str();
}

QuantumCost add_costs(QuantumCost lhs, QuantumCost rhs) {
  if (!lhs || !rhs) return std::nullopt;
  return *lhs + *rhs;
}

GateDefinition::GateDefinition(std::string name, std::size_t arity,
                               std::vector<std::uint16_t> table, QuantumCost quantum_cost,
                               LogicCost logic_cost)
    : name_(std::move(name)),
      arity_(arity),
      forward_(std::move(table)),
      quantum_cost_(quantum_cost),
      logic_cost_(logic_cost) {
  if (arity_ < 1 || arity_ > kMaxArity) {
    throw GateError("gate " + name_ + ": arity " + std::to_string(arity_) +
                    " outside [1, " + std::to_string(kMaxArity) + "]");
  }
  const std::size_t rows = std::size_t{1} << arity_;
  if (forward_.size() != rows) {
    throw GateError("gate " + name_ + ": table has " + std::to_string(forward_.size()) +
                    " rows, expected " + std::to_string(rows));
  }
  constexpr std::uint16_t kUnset = 0xffff;
  inverse_.assign(rows, kUnset);
  for (std::size_t x = 0; x < rows; ++x) {
    const auto y = forward_[x];
    if (y >= rows) {
      throw GateError("gate " + name_ + ": output pattern out of range in row " +
                      std::to_string(x));
    }
    if (inverse_[y] != kUnset) {
      throw GateError("gate " + name_ + ": not a bijection, rows " + std::to_string(inverse_[y]) +
                      " and " + std::to_string(x) + " share an output");
    }
    inverse_[y] = static_cast<std::uint16_t>(x);
  }
}

bool GateDefinition::is_bijective() const {
  std::vector<bool> seen(forward_.size(), false);
  for (auto y : forward_) {
    if (y >= seen.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

std::uint64_t pack_bits(std::span<const std::uint8_t> bits) {
  std::uint64_t pattern = 0;
  for (auto b : bits) pattern = (pattern << 1) | (b & 1u);
  return pattern;
}

BitVector unpack_bits(std::uint64_t pattern, std::size_t width) {
  BitVector bits(width);
  for (std::size_t i = 0; i < width; ++i) {
    bits[width - 1 - i] = static_cast<std::uint8_t>((pattern >> i) & 1u);
  }
  return bits;
}

namespace {

void check_length(const GateDefinition& gate, std::size_t size) {
  if (size != gate.arity()) {
    throw ArityError("gate " + gate.name() + " expects " + std::to_string(gate.arity()) +
                     " bits, got " + std::to_string(size));
  }
}

void check_bits(std::span<const std::uint8_t> bits) {
  for (auto b : bits) {
    if (b > 1) throw std::invalid_argument("bit value outside {0,1}");
  }
}

using Algebra = std::function<BitVector(const BitVector&)>;

struct BuiltinSpec {
  std::string_view name;
  std::size_t arity;
  QuantumCost quantum_cost;
  LogicCost logic_cost;
  Algebra algebra;
};

std::uint8_t bit(bool v) { return v ? 1 : 0; }

const std::vector<BuiltinSpec>& builtin_specs() {
  // Output expressions per gate; inputs A, B, C, D map to x[0..3].
  static const std::vector<BuiltinSpec> specs = {
      {"FG", 2, 1, {1, 0, 0},
       [](const BitVector& x) { return BitVector{x[0], bit(x[0] ^ x[1])}; }},
      {"PG", 3, 4, {2, 1, 0},
       [](const BitVector& x) {
         return BitVector{x[0], bit(x[0] ^ x[1]), bit((x[0] & x[1]) ^ x[2])};
       }},
      {"TG", 3, 5, {1, 1, 0},
       [](const BitVector& x) { return BitVector{x[0], x[1], bit((x[0] & x[1]) ^ x[2])}; }},
      {"FRG", 3, 5, {2, 4, 2},
       [](const BitVector& x) {
         const std::uint8_t na = x[0] ^ 1;
         return BitVector{x[0], bit((na & x[1]) ^ (x[0] & x[2])),
                          bit((na & x[2]) ^ (x[0] & x[1]))};
       }},
      {"PFAG", 4, 8, {5, 2, 0},
       [](const BitVector& x) {
         const std::uint8_t p = x[0] ^ x[1];
         return BitVector{x[0], p, bit(p ^ x[2]), bit((p & x[2]) ^ (x[0] & x[1]) ^ x[3])};
       }},
      {"HNG", 4, std::nullopt, {4, 2, 0},
       [](const BitVector& x) {
         const std::uint8_t p = x[0] ^ x[1];
         return BitVector{x[0], x[1], bit(p ^ x[2]), bit((p & x[2]) ^ (x[0] & x[1]) ^ x[3])};
       }},
      {"HNFG", 4, 2, {2, 0, 0},
       [](const BitVector& x) {
         return BitVector{x[0], bit(x[0] ^ x[1]), x[2], bit(x[2] ^ x[3])};
       }},
  };
  return specs;
}

GatePtr make_builtin(const BuiltinSpec& spec) {
  const std::size_t rows = std::size_t{1} << spec.arity;
  std::vector<std::uint16_t> table(rows);
  for (std::size_t x = 0; x < rows; ++x) {
    table[x] = static_cast<std::uint16_t>(pack_bits(spec.algebra(unpack_bits(x, spec.arity))));
  }
  return std::make_shared<const GateDefinition>(std::string(spec.name), spec.arity,
                                                std::move(table), spec.quantum_cost,
                                                spec.logic_cost);
}

}  // namespace

BitVector eval_gate(const GateDefinition& gate, std::span<const std::uint8_t> in) {
  check_length(gate, in.size());
  check_bits(in);
  return unpack_bits(gate.apply(static_cast<std::uint16_t>(pack_bits(in))), gate.arity());
}

BitVector inverse_eval_gate(const GateDefinition& gate, std::span<const std::uint8_t> out) {
  check_length(gate, out.size());
  check_bits(out);
  return unpack_bits(gate.apply_inverse(static_cast<std::uint16_t>(pack_bits(out))),
                     gate.arity());
}

bool check_bijective(const std::vector<BitVector>& table) {
  if (table.empty()) throw std::invalid_argument("truth table is empty");
  const std::size_t width = table.front().size();
  if (width == 0 || width > GateDefinition::kMaxArity) {
    throw std::invalid_argument("truth table width " + std::to_string(width) +
                                " outside [1, " + std::to_string(GateDefinition::kMaxArity) +
                                "]");
  }
  if (table.size() != (std::size_t{1} << width)) {
    throw std::invalid_argument("truth table of width " + std::to_string(width) + " has " +
                                std::to_string(table.size()) + " rows, expected " +
                                std::to_string(std::size_t{1} << width));
  }
  std::vector<bool> seen(table.size(), false);
  bool distinct = true;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const auto& row = table[r];
    if (row.size() != width) {
      throw std::invalid_argument("truth table row " + std::to_string(r) + " has width " +
                                  std::to_string(row.size()) + ", expected " +
                                  std::to_string(width));
    }
    check_bits(row);
    const auto y = pack_bits(row);
    if (seen[y]) distinct = false;
    seen[y] = true;
  }
  return distinct;
}

std::span<const std::string_view> builtin_gate_names() {
  static const std::array<std::string_view, 7> names = {"FG",  "PG",  "TG",  "FRG",
                                                        "PFAG", "HNG", "HNFG"};
  return names;
}

GatePtr builtin(std::string_view name) { return builtin_registry().at(name); }

GateRegistry GateRegistry::with_builtins() {
  GateRegistry registry;
  for (const auto& spec : builtin_specs()) registry.add(make_builtin(spec));
  return registry;
}

void GateRegistry::add(GatePtr gate) {
  if (!gate) throw GateError("cannot register a null gate");
  if (!is_identifier(gate->name())) {
    throw GateError("invalid gate name '" + gate->name() + "'");
  }
  auto [it, inserted] = gates_.emplace(gate->name(), gate);
  if (!inserted) throw GateError("gate " + gate->name() + " is already registered");
}

GatePtr GateRegistry::define_custom_gate(const std::string& name,
                                         const std::vector<BitVector>& table,
                                         QuantumCost quantum_cost, LogicCost logic_cost) {
  if (contains(name)) throw GateError("gate " + name + " is already registered");
  bool bijective = false;
  try {
    bijective = check_bijective(table);
  } catch (const std::invalid_argument& e) {
    throw GateError("gate " + name + ": " + e.what());
  }
  if (!bijective) throw GateError("gate " + name + ": table is not a bijection");

  std::vector<std::uint16_t> packed;
  packed.reserve(table.size());
  for (const auto& row : table) packed.push_back(static_cast<std::uint16_t>(pack_bits(row)));
  auto gate = std::make_shared<const GateDefinition>(name, table.front().size(),
                                                     std::move(packed), quantum_cost, logic_cost);
  add(gate);
  return gate;
}

GatePtr GateRegistry::find(std::string_view name) const {
  auto it = gates_.find(name);
  return it == gates_.end() ? nullptr : it->second;
}

GatePtr GateRegistry::at(std::string_view name) const {
  if (auto gate = find(name)) return gate;
  throw GateError("unknown gate '" + std::string(name) + "'");
}

std::vector<std::string> GateRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(gates_.size());
  for (const auto& [name, gate] : gates_) out.push_back(name);
  return out;
}

const GateRegistry& builtin_registry() {
  static const GateRegistry registry = GateRegistry::with_builtins();
  return registry;
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(text.begin() + 1, text.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace revbcd
