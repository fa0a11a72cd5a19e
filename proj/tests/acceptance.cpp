// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Oracles here are plain integer/decimal arithmetic and do
// not go through adder_checks.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "revbcd/builders.hpp"
#include "revbcd/metrics.hpp"
#include "revbcd/simulator.hpp"
#include "revbcd/textio.hpp"
#include "support/random_netlist.hpp"

#ifndef REVBCD_FIXTURE_DIR
#error "REVBCD_FIXTURE_DIR must point at tests/fixtures"
#endif

using namespace revbcd;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using GateCounts = std::map<std::string, std::size_t>;

std::uint64_t outputs_of(const Simulator& sim, std::uint64_t pattern) {
  const auto width = sim.netlist().primary_inputs.size();
  return pack_bits(sim.primary_bits(sim.forward(unpack_bits(pattern, width))));
}

// One-digit BCD: inputs a3..a0 b3..b0 cin, outputs cout z3..z0.
std::size_t decimal_mismatches(const Simulator& sim) {
  std::size_t bad = 0;
  for (unsigned a = 0; a <= 9; ++a) {
    for (unsigned b = 0; b <= 9; ++b) {
      for (unsigned cin = 0; cin <= 1; ++cin) {
        const unsigned sum = a + b + cin;
        const std::uint64_t expected = ((sum / 10) << 4) | (sum % 10);
        if (outputs_of(sim, (a << 5) | (b << 1) | cin) != expected) ++bad;
      }
    }
  }
  return bad;
}

Outcome gate_soundness() {
  Outcome o;
  std::size_t failures = 0;
  std::size_t cases = 0;
  for (auto name : builtin_gate_names()) {
    const auto g = builtin(name);
    std::vector<BitVector> table;
    for (std::uint64_t x = 0; x < (1u << g->arity()); ++x) {
      const auto in = unpack_bits(x, g->arity());
      const auto out = eval_gate(*g, in);
      table.push_back(out);
      ++cases;
      if (inverse_eval_gate(*g, out) != in) ++failures;
    }
    if (!check_bijective(table)) ++failures;
  }
  o.detail << builtin_gate_names().size() << " gates, " << cases << " round-trips, " << failures
           << " failures";
  o.expect(builtin_gate_names().size() == 7, "7 built-ins");
  o.expect(failures == 0, "0 failures");
  return o;
}

Outcome pfag_full_adder() {
  Outcome o;
  const auto pfag = builtin("PFAG");
  std::size_t good = 0;
  for (std::uint8_t x = 0; x < 8; ++x) {
    const std::uint8_t a = (x >> 2) & 1, b = (x >> 1) & 1, c = x & 1;
    const auto out = eval_gate(*pfag, BitVector{a, b, c, 0});
    const unsigned total = a + b + c;
    if (out[2] == total % 2 && out[3] == total / 2) ++good;
  }
  o.detail << good << "/8 cases correct";
  o.expect(good == 8, "8/8");
  return o;
}

Outcome ripple_adder() {
  Outcome o;
  const auto n = build_ripple_adder();
  const auto m = analyze(n);
  const Simulator sim(n);
  std::size_t mismatches = 0;
  for (std::uint64_t x = 0; x < 512; ++x) {
    const std::uint64_t a = x >> 5, b = (x >> 1) & 0xF, cin = x & 1;
    if (outputs_of(sim, x) != a + b + cin) ++mismatches;
  }
  o.detail << "gates " << gate_count_expression(m) << ", QC "
           << (m.quantum_cost ? std::to_string(*m.quantum_cost) : "unknown") << ", constants "
           << m.constants << ", garbage " << m.garbage << ", 512-case mismatches " << mismatches;
  o.expect(m.gates == GateCounts{{"PFAG", 4}}, "exactly 4 PFAG");
  o.expect(m.quantum_cost == QuantumCost{32}, "QC 32");
  o.expect(m.constants == 4, "4 constants");
  o.expect(m.garbage == 8, "8 garbage");
  o.expect(mismatches == 0, "0 mismatches");
  return o;
}

Outcome bcd_design(BcdDesign design, const GateCounts& expected_gates, std::size_t gate_total) {
  Outcome o;
  const auto n = build_bcd_adder(design);
  const auto m = analyze(n);
  const auto mismatches = decimal_mismatches(Simulator(n));
  o.detail << "gates " << gate_count_expression(m) << ", QC "
           << (m.quantum_cost ? std::to_string(*m.quantum_cost) : "unknown") << ", logical "
           << to_string(m.logical) << ", constants " << m.constants
           << ", 200-case mismatches " << mismatches;
  o.expect(m.gates == expected_gates, "gate multiset");
  o.expect(m.gate_count == gate_total, "gate total");
  o.expect(m.quantum_cost == QuantumCost{88}, "QC 88");
  o.expect(m.logical == LogicCost{56, 21, 0}, "56α+21β+0δ");
  o.expect(m.constants == 19, "19 constants");
  o.expect(mismatches == 0, "0 mismatches");
  return o;
}

Outcome bcd_design_2() {
  auto o = bcd_design(BcdDesign::kHnfgCopiers, {{"PFAG", 10}, {"PG", 1}, {"FG", 2}, {"HNFG", 1}},
                      14);
  const auto t1 = truth_table(build_bcd_adder(BcdDesign::kFeynmanCopiers));
  const auto t2 = truth_table(build_bcd_adder(BcdDesign::kHnfgCopiers));
  std::size_t differing = 0;
  for (std::size_t i = 0; i < t1.size(); ++i) differing += t1[i].primary != t2[i].primary;
  o.detail << ", design 1 vs 2 truth tables: " << t1.size() << " rows, " << differing
           << " differ";
  o.expect(t1.size() == 512 && t2.size() == 512, "512 rows");
  o.expect(differing == 0, "identical truth tables");
  return o;
}

Outcome garbage_accounting() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::size_t checked = 0;
  std::size_t violations = 0;
  auto check = [&](const Netlist& n) {
    ++checked;
    const auto m = analyze(n);
    if (m.garbage != n.primary_inputs.size() + n.constants.size() - n.primary_outputs.size()) {
      ++violations;
    }
  };
  for (int i = 0; i < 500; ++i) check(testing::random_netlist(rng));
  check(build_ripple_adder());
  check(build_bcd_adder(BcdDesign::kFeynmanCopiers));
  check(build_bcd_adder(BcdDesign::kHnfgCopiers));
  check(build_bcd_chain(2));

  const auto g1 = analyze(build_bcd_adder(BcdDesign::kFeynmanCopiers)).garbage;
  const auto g2 = analyze(build_bcd_adder(BcdDesign::kHnfgCopiers)).garbage;
  const auto table = compare({{"bcd1", analyze(build_bcd_adder(BcdDesign::kFeynmanCopiers))},
                              {"bcd2", analyze(build_bcd_adder(BcdDesign::kHnfgCopiers))}},
                             true);
  const auto text = render_text(table);
  bool marked = true;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& r = table.rows[i];
    marked = marked && r.garbage == 23 && r.claimed_garbage == std::optional<std::size_t>{24} &&
             r.garbage_discrepancy();
  }
  const bool rendered = text.find("23 (paper-claimed 24) *") != std::string::npos;
  o.detail << checked << " netlists, " << violations << " conservation violations; BCD garbage "
           << g1 << "/" << g2 << " shown against claimed 24 with marker: "
           << (marked && rendered ? "yes" : "no");
  o.expect(violations == 0, "conservation");
  o.expect(g1 == 23 && g2 == 23, "computed 23");
  o.expect(marked && rendered, "discrepancy marker");
  return o;
}

Outcome literature_rows() {
  Outcome o;
  // Expected cells, one string per rendered table cell.
  const std::vector<std::vector<std::string>> expected = {
      {"This study: Design 1", "10 PFAG +4FG+1PG=15", "24", "56α+21β", "88"},
      {"This study: Design 2", "10 PFAG+1PG +2FG+1HNFG=14", "24", "56α+21β", "88"},
      {"BCD adder [15]", "8 HNG +2NG+ 1TG+2FG + 1HNFG=14", "22", "49α+21β+6δ", "Unknown"},
      {"BCD adder [16]", "19+4FG=23", "22", "42α+30β+33δ", "Unknown"},
      {"Conventional BCD adder plus fanout [17]", "11+5FG=16", "22", "59α+30β+33δ", "Unknown"},
      {"Carry skip BCD adder plus fanout [17]", "15+7FG=22", "27", "75α+48β+36δ", "Unknown"},
  };
  const auto text = render_text(compare({}, true));
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (line.find(" | paper-claimed") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto bar = line.find(" | ", start);
      auto cell = line.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
      cell.erase(cell.find_last_not_of(' ') + 1);
      cells.push_back(cell);
      if (bar == std::string::npos) break;
      start = bar + 3;
    }
    // label, source, gate expr, garbage, constants, logical, quantum cost
    if (cells.size() == 7) rows.push_back({cells[0], cells[2], cells[3], cells[5], cells[6]});
  }
  std::size_t matched = 0;
  for (std::size_t i = 0; i < expected.size() && i < rows.size(); ++i) {
    matched += rows[i] == expected[i];
  }
  o.detail << matched << "/6 rows verbatim";
  o.expect(rows.size() == 6, "six rows");
  o.expect(matched == 6, "verbatim rows");
  return o;
}

std::size_t roundtrip_failures(const Simulator& sim, const std::vector<std::uint64_t>& patterns) {
  const auto width = sim.netlist().primary_inputs.size();
  std::size_t failures = 0;
  for (auto x : patterns) {
    const auto in = unpack_bits(x, width);
    const auto src = sim.backward(sim.terminal_bits(sim.forward(in)));
    bool ok = BitVector(src.begin(), src.begin() + static_cast<long>(width)) == in;
    for (std::size_t c = 0; c < sim.netlist().constants.size(); ++c) {
      ok = ok && src[width + c] == sim.netlist().constants[c].value;
    }
    failures += !ok;
  }
  return failures;
}

Outcome reversibility() {
  Outcome o;
  std::vector<std::uint64_t> all(512);
  for (std::uint64_t x = 0; x < 512; ++x) all[x] = x;
  const auto f1 = roundtrip_failures(Simulator(build_bcd_adder(BcdDesign::kFeynmanCopiers)), all);
  const auto f2 = roundtrip_failures(Simulator(build_bcd_adder(BcdDesign::kHnfgCopiers)), all);
  std::mt19937_64 rng(2011);
  std::vector<std::uint64_t> sample(1000);
  for (auto& x : sample) x = rng() & ((std::uint64_t{1} << 33) - 1);
  const Simulator chain(build_bcd_chain(4));
  const auto f3 = roundtrip_failures(chain, sample);
  o.detail << "bcd1 512 patterns " << f1 << " failures, bcd2 512 patterns " << f2
           << " failures, 4-digit chain 1000 random patterns " << f3 << " failures";
  o.expect(chain.netlist().primary_inputs.size() == 33, "33 chain inputs");
  o.expect(f1 == 0 && f2 == 0 && f3 == 0, "identity round trip");
  return o;
}

Outcome chain_correctness() {
  Outcome o;
  const Simulator sim(build_bcd_chain(2));
  auto bcd2 = [](unsigned v) { return std::uint64_t{((v / 10) << 4) | (v % 10)}; };
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  for (unsigned a = 0; a < 100; ++a) {
    for (unsigned b = 0; b < 100; ++b) {
      for (unsigned cin = 0; cin < 2; ++cin) {
        const unsigned sum = a + b + cin;
        const std::uint64_t expected = (std::uint64_t{sum / 100} << 8) | bcd2(sum % 100);
        ++cases;
        if (outputs_of(sim, (bcd2(a) << 9) | (bcd2(b) << 1) | cin) != expected) ++mismatches;
      }
    }
  }
  o.detail << cases << " cases, " << mismatches << " mismatches";
  o.expect(cases == 20000, "20000 cases");
  o.expect(mismatches == 0, "0 mismatches");
  return o;
}

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome format_roundtrip() {
  Outcome o;
  std::size_t builder_ok = 0;
  const std::vector<Netlist> built = {
      build_ripple_adder(), build_bcd_adder(BcdDesign::kFeynmanCopiers),
      build_bcd_adder(BcdDesign::kHnfgCopiers), build_bcd_chain(1), build_bcd_chain(2),
      build_bcd_chain(4)};
  for (const auto& n : built) builder_ok += parse_netlist(serialize_netlist(n)) == n;

  std::mt19937_64 rng(500);
  std::size_t random_ok = 0;
  for (int i = 0; i < 500; ++i) {
    const auto n = testing::random_netlist(rng);
    random_ok += parse_netlist(serialize_netlist(n)) == n;
  }

  const std::filesystem::path dir(REVBCD_FIXTURE_DIR);
  std::size_t rejected = 0;
  const std::vector<std::string> fixtures = {"fanout.rnl", "use_before_def.rnl",
                                             "arity_mismatch.rnl", "duplicate_definition.rnl"};
  for (const auto& f : fixtures) {
    try {
      parse_netlist(read(dir / f));
    } catch (const ParseError& e) {
      const auto& d = e.diagnostics();
      if (!d.empty() && d.front().line > 0 && d.front().token > 0) ++rejected;
    }
  }
  o.detail << "builders " << builder_ok << "/" << built.size() << ", random " << random_ok
           << "/500, invalid fixtures rejected with position " << rejected << "/"
           << fixtures.size();
  o.expect(builder_ok == built.size(), "builder round trip");
  o.expect(random_ok == 500, "random round trip");
  o.expect(rejected == fixtures.size(), "fixtures rejected");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1. gate soundness", gate_soundness},
      {"2. PFAG full-adder contract", pfag_full_adder},
      {"3. ripple adder reproduction", ripple_adder},
      {"4. BCD design 1",
       [] {
         return bcd_design(BcdDesign::kFeynmanCopiers, {{"PFAG", 10}, {"FG", 4}, {"PG", 1}}, 15);
       }},
      {"5. BCD design 2", bcd_design_2},
      {"6. garbage accounting", garbage_accounting},
      {"7. literature table", literature_rows},
      {"8. reversibility at circuit scale", reversibility},
      {"9. chain correctness", chain_correctness},
      {"10. format round trip and diagnostics", format_roundtrip},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail.str() << '\n';
    failed += !o.pass;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << "(" << criteria.size() - failed << "/"
            << criteria.size() << ")\n";
  return failed ? 1 : 0;
}
