#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "generators.hpp"
#include "printers.hpp"
#include "sigcalc/errors.hpp"
#include "sigcalc/waveio.hpp"

using namespace sigcalc;

namespace {

Signal sig(std::string_view set) { return Signal::from_set(set); }

struct ParsedVcd {
  std::string scale;
  std::vector<long> ticks;
  std::map<std::string, std::vector<std::pair<long, Bit>>> changes;  // by name, $dumpvars at -1
};

ParsedVcd read_vcd(const std::string& text) {
  ParsedVcd out;
  std::map<std::string, std::string> names;
  std::istringstream in(text);
  std::string line;
  long now = -1;
  while (std::getline(in, line)) {
    if (auto pos = line.find("1 tick = 1/"); pos != std::string::npos) {
      std::istringstream(line.substr(pos + 11)) >> out.scale;
    } else if (line.rfind("$var", 0) == 0) {
      std::istringstream ws(line);
      std::string var, wire, width, code, name;
      ws >> var >> wire >> width >> code >> name;
      names[code] = name;
    } else if (!line.empty() && line[0] == '#') {
      now = std::stol(line.substr(1));
      out.ticks.push_back(now);
    } else if (!line.empty() && (line[0] == '0' || line[0] == '1')) {
      out.changes[names.at(line.substr(1))].emplace_back(now, line[0] == '1');
    }
  }
  return out;
}

}  // namespace

TEST(Bsig, Examples) {
  EXPECT_EQ(parse_bsig("0 1\n1 0\n2 1\n3 0"), sig("[0,1) u [2,3)"));
  EXPECT_EQ(parse_bsig(""), sig("empty"));
  EXPECT_EQ(parse_bsig("1/2 1\n0.75 0"), sig("[1/2,3/4)"));
}

TEST(Bsig, HeaderCommentsAndBlankLines) {
  const BsigDocument doc = parse_bsig_document("# bsig 1\n# name: clk\n\n0 1 # rise\n  \n5/2 0\n");
  EXPECT_EQ(doc.version, 1);
  EXPECT_EQ(doc.name, "clk");
  EXPECT_EQ(doc.signal, sig("[0,5/2)"));
  EXPECT_EQ(parse_bsig_document(write_bsig(doc)), doc);
}

TEST(Bsig, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) {
    try {
      parse_bsig(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("0 1\n1 2"), 2u);
  EXPECT_EQ(line_of("0 1\n2 0\n1 1"), 3u);
  EXPECT_EQ(line_of("-1 1"), 1u);
  EXPECT_EQ(line_of("# note\nabc"), 2u);
  EXPECT_EQ(line_of("0 1\n0.1.2 0"), 2u);
  EXPECT_EQ(line_of("0 1\n1 0\n1 1"), 3u);
}

TEST(Bsig, RoundTripIsExact) {
  gen::Source src(149, 7);
  for (int trial = 0; trial < 1000; ++trial) {
    const Signal x = src.signal(10, 20);
    const std::string text = write_bsig(x, trial % 2 ? std::optional<std::string>("x") : std::nullopt);
    EXPECT_EQ(parse_bsig(text), x);
    EXPECT_EQ(write_bsig(parse_bsig_document(text)), text);
  }
}

TEST(Vcd, ScalesByCommonDenominator) {
  const ParsedVcd v = read_vcd(export_vcd({{"x", indicator("[0,1/2) u [3/2,inf)")}}));
  EXPECT_EQ(v.scale, "2");
  EXPECT_EQ(v.ticks, (std::vector<long>{0, 1, 3}));
}

TEST(Vcd, ConstantHasNoChanges) {
  const ParsedVcd v = read_vcd(export_vcd({{"zero", StepFn::constant(false)}}));
  EXPECT_TRUE(v.ticks.empty());
  EXPECT_EQ(v.changes.at("zero"), (std::vector<std::pair<long, Bit>>{{-1, false}}));
}

TEST(Vcd, UnitSignal) {
  const ParsedVcd v = read_vcd(export_vcd({{"x", sig("[0,1) u [2,3)")}}));
  EXPECT_EQ(v.scale, "1");
  EXPECT_EQ(v.ticks, (std::vector<long>{0, 1, 2, 3}));
}

TEST(Vcd, IsolatedPointWidenedByOneTick) {
  const ParsedVcd v = read_vcd(export_vcd({{"d", indicator("{1,3}")}}));
  EXPECT_EQ(v.changes.at("d"), (std::vector<std::pair<long, Bit>>{
                                    {-1, false}, {1, true}, {2, false}, {3, true}, {4, false}}));
}

TEST(Vcd, RejectsBadNames) {
  EXPECT_THROW(export_vcd({{"a b", StepFn::constant(false)}}), ParameterError);
  EXPECT_THROW(export_vcd({{"a", StepFn::constant(false)}, {"a", StepFn::constant(true)}}), ParameterError);
}

TEST(Vcd, ReplayedChangesReproduceSignals) {
  gen::Source src(151, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const Signal x = src.signal();
    const Signal y = src.signal();
    const ParsedVcd v = read_vcd(export_vcd({{"x", x}, {"y", y}}));
    const Time scale = Time::parse(v.scale);
    for (const auto& [name, s] : {std::pair{"x", x}, std::pair{"y", y}}) {
      std::vector<std::pair<Time, Bit>> changes;
      for (const auto& [tick, bit] : v.changes.at(name)) {
        if (tick >= 0) changes.emplace_back(Time(tick) / scale, bit);
      }
      EXPECT_EQ(Signal::from_changes(changes), s) << name;
    }
  }
}

TEST(RandomSignal, HonorsConfig) {
  GenConfig cfg;
  cfg.seed = 5;
  EXPECT_EQ(random_signal(cfg), random_signal(cfg));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    cfg.seed = seed;
    const Signal x = random_signal(cfg);
    const std::vector<Time> sw = switch_points(x);
    EXPECT_LE(sw.size(), cfg.max_switches);
    for (const Time& t : sw) {
      EXPECT_TRUE((t * Time(4)).is_integer());
      EXPECT_LE(t, cfg.horizon);
      EXPECT_GE(t, Time(0));
    }
  }
  cfg.max_switches = 0;
  EXPECT_EQ(random_signal(cfg), sig("empty"));
  cfg.granularity = 0;
  EXPECT_THROW(random_signal(cfg), ParameterError);
}

TEST(ReportJson, PassReport) {
  const Report r("4.3all");
  const std::string text = report_to_json(r);
  EXPECT_NE(text.find("\"verdict\": \"pass\""), std::string::npos) << text;
  EXPECT_EQ(report_from_json(text), r);
}

TEST(ReportJson, HeldInputWitnessIsExactString) {
  const Fixture f = counterexample_53({Time(1, 3), Time(7, 4), Time(1), Time(2)});
  const Report r = nidb_verify(f.input, f.output, f.params, NidbForm::A);
  const std::string text = report_to_json(r);
  EXPECT_NE(text.find("\"witness\": \"7/4\""), std::string::npos) << text;
  EXPECT_EQ(report_from_json(text), r);
  EXPECT_EQ(report_summary(r).rfind("4.1a: FAIL\n", 0), 0u);
}

TEST(ReportJson, RoundTripOnRandomReports) {
  gen::Source src(157);
  for (int trial = 0; trial < 300; ++trial) {
    const Signal i = src.signal(6, 8);
    const Signal o = src.signal(6, 8);
    const DelayParams p{Time(1, 2), Time(3, 2), Time(1, 3), Time(5, 3)};
    const Report r = nidb_verify(i, o, p, trial % 2 ? NidbForm::A : NidbForm::B);
    EXPECT_EQ(report_from_json(report_to_json(r)), r);
  }
  EXPECT_THROW(report_from_json("{"), ParseError);
  EXPECT_THROW(report_from_json(R"({"condition":"x","verdict":"fail","violations":[]})"), ParseError);
}

TEST(FuzzReportJson, RoundTrip) {
  FuzzConfig cfg;
  cfg.trials = 100;
  const FuzzReport r = fuzz_claims(cfg);
  EXPECT_EQ(fuzz_report_from_json(fuzz_report_to_json(r)), r);
  EXPECT_FALSE(fuzz_report_summary(r).empty());
}
