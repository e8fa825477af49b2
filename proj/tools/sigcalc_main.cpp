// sigcalc: command line front end for the signal calculus library.
//
// Exit codes: 0 pass or success, 1 verification failure, 2 usage or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "sigcalc/buffer.hpp"
#include "sigcalc/errors.hpp"
#include "sigcalc/interval_set.hpp"
#include "sigcalc/litcmp.hpp"
#include "sigcalc/waveio.hpp"
#include "sigcalc/window.hpp"

using namespace sigcalc;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

Signal read_signal(const std::string& path) {
  try {
    return parse_bsig(read_text(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<Time> parse_times(const std::string& text) {
  std::vector<Time> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Time::parse(item));
  return out;
}

DelayParams parse_bounds(const std::string& text) {
  const std::vector<Time> t = parse_times(text);
  if (t.size() == 1) return DelayParams::uniform(t[0]);
  if (t.size() != 4) throw ParameterError("--params expects 'rmin,rmax,fmin,fmax' or one delay");
  DelayParams p{t[0], t[1], t[2], t[3]};
  p.validate();
  return p;
}

DetParams parse_det(const std::string& text) {
  const std::vector<Time> t = parse_times(text);
  if (t.size() == 1) return {t[0], t[0]};
  if (t.size() != 2) throw ParameterError("--params expects 'dr,df' for the deterministic buffer");
  DetParams p{t[0], t[1]};
  p.validate();
  return p;
}

int emit_report(const Report& r, const std::string& json_path) {
  std::cout << report_summary(r);
  if (!json_path.empty()) write_text(json_path, report_to_json(r) + "\n");
  return r.passed() ? kPass : kFail;
}

std::string ones(const StepFn& f) { return one_set(f).str() + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus of binary signals and inertial delay buffers"};
  app.require_subcommand(1);
  std::function<int()> action;

  // sim
  std::string sim_in, sim_out, sim_dr, sim_df;
  auto* sim = app.add_subcommand("sim", "Simulate the deterministic buffer");
  sim->add_option("--in", sim_in, "Input .bsig ('-' for stdin)")->required();
  sim->add_option("--dr", sim_dr, "Rise delay")->required();
  sim->add_option("--df", sim_df, "Fall delay")->required();
  sim->add_option("--out", sim_out, "Output .bsig (default stdout)");
  sim->callback([&] {
    action = [&] {
      DetParams p{Time::parse(sim_dr), Time::parse(sim_df)};
      p.validate();
      write_text(sim_out, write_bsig(didb_simulate(read_signal(sim_in), p)));
      return kPass;
    };
  });

  // verify
  std::string v_mode, v_form = "a", v_in, v_out, v_params, v_json;
  auto* verify = app.add_subcommand("verify", "Check an (input, output) pair against a condition");
  verify->add_option("--mode", v_mode, "nidb, didb or lit")
      ->required()
      ->check(CLI::IsMember({"nidb", "didb", "lit"}));
  verify->add_option("--form", v_form, "nidb: a|b; didb: a|b|c|d|e|all; lit: a|b|c");
  verify->add_option("--in", v_in, "Input .bsig")->required();
  verify->add_option("--out", v_out, "Output .bsig")->required();
  verify->add_option("--params", v_params, "rmin,rmax,fmin,fmax (didb: dr,df)")->required();
  verify->add_option("--json", v_json, "Also write the report document here");
  verify->callback([&] {
    action = [&] {
      const Signal i = read_signal(v_in);
      const Signal o = read_signal(v_out);
      if (v_mode == "didb") {
        const auto form = parse_didb_form(v_form);
        if (!form) throw UsageError("unknown didb form '" + v_form + "'");
        return emit_report(didb_verify(i, o, parse_det(v_params), *form), v_json);
      }
      if (v_mode == "nidb") {
        const auto form = parse_nidb_form(v_form);
        if (!form) throw UsageError("unknown nidb form '" + v_form + "'");
        return emit_report(nidb_verify(i, o, parse_bounds(v_params), *form), v_json);
      }
      const auto cond = parse_lit_cond(v_form);
      if (!cond) throw UsageError("unknown literature condition '" + v_form + "'");
      return emit_report(lit_verify(i, o, parse_bounds(v_params), *cond), v_json);
    };
  });

  // derive
  std::string d_in, d_kind = "D";
  auto* derive = app.add_subcommand("derive", "Print the support of a derivative");
  derive->add_option("--in", d_in, "Input .bsig")->required();
  derive->add_option("--kind", d_kind, "D, rise or fall")->check(CLI::IsMember({"D", "rise", "fall"}));
  derive->callback([&] {
    action = [&] {
      const Signal x = read_signal(d_in);
      const auto semi = semi_derivatives(x);
      const StepFn& f = d_kind == "rise" ? semi.rise : d_kind == "fall" ? semi.fall : derivative(x);
      std::cout << ones(f);
      return kPass;
    };
  });

  // window
  std::string w_in, w_mode = "all", w_d, w_kind = "co";
  auto* win = app.add_subcommand("window", "Print the 1-set of a sliding-window infimum or supremum");
  win->add_option("--in", w_in, "Input .bsig")->required();
  win->add_option("--mode", w_mode, "all or any")->check(CLI::IsMember({"all", "any"}));
  win->add_option("--d", w_d, "Window width")->required();
  win->add_option("--kind", w_kind, "co, oo or oc")->check(CLI::IsMember({"co", "oo", "oc"}));
  win->callback([&] {
    action = [&] {
      const WindowKind kind = w_kind == "co" ? WindowKind::CO : w_kind == "oo" ? WindowKind::OO : WindowKind::OC;
      const WindowMode mode = w_mode == "all" ? WindowMode::All : WindowMode::Any;
      std::cout << ones(window(mode, read_signal(w_in), Time::parse(w_d), kind));
      return kPass;
    };
  });

  // sample
  std::string s_in, s_out, s_params, s_policy = "eager";
  std::uint64_t s_seed = 0, s_granularity = 16;
  auto* sample = app.add_subcommand("sample", "Draw one admissible output of the non-deterministic buffer");
  sample->add_option("--in", s_in, "Input .bsig")->required();
  sample->add_option("--params", s_params, "rmin,rmax,fmin,fmax")->required();
  sample->add_option("--policy", s_policy, "eager, lazy or random")
      ->check(CLI::IsMember({"eager", "lazy", "random"}));
  sample->add_option("--seed", s_seed, "Seed for the random policy");
  sample->add_option("--granularity", s_granularity, "Denominator of drawn delays");
  sample->add_option("--out", s_out, "Output .bsig (default stdout)");
  sample->callback([&] {
    action = [&] {
      SamplePolicy policy = s_policy == "eager"  ? SamplePolicy::eager()
                            : s_policy == "lazy" ? SamplePolicy::lazy()
                                                 : SamplePolicy::random(s_seed, s_granularity);
      write_text(s_out, write_bsig(nidb_sample(read_signal(s_in), parse_bounds(s_params), policy)));
      return kPass;
    };
  });

  // trace
  std::string t_in, t_out;
  auto* trace = app.add_subcommand("trace", "Print the automaton states visited by a pair");
  trace->add_option("--in", t_in, "Input .bsig")->required();
  trace->add_option("--out", t_out, "Output .bsig")->required();
  trace->callback([&] {
    action = [&] {
      std::cout << "0 (0,0) stable\n";
      for (const auto& tr : automaton_trace(read_signal(t_in), read_signal(t_out))) {
        std::cout << tr.at << " (" << tr.state.input << "," << tr.state.output << ") "
                  << (tr.state.stable() ? "stable" : "unstable") << "\n";
      }
      return kPass;
    };
  });

  // counterexample
  std::string c_id, c_params;
  auto* cex = app.add_subcommand("counterexample", "Reproduce a counterexample fixture");
  cex->add_option("id", c_id, "5.3 or 5.4")->required()->check(CLI::IsMember({"5.3", "5.4"}));
  cex->add_option("--params", c_params, "Delay bounds for 5.3 (rmin,rmax,fmin,fmax)");
  cex->callback([&] {
    action = [&] {
      if (!c_params.empty() && c_id != "5.3") throw UsageError("--params applies to 5.3 only");
      const Fixture f = c_params.empty() ? counterexample(c_id) : counterexample_53(parse_bounds(c_params));
      std::cout << "fixture " << f.name << ": i = " << one_set(f.input).str()
                << ", o = " << one_set(f.output).str() << ", params " << f.params.rise_min << ","
                << f.params.rise_max << "," << f.params.fall_min << "," << f.params.fall_max << "\n";
      const FixtureOutcome outcome = run_fixture(f);
      for (const auto& c : outcome.checks) {
        std::cout << c.expected.condition << ": " << to_string(c.actual.verdict());
        if (const auto w = c.actual.earliest_witness()) std::cout << " at t=" << *w;
        std::cout << " (expected " << to_string(c.expected.verdict);
        if (c.expected.witness_in) std::cout << ", witness in " << c.expected.witness_in->str();
        std::cout << ") " << (c.matches ? "ok" : "MISMATCH") << "\n";
      }
      return outcome.all_match() ? kPass : kFail;
    };
  });

  // fuzz
  FuzzConfig fz;
  std::string fz_json;
  auto* fuzz = app.add_subcommand("fuzz", "Run the seeded claims campaign");
  fuzz->add_option("--trials", fz.trials, "Number of trials");
  fuzz->add_option("--seed", fz.seed, "Campaign seed");
  fuzz->add_option("--threads", fz.threads, "Worker threads (does not change the result)");
  fuzz->add_option("--json", fz_json, "Also write the report document here");
  fuzz->callback([&] {
    action = [&] {
      const FuzzReport r = fuzz_claims(fz);
      std::cout << fuzz_report_summary(r);
      if (!fz_json.empty()) write_text(fz_json, fuzz_report_to_json(r) + "\n");
      return r.passed() ? kPass : kFail;
    };
  });

  // export-vcd
  std::vector<std::string> x_signals;
  std::string x_out;
  auto* vcd = app.add_subcommand("export-vcd", "Write named .bsig files as a value change dump");
  vcd->add_option("signals", x_signals, "name=path pairs")->required();
  vcd->add_option("--out", x_out, "Output .vcd (default stdout)");
  vcd->callback([&] {
    action = [&] {
      std::vector<std::pair<std::string, StepFn>> named;
      for (const auto& item : x_signals) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("expected name=path, got '" + item + "'");
        named.emplace_back(item.substr(0, eq), read_signal(item.substr(eq + 1)).fn());
      }
      write_text(x_out, export_vcd(named));
      return kPass;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "sigcalc: " << e.what() << "\n";
  } catch (const ParameterError& e) {
    std::cerr << "sigcalc: " << e.what() << "\n";
  } catch (const DomainError& e) {
    std::cerr << "sigcalc: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "sigcalc: " << e.what() << "\n";
  }
  return kUsage;
}
