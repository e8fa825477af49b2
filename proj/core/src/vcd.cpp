#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "sigcalc/errors.hpp"
#include "sigcalc/waveio.hpp"

namespace sigcalc {

namespace {

bool identifier_safe(const std::string& name) {
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::string vcd_code(std::size_t index) {
  std::string code;
  do {
    code += static_cast<char>('!' + index % 94);
    index /= 94;
  } while (index > 0);
  return code;
}

}  // namespace

std::string export_vcd(const std::vector<std::pair<std::string, StepFn>>& named) {
  std::set<std::string> seen;
  std::vector<Time> times;
  for (const auto& [name, f] : named) {
    if (!identifier_safe(name)) throw ParameterError("VCD name '" + name + "' is not an identifier");
    if (!seen.insert(name).second) throw ParameterError("duplicate VCD name '" + name + "'");
    for (const auto& bp : f.breakpoints()) {
      if (!(bp.at < Time(0))) times.push_back(bp.at);
    }
  }
  const mpz_class scale = common_denominator(times);
  auto tick = [&](const Time& t) {
    const mpq_class scaled = t.value() * scale;
    return mpz_class(scaled.get_num() / scaled.get_den());
  };

  // tick -> (variable index -> value); later writes at the same tick win.
  std::map<mpz_class, std::map<std::size_t, Bit>> events;
  std::vector<Bit> initial;
  for (std::size_t v = 0; v < named.size(); ++v) {
    const StepFn& f = named[v].second;
    std::optional<Time> first;
    for (const auto& bp : f.breakpoints()) {
      if (bp.at < Time(0)) continue;
      if (!first) first = bp.at;
      const mpz_class k = tick(bp.at);
      if (bp.point != bp.after) events[k + 1][v] = bp.after;
      events[k][v] = bp.point;
    }
    initial.push_back(first ? f.left_limit_at(*first) : f.final_value());
  }

  std::ostringstream os;
  os << "$comment\n  sigcalc export: 1 tick = 1/" << scale.get_str()
     << " time unit; values held only at an isolated instant are widened to one tick\n$end\n";
  os << "$timescale 1 s $end\n";
  os << "$scope module sigcalc $end\n";
  for (std::size_t v = 0; v < named.size(); ++v) {
    os << "$var wire 1 " << vcd_code(v) << " " << named[v].first << " $end\n";
  }
  os << "$upscope $end\n$enddefinitions $end\n";
  os << "$dumpvars\n";
  for (std::size_t v = 0; v < named.size(); ++v) os << (initial[v] ? '1' : '0') << vcd_code(v) << "\n";
  os << "$end\n";

  std::vector<Bit> current = initial;
  for (const auto& [k, changes] : events) {
    std::ostringstream block;
    for (const auto& [v, value] : changes) {
      if (current[v] == value) continue;
      current[v] = value;
      block << (value ? '1' : '0') << vcd_code(v) << "\n";
    }
    if (!block.str().empty()) os << "#" << k.get_str() << "\n" << block.str();
  }
  return os.str();
}

}  // namespace sigcalc
