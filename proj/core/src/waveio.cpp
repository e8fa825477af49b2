#include "sigcalc/waveio.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rng.hpp"
#include "sigcalc/errors.hpp"

namespace sigcalc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

BsigDocument parse_bsig_document(std::string_view text) {
  BsigDocument doc;
  std::vector<std::pair<Time, Bit>> changes;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      const auto comment = trim(line.substr(hash + 1));
      const bool header_zone = changes.empty() && trim(line.substr(0, hash)).empty();
      if (header_zone && comment.starts_with("bsig ")) {
        try {
          doc.version = std::stoi(std::string(trim(comment.substr(5))));
        } catch (const std::exception&) {
          throw ParseError(line_no, "bad format version");
        }
        if (doc.version != 1) throw ParseError(line_no, "unsupported format version");
      } else if (header_zone && comment.starts_with("name:")) {
        doc.name = std::string(trim(comment.substr(5)));
      }
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) throw ParseError(line_no, "expected '<time> <bit>'");
    const auto time_text = line.substr(0, space);
    const auto bit_text = trim(line.substr(space));
    Time t;
    try {
      t = Time::parse(time_text);
    } catch (const ParameterError& e) {
      throw ParseError(line_no, e.what());
    }
    if (bit_text != "0" && bit_text != "1") {
      throw ParseError(line_no, "bit must be 0 or 1, got '" + std::string(bit_text) + "'");
    }
    if (t < Time(0)) throw ParseError(line_no, "time " + t.str() + " is negative");
    if (!changes.empty() && !(changes.back().first < t)) {
      throw ParseError(line_no, "time " + t.str() + " does not increase");
    }
    changes.emplace_back(std::move(t), bit_text == "1");
  }
  doc.signal = Signal::from_changes(changes);
  return doc;
}

Signal parse_bsig(std::string_view text) { return parse_bsig_document(text).signal; }

std::string write_bsig(const BsigDocument& doc) {
  std::string out = "# bsig " + std::to_string(doc.version) + "\n";
  if (doc.name) out += "# name: " + *doc.name + "\n";
  for (const auto& bp : doc.signal.fn().breakpoints()) {
    out += bp.at.str();
    out += bp.point ? " 1\n" : " 0\n";
  }
  return out;
}

std::string write_bsig(const Signal& x, std::optional<std::string> name) {
  return write_bsig(BsigDocument{1, std::move(name), x});
}

void GenConfig::validate() const {
  if (granularity == 0) throw ParameterError("granularity must be positive");
  if (horizon < Time(0)) throw ParameterError("horizon must be non-negative");
}

Signal random_signal(const GenConfig& cfg) {
  cfg.validate();
  const mpq_class span = cfg.horizon.value() * mpz_class(std::to_string(cfg.granularity));
  const mpz_class top_z = span.get_num() / span.get_den();
  if (!top_z.fits_ulong_p()) throw ParameterError("horizon too long for the granularity");
  const std::uint64_t top = top_z.get_ui();  // grid indices 0..top

  detail::Rng rng(cfg.seed);
  std::uint64_t count = rng.between(0, cfg.max_switches);
  if (top != UINT64_MAX) count = std::min(count, top + 1);

  // Floyd's sampling of `count` distinct indices from [0, top].
  std::set<std::uint64_t> picked;
  for (std::uint64_t j = top + 1 - count; j <= top && count > 0; ++j) {
    const std::uint64_t r = rng.between(0, j);
    if (!picked.insert(r).second) picked.insert(j);
    if (j == top) break;
  }

  std::vector<std::pair<Time, Bit>> changes;
  Bit value = false;
  const mpz_class den(std::to_string(cfg.granularity));
  for (std::uint64_t k : picked) {
    value = !value;
    changes.emplace_back(Time(mpq_class(mpz_class(std::to_string(k)), den)), value);
  }
  return Signal::from_changes(changes);
}

// --- reports ------------------------------------------------------------------

namespace {

using nlohmann::json;

json violation_json(const Violation& v) {
  return {{"witness", v.witness.str()},
          {"lhs", v.lhs ? 1 : 0},
          {"rhs", v.rhs ? 1 : 0},
          {"clause", v.clause}};
}

json report_json(const Report& r) {
  json violations = json::array();
  for (const auto& v : r.violations()) violations.push_back(violation_json(v));
  return {{"condition", r.condition()},
          {"verdict", std::string(to_string(r.verdict()))},
          {"violations", std::move(violations)}};
}

Bit bit_field(const json& j, const char* key) {
  const int v = j.at(key).get<int>();
  if (v != 0 && v != 1) throw ParseError(1, std::string(key) + " must be 0 or 1");
  return v == 1;
}

Report report_from(const json& j) {
  Report r(j.at("condition").get<std::string>());
  for (const auto& v : j.at("violations")) {
    r.add({Time::parse(v.at("witness").get<std::string>()), bit_field(v, "lhs"),
           bit_field(v, "rhs"), v.at("clause").get<std::string>()});
  }
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != to_string(r.verdict())) {
    throw ParseError(1, "verdict '" + verdict + "' inconsistent with the violation list");
  }
  return r;
}

json signal_json(const Signal& x) {
  json changes = json::array();
  for (const auto& bp : x.fn().breakpoints()) changes.push_back({bp.at.str(), bp.point ? 1 : 0});
  return changes;
}

Signal signal_from(const json& j) {
  std::vector<std::pair<Time, Bit>> changes;
  for (const auto& c : j) changes.emplace_back(Time::parse(c.at(0).get<std::string>()), c.at(1).get<int>() == 1);
  return Signal::from_changes(changes);
}

json params_json(const DelayParams& p) {
  return {{"rise_min", p.rise_min.str()},
          {"rise_max", p.rise_max.str()},
          {"fall_min", p.fall_min.str()},
          {"fall_max", p.fall_max.str()}};
}

DelayParams params_from(const json& j) {
  return {Time::parse(j.at("rise_min").get<std::string>()),
          Time::parse(j.at("rise_max").get<std::string>()),
          Time::parse(j.at("fall_min").get<std::string>()),
          Time::parse(j.at("fall_max").get<std::string>())};
}

json refutation_json(const Refutation& r) {
  return {{"claim", r.claim},         {"trial", r.trial},
          {"input", signal_json(r.input)}, {"output", signal_json(r.output)},
          {"params", params_json(r.params)}, {"detail", r.detail}};
}

Refutation refutation_from(const json& j) {
  return {j.at("claim").get<std::string>(), j.at("trial").get<std::uint64_t>(),
          signal_from(j.at("input")),      signal_from(j.at("output")),
          params_from(j.at("params")),     j.at("detail").get<std::string>()};
}

template <typename F>
auto parse_json(std::string_view text, F&& build) {
  try {
    return build(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(1, std::string("malformed report document: ") + e.what());
  } catch (const ParameterError& e) {
    throw ParseError(1, std::string("malformed report document: ") + e.what());
  }
}

}  // namespace

std::string report_to_json(const Report& r) { return report_json(r).dump(2) + "\n"; }

Report report_from_json(std::string_view text) {
  return parse_json(text, [](const json& j) { return report_from(j); });
}

std::string report_summary(const Report& r) {
  std::ostringstream os;
  os << r.condition() << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& v : r.violations()) {
    os << "  t=" << v.witness << " lhs=" << v.lhs << " rhs=" << v.rhs << "  " << v.clause << "\n";
  }
  return os.str();
}

std::string fuzz_report_to_json(const FuzzReport& r) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"claim", c.claim}, {"checked", c.checked}, {"confirmed", c.confirmed}});
  }
  json refutations = json::array();
  for (const auto& x : r.refutations) refutations.push_back(refutation_json(x));
  json doc = {{"verdict", r.passed() ? "pass" : "fail"},
              {"trials", r.trials},
              {"seed", r.seed},
              {"claims", std::move(claims)},
              {"refutations", std::move(refutations)},
              {"strict_count", r.strict_count},
              {"strict_example", r.strict_example ? refutation_json(*r.strict_example) : json()}};
  return doc.dump(2) + "\n";
}

FuzzReport fuzz_report_from_json(std::string_view text) {
  return parse_json(text, [](const json& j) {
    FuzzReport r;
    r.trials = j.at("trials").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& c : j.at("claims")) {
      r.claims.push_back({c.at("claim").get<std::string>(), c.at("checked").get<std::uint64_t>(),
                          c.at("confirmed").get<std::uint64_t>()});
    }
    for (const auto& x : j.at("refutations")) r.refutations.push_back(refutation_from(x));
    r.strict_count = j.at("strict_count").get<std::uint64_t>();
    if (!j.at("strict_example").is_null()) r.strict_example = refutation_from(j.at("strict_example"));
    if (j.at("verdict").get<std::string>() != (r.passed() ? "pass" : "fail")) {
      throw ParseError(1, "verdict inconsistent with the refutation list");
    }
    return r;
  });
}

std::string fuzz_report_summary(const FuzzReport& r) {
  std::ostringstream os;
  os << "fuzz: " << (r.passed() ? "PASS" : "FAIL") << " (" << r.trials << " trials, seed " << r.seed
     << ")\n";
  for (const auto& c : r.claims) {
    os << "  " << c.claim << ": " << c.confirmed << "/" << c.checked << " confirmed\n";
  }
  os << "  strictness (5.1b holds, 4.1a fails): " << r.strict_count << " trials\n";
  for (const auto& x : r.refutations) {
    os << "  REFUTED " << x.claim << " at trial " << x.trial << ": " << x.detail << "\n";
  }
  return os.str();
}

}  // namespace sigcalc
