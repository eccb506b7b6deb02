// Command-line front end: dump theories, test distinguishability, evaluate
// mixing entropies, run the consistency sweep, emit the gap-vs-n CSV.
//
// Exit codes: 0 success, 1 runtime/verdict error, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ngon/distinguish.hpp"
#include "ngon/mixing.hpp"
#include "ngon/polygon.hpp"
#include "ngon/serialize.hpp"

namespace {

using namespace ngon;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// A negative verdict is not a failure of the tool, but callers scripting
// around `distinguish` want it distinguishable from success.
struct VerdictNo : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  double tolerance = tol::kMembership;  // NGON_TOLERANCE override (testing only)
  std::string format = "table";
  std::string out_path;  // empty: stdout
  int base_index = 0;    // --i for the witness shorthands
};

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v + 0.0);  // normalizes -0
  return buf;
}

std::string fmt_vec(const Vec3& v) {
  return "(" + fmt12(v.x) + ", " + fmt12(v.y) + ", " + fmt12(v.z) + ")";
}

int parse_int(const std::string& text, const char* what) {
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0') {
    throw std::invalid_argument(std::string(what) + ": expected an integer, got '" +
                                text + "'");
  }
  return static_cast<int>(v);
}

double parse_double(const std::string& text, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw std::invalid_argument(std::string(what) + ": expected a number, got '" +
                                text + "'");
  }
  return v;
}

PolygonSpec parse_theory(const std::string& text) {
  if (text == "inf") return PolygonSpec::infinite();
  return PolygonSpec::finite(parse_int(text, "--n"));
}

// "3..32,inf" -> the listed theories, in order.
std::vector<PolygonSpec> parse_range(const std::string& text) {
  std::vector<PolygonSpec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_theory(item));
      continue;
    }
    const int lo = parse_int(item.substr(0, dots), "--n-range");
    const int hi = parse_int(item.substr(dots + 2), "--n-range");
    if (lo > hi) {
      throw std::invalid_argument("--n-range: empty range '" + item + "'");
    }
    for (int n = lo; n <= hi; ++n) out.push_back(PolygonSpec::finite(n));
  }
  if (out.empty()) throw std::invalid_argument("--n-range: no values given");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Inline JSON, @file, or the named shorthands.
StateVector parse_state(const PolygonSpec& spec, const std::string& text,
                        const CliConfig& cfg) {
  if (!text.empty() && text.front() == '{') {
    StateVector s = state_from_json(text, cfg.tolerance);
    if (!(s.theory() == spec)) {
      throw std::invalid_argument("state JSON declares n=" + s.theory().label() +
                                  " but the command runs with n=" + spec.label());
    }
    return s;
  }
  if (!text.empty() && text.front() == '@') {
    return parse_state(spec, read_file(text.substr(1)), cfg);
  }
  if (text == "center") return StateVector(spec, {0.0, 0.0, 1.0}, cfg.tolerance);
  if (text.rfind("pure:", 0) == 0) {
    const std::string which = text.substr(5);
    if (spec.is_infinite()) {
      return pure_state_angle(spec, parse_double(which, "pure:<theta>"));
    }
    return pure_state(spec, parse_int(which, "pure:<i>"));
  }
  if (text.rfind("edge-mid:", 0) == 0) {
    if (spec.is_infinite()) {
      throw std::invalid_argument("edge-mid: the disk has no edges");
    }
    const int k = parse_int(text.substr(9), "edge-mid:<k>");
    const Vec3 mid = 0.5 * (pure_state(spec, k - 1).coords() +
                            pure_state(spec, k).coords());
    return StateVector(spec, mid, cfg.tolerance);
  }
  if (text == "witness:P") return construct_omega_P(spec, cfg.base_index).state;
  if (text == "witness:Q") return construct_omega_Q(spec, cfg.base_index).state;
  if (text == "witness:R") return construct_omega_R(spec, cfg.base_index).state;
  throw std::invalid_argument(
      "unrecognized state '" + text +
      "' (expected inline JSON, @file, center, pure:<i|theta>, "
      "edge-mid:<k>, or witness:P|Q|R)");
}

std::ostream& open_output(const CliConfig& cfg, std::ofstream& file) {
  if (cfg.out_path.empty()) return std::cout;
  file.open(cfg.out_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot write output file '" + cfg.out_path + "'");
  }
  return file;
}

// ---------------------------------------------------------------- theory --

std::vector<std::string> effect_labels(const PolygonSpec& spec) {
  const int n = spec.sides();
  std::vector<std::string> labels{"0", "u"};
  for (int i = 0; i < n; ++i) labels.push_back("e_" + std::to_string(i));
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) labels.push_back("ebar_" + std::to_string(i));
  }
  return labels;
}

int cmd_theory(const std::string& n_text, const CliConfig& cfg) {
  const PolygonSpec spec = parse_theory(n_text);

  if (spec.is_infinite()) {
    if (cfg.format == "json") {
      std::cout << "{\"n\":\"inf\",\"radius\":1,"
                << "\"states\":\"omega(theta) = (cos theta, sin theta, 1)\","
                << "\"effects\":\"0, u = (0, 0, 1), e(theta) = "
                << "(cos(theta)/2, sin(theta)/2, 1/2)\"}" << '\n';
    } else {
      std::cout << "theory n=inf: the unit disk, radius 1\n"
                << "pure states: omega(theta) = (cos theta, sin theta, 1), "
                   "theta in [0, 2pi)\n"
                << "extreme effects: 0, u = (0, 0, 1), and "
                   "e(theta) = (cos(theta)/2, sin(theta)/2, 1/2)\n";
    }
    return kExitOk;
  }

  const int n = spec.sides();
  const auto effects = pure_effects(spec);
  const auto labels = effect_labels(spec);

  if (cfg.format == "json") {
    std::ostringstream out;
    out << "{\"n\":" << n << ",\"radius\":" << fmt12(radius(spec)) << ",\"states\":[";
    for (int i = 0; i < n; ++i) {
      if (i) out << ",";
      out << to_json(pure_state(spec, i));
    }
    out << "],\"effects\":[";
    for (std::size_t k = 0; k < effects.size(); ++k) {
      if (k) out << ",";
      const Vec3& c = effects[k].coords();
      out << "{\"label\":\"" << labels[k] << "\",\"coords\":[" << fmt12(c.x) << ","
          << fmt12(c.y) << "," << fmt12(c.z) << "]}";
    }
    out << "]}";
    std::cout << out.str() << '\n';
    return kExitOk;
  }

  std::cout << "theory n=" << n << ": regular " << n
            << "-gon, circumradius r = " << fmt12(radius(spec)) << "\n";
  std::cout << "pure states (" << n << "):\n";
  for (int i = 0; i < n; ++i) {
    std::cout << "  omega_" << i << " = " << fmt_vec(pure_state(spec, i).coords())
              << "\n";
  }
  std::cout << "extreme effects (" << effects.size() << "):\n";
  for (std::size_t k = 0; k < effects.size(); ++k) {
    std::cout << "  " << labels[k] << " = " << fmt_vec(effects[k].coords()) << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------- distinguish --

int cmd_distinguish(const std::string& n_text, const std::vector<std::string>& state_texts,
                    const CliConfig& cfg) {
  const PolygonSpec spec = parse_theory(n_text);
  std::vector<StateVector> states;
  states.reserve(state_texts.size());
  for (const std::string& t : state_texts) states.push_back(parse_state(spec, t, cfg));

  std::optional<Witness> witness;
  if (states.size() == 1) {
    witness = Witness{Measurement({unit_effect(spec)}), {0}};
  } else if (states.size() == 2) {
    witness = closed_form_pair(spec, states[0], states[1]);
    if (!spec.is_infinite()) {
      const auto lp = lp_distinguishable(spec, states);
      if (lp.has_value() != witness.has_value()) {
        throw std::runtime_error(
            "internal disagreement: closed form says " +
            std::string(witness ? "distinguishable" : "not distinguishable") +
            " but the LP says the opposite");
      }
      if (!witness) witness = lp;
    }
  } else if (spec.is_infinite()) {
    // Only antipodal pure pairs are distinguishable in the disk, so any
    // larger collection fails.
    witness = std::nullopt;
  } else {
    witness = lp_distinguishable(spec, states);
  }

  if (!witness) {
    std::cout << "not distinguishable\n";
    throw VerdictNo("no perfect discrimination exists for the given states");
  }
  std::cout << "distinguishable\n";
  std::cout << "witness measurement (" << witness->measurement.size()
            << " outcomes):\n";
  for (std::size_t j = 0; j < states.size(); ++j) {
    const Vec3& e = witness->measurement.effects()[witness->mapping[j]].coords();
    std::cout << "  state " << j << " <- effect " << fmt_vec(e) << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- entropy --

std::string describe_expr(const EntropyExpr& e) {
  if (!e.unknown) return fmt12(e.constant) + " nats";
  return fmt12(e.coefficient) + " * S(" + *e.unknown + ") + " + fmt12(e.constant);
}

void print_two_routes(const std::string& name, const StateVector& s,
                      const Decomposition& a, const Decomposition& b) {
  std::cout << name << " = " << fmt_vec(s.coords()) << "\n";
  const EntropyExpr ea = entropy_of_decomposition(a);
  const EntropyExpr eb = entropy_of_decomposition(b);
  auto route = [](const Decomposition& d) {
    std::string out = "{";
    for (std::size_t k = 0; k < d.components.size(); ++k) {
      if (k) out += ", ";
      out += d.components[k].symbol;
    }
    return out + "}";
  };
  std::cout << "  route " << route(a) << ": S = " << describe_expr(ea) << "\n";
  std::cout << "  route " << route(b) << ": S = " << describe_expr(eb) << "\n";
  if (ea.unknown && !eb.unknown) {
    std::cout << "  implied S(" << *ea.unknown
              << ") = " << fmt12(solve_unknown(ea, eb.constant)) << " nats\n";
  } else if (!ea.unknown && !eb.unknown) {
    std::cout << "  gap = " << fmt12(std::abs(ea.constant - eb.constant))
              << " nats\n";
  }
}

int cmd_entropy(const std::string& n_text, const std::string& state_text,
                const CliConfig& cfg) {
  const PolygonSpec spec = parse_theory(n_text);

  if (spec.is_infinite()) {
    const StateVector s = parse_state(spec, state_text, cfg);
    std::cout << "S = " << fmt12(entropy_disk(s)) << " nats\n";
    return kExitOk;
  }
  if (spec.sides() == 3) {
    const StateVector s = parse_state(spec, state_text, cfg);
    std::cout << "S = " << fmt12(entropy_trit(s)) << " nats\n";
    return kExitOk;
  }

  // Other finite n: only the witness constructions have something to say and
  // they say two different things; report both routes.
  if (state_text == "witness:P") {
    const OmegaP p = construct_omega_P(spec, cfg.base_index);
    print_two_routes("omega_P", p.state, p.decomp_a, p.decomp_b);
    return kExitOk;
  }
  if (state_text == "witness:Q") {
    const OmegaQ q = construct_omega_Q(spec, cfg.base_index);
    print_two_routes("omega_Q", q.state, q.decomp_a, q.decomp_b);
    return kExitOk;
  }
  if (state_text == "witness:R") {
    const OmegaR r = construct_omega_R(spec, cfg.base_index);
    print_two_routes("omega_R", r.state, r.decomp_a, r.decomp_b);
    return kExitOk;
  }
  throw std::runtime_error(
      "the mixing entropy is not well defined for n=" + spec.label() +
      " (run `verify --n " + spec.label() +
      "`); witness:P|Q|R show the conflicting routes");
}

// ---------------------------------------------------------------- verify --

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::inconsistent: return "inconsistent";
    case Verdict::external: return "external";
  }
  return "?";
}

int cmd_verify(const std::vector<PolygonSpec>& specs, const CliConfig& cfg) {
  std::vector<ConsistencyReport> reports;
  reports.reserve(specs.size());
  for (const PolygonSpec& spec : specs) reports.push_back(verify_theorem(spec));

  std::ofstream file;
  std::ostream& out = open_output(cfg, file);

  if (cfg.format == "csv") {
    out << "n,verdict,gap_nats\n";
    for (const auto& r : reports) {
      out << r.theory.label() << "," << verdict_name(r.verdict) << ","
          << fmt12(r.gap) << "\n";
    }
    return kExitOk;
  }
  if (cfg.format == "json") {
    out << "[";
    for (std::size_t k = 0; k < reports.size(); ++k) {
      const auto& r = reports[k];
      if (k) out << ",";
      out << "{\"n\":"
          << (r.theory.is_infinite() ? std::string("\"inf\"")
                                     : std::to_string(r.theory.sides()))
          << ",\"verdict\":\"" << verdict_name(r.verdict) << "\""
          << ",\"gap_nats\":" << fmt12(r.gap) << ",\"witness_values\":[";
      for (std::size_t j = 0; j < r.witness_values.size(); ++j) {
        if (j) out << ",";
        out << "{\"description\":\"" << r.witness_values[j].first << "\",\"nats\":"
            << fmt12(r.witness_values[j].second) << "}";
      }
      out << "]}";
    }
    out << "]\n";
    return kExitOk;
  }

  for (const auto& r : reports) {
    out << "n=" << r.theory.label() << ": " << verdict_name(r.verdict);
    if (r.verdict == Verdict::inconsistent) {
      out << ", gap = " << fmt12(r.gap) << " nats";
    } else if (r.verdict == Verdict::external) {
      out << " (settled outside this tool)";
    }
    out << "\n";
    for (const auto& [desc, nats] : r.witness_values) {
      out << "    " << desc << " = " << fmt12(nats) << " nats\n";
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------------ fig4 --

int cmd_fig4(int max_n, const CliConfig& cfg) {
  if (max_n < 5) {
    throw std::invalid_argument("fig4: --max-n must be at least 5 (got " +
                                std::to_string(max_n) + ")");
  }
  std::ofstream file;
  std::ostream& out = open_output(cfg, file);

  out << "n,alpha,eq5_nats,eq6_nats,gap_nats,branch\n";
  for (int n = 5; n <= max_n; n += 2) {
    const double alpha = std::sin(std::numbers::pi / (2.0 * n));
    const double eq5 = closed_form_S_A_first(n);
    const double eq6 = closed_form_S_A_second(n);
    out << n << "," << fmt12(alpha) << "," << fmt12(eq5) << "," << fmt12(eq6)
        << "," << fmt12(eq5 - eq6) << "," << (n % 4 == 3 ? "3mod4" : "1mod4")
        << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ngon: regular polygon theories, perfect state discrimination, and the "
      "entropy of mixing"};
  app.require_subcommand(1);

  CliConfig cfg;
  if (const char* env = std::getenv("NGON_TOLERANCE")) {
    try {
      cfg.tolerance = parse_double(env, "NGON_TOLERANCE");
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    if (!(cfg.tolerance > 0.0)) {
      std::cerr << "error: NGON_TOLERANCE must be positive\n";
      return kExitUsage;
    }
  }

  std::string n_text;
  std::string n_range;
  std::vector<std::string> state_texts;
  int max_n = 101;

  CLI::App* c_theory = app.add_subcommand(
      "theory", "List the pure states and extreme effects of a theory");
  c_theory->add_option("--n", n_text, "polygon size (>= 3) or 'inf'")->required();
  c_theory->add_option("--format", cfg.format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* c_dist = app.add_subcommand(
      "distinguish", "Decide perfect distinguishability of the given states");
  c_dist->add_option("--n", n_text, "polygon size (>= 3) or 'inf'")->required();
  c_dist->add_option("--state", state_texts,
                     "state: inline JSON, @file, center, pure:<i|theta>, "
                     "edge-mid:<k>, witness:P|Q|R (repeatable)")
      ->required();
  c_dist->add_option("--i", cfg.base_index, "base index for witness shorthands");

  CLI::App* c_entropy = app.add_subcommand(
      "entropy", "Mixing entropy of a state (n = 3 or inf), or both routes of "
                 "a witness state");
  c_entropy->add_option("--n", n_text, "polygon size (>= 3) or 'inf'")->required();
  c_entropy->add_option("--state", state_texts, "state (same forms as distinguish)")
      ->required();
  c_entropy->add_option("--i", cfg.base_index, "base index for witness shorthands");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "Does a consistent mixing entropy exist? One verdict per n");
  CLI::Option* v_n = c_verify->add_option("--n", n_text, "a single n or 'inf'");
  CLI::Option* v_range =
      c_verify->add_option("--n-range", n_range, "e.g. 3..32,inf");
  c_verify->add_option("--format", cfg.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  c_verify->add_option("--out", cfg.out_path, "output path (default: stdout)");

  CLI::App* c_fig4 = app.add_subcommand(
      "fig4", "CSV of the two odd-n entropy values and their gap, odd n in "
              "[5, max-n]");
  c_fig4->add_option("--max-n", max_n, "largest n to include")->required();
  c_fig4->add_option("--out", cfg.out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_theory->parsed()) return cmd_theory(n_text, cfg);
    if (c_dist->parsed()) return cmd_distinguish(n_text, state_texts, cfg);
    if (c_entropy->parsed()) {
      if (state_texts.size() != 1) {
        throw std::invalid_argument("entropy: exactly one --state expected");
      }
      return cmd_entropy(n_text, state_texts.front(), cfg);
    }
    if (c_verify->parsed()) {
      if (v_n->count() == v_range->count()) {
        throw std::invalid_argument("verify: give exactly one of --n / --n-range");
      }
      const std::vector<PolygonSpec> specs =
          v_n->count() ? std::vector<PolygonSpec>{parse_theory(n_text)}
                       : parse_range(n_range);
      return cmd_verify(specs, cfg);
    }
    if (c_fig4->parsed()) return cmd_fig4(max_n, cfg);
  } catch (const VerdictNo&) {
    return kExitRuntime;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
