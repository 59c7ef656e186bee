#include "app.hpp"

#include "commands.hpp"
#include "config.hpp"
#include "rayzeta/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace rayzeta::cli {
namespace {

// Raw flag values; empty means "not given".
struct Flags {
  std::string config;
  std::string preset;
  std::string f_poly;
  std::string a_polys;
  std::string n_range;
  std::string n;
  std::string radicand;
  std::string q;
  std::string k_range;
  std::string label;
  std::string character;
  std::string n_max;
  std::vector<std::string> criteria;
  std::string precision;
  std::string out;
  std::string format;
};

void add_common(CLI::App& sub, Flags& f) {
  sub.add_option("--config", f.config, "JSON config document; flags override its fields");
  sub.add_option("--out", f.out, "write the report to this file instead of stdout");
  sub.add_option("--format", f.format, "json (default) or csv");
}

void add_family(CLI::App& sub, Flags& f) {
  sub.add_option("--preset,--delta-family", f.preset, "rd-n2p2, quartic-16n4 or adversarial");
  sub.add_option("--f-poly", f.f_poly, "radicand polynomial f(n) of an inline family");
  sub.add_option("--a-polys", f.a_polys, "period polynomials a_0(n);a_1(n);... of an inline family");
  sub.add_option("--n-range", f.n_range, "validity range lo:hi of the family");
}

std::int64_t to_int(const std::string& text, const std::string& what) {
  const auto [lo, hi] = parse_range(text);
  if (lo != hi) throw ConfigError(what + " must be a single integer, got '" + text + "'");
  return lo;
}

RunConfig merge(const std::string& command, const Flags& f) {
  RunConfig c = f.config.empty() ? RunConfig{} : load_config_file(f.config);
  if (!c.command.empty() && c.command != command) {
    throw ConfigError("config file is for '" + c.command + "', not '" + command + "'");
  }
  c.command = command;
  if (!f.preset.empty()) {
    c.preset = f.preset;
    c.f_poly.reset();
    c.a_polys.clear();
  }
  if (!f.f_poly.empty()) {
    c.f_poly = f.f_poly;
    c.preset.reset();
  }
  if (!f.a_polys.empty()) {
    c.a_polys = split_polys(f.a_polys);
    c.preset.reset();
  }
  if (!f.n_range.empty()) c.n_range = parse_range(f.n_range);
  if (!f.n.empty()) c.n = parse_range(f.n);
  if (!f.radicand.empty()) c.radicand = f.radicand;
  if (!f.q.empty()) {
    c.q.clear();
    for (const std::string& part : split_polys(f.q)) c.q.push_back(to_int(part, "--q"));
  }
  if (!f.k_range.empty()) c.k_range = parse_range(f.k_range);
  if (!f.label.empty()) c.label = parse_label(f.label);
  if (!f.character.empty()) c.character = f.character;
  if (!f.n_max.empty()) c.n_max = to_int(f.n_max, "--n-max");
  if (!f.criteria.empty()) {
    c.criteria.clear();
    for (const std::string& entry : f.criteria) {
      for (const std::string& id : split_polys(entry)) c.criteria.push_back(id);
    }
  }
  if (!f.precision.empty()) c.precision = static_cast<int>(to_int(f.precision, "--precision"));
  if (c.precision < 1 || c.precision > 30) throw ConfigError("precision must lie in [1, 30]");
  if (!f.out.empty()) c.out = f.out;
  if (!f.format.empty()) c.format = parse_format(f.format);
  return c;
}

}  // namespace

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ray class partial zeta values at s = 0 of real quadratic fields", "rayzeta"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* zeta = app.add_subcommand("zeta", "partial zeta values of one field or of family members");
  add_common(*zeta, f);
  add_family(*zeta, f);
  zeta->add_option("--n", f.n, "family parameter n or range lo:hi");
  zeta->add_option("--radicand", f.radicand, "squarefree D: use the ring of integers of Q(sqrt(D))");
  zeta->add_option("--q", f.q, "modulus q >= 2");
  zeta->add_option("--label", f.label, "only the label C,D");
  zeta->add_option("--precision", f.precision, "digits of the approximate values");

  CLI::App* family = app.add_subcommand("family", "quasi-polynomial closed forms on a family");
  add_common(*family, f);
  add_family(*family, f);
  family->add_option("--q", f.q, "modulus q >= 2");
  family->add_option("--k-range", f.k_range, "sampled k in n = qk + r (default 0:6)");
  family->add_option("--label", f.label, "only the label C,D");

  CLI::App* lfunc = app.add_subcommand("lfunc", "Hecke L-values L(0, chi) as formal character sums");
  add_common(*lfunc, f);
  add_family(*lfunc, f);
  lfunc->add_option("--n", f.n, "single family member n or range lo:hi");
  lfunc->add_option("--radicand", f.radicand, "squarefree D: use the ring of integers of Q(sqrt(D))");
  lfunc->add_option("--q", f.q, "modulus q >= 2");
  lfunc->add_option("--char", f.character, "trivial, order:g=e,... or modulus:order:g=e,...");
  lfunc->add_option("--k-range", f.k_range, "sampled k in n = qk + r (default 0:6)");
  lfunc->add_option("--precision", f.precision, "digits of the approximate complex rendering");

  CLI::App* verify = app.add_subcommand("verify", "run the acceptance criteria A1..A9");
  add_common(*verify, f);
  verify->add_option("--q", f.q, "extra moduli, comma separated, added to 2,3,5");
  verify->add_option("--n-max", f.n_max, "largest family parameter n");
  verify->add_option("--k-range", f.k_range, "sampled k (default 0:6)");
  verify->add_option("--criterion", f.criteria, "run only these criteria (A1..A9)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::map<CLI::App*, std::pair<std::string, std::function<Report(const RunConfig&)>>> commands{
      {zeta, {"zeta", cmd_zeta}},
      {family, {"family", cmd_family}},
      {lfunc, {"lfunc", cmd_lfunc}},
      {verify, {"verify", cmd_verify}},
  };
  try {
    const auto& [name, run] = commands.at(app.get_subcommands().front());
    const RunConfig config = merge(name, f);
    const Report report = run(config);
    for (const std::string& w : report.warnings) err << "warning: " << w << "\n";
    emit(report, config.format, config.out, out);
    return report.exit_code;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return 3;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rayzeta::cli
