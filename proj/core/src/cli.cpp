#include "nikodym/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "json_util.hpp"
#include "nikodym/errors.hpp"
#include "nikodym/report.hpp"
#include "nikodym/serialize.hpp"
#include "nikodym/svg.hpp"

namespace nikodym {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_document(const std::string& doc, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << doc;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << doc;
  if (!file.flush()) throw UsageError("failed writing '" + path + "'");
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  if (format.empty()) return;
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format '" + format + "' for this command");
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw InvalidParameter("empty epsilon list");
  return out;
}

}  // namespace

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  try {
    if (const auto dots = text.find(".."); dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      for (int n = lo % 2 == 0 ? lo + 1 : lo; n <= hi; n += 2) out.push_back(n);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        out.push_back(std::stoi(item, &used));
        if (used != item.size()) throw InvalidParameter("malformed n list '" + text + "'");
      }
    }
  } catch (const std::logic_error&) {
    throw InvalidParameter("malformed n list '" + text + "'");
  }
  if (out.empty()) throw InvalidParameter("empty n list '" + text + "'");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification kit for slanted parallelogram families", "nikodym"};
  app.require_subcommand(1);

  int n = 0;
  int cap = kDefaultNCap;
  std::string epsilon_text, grid_text, out_path, format, n_list_text;
  std::uint64_t mc_samples = 0, seed = 0;

  auto* generate = app.add_subcommand("generate", "Write the family document for odd n");
  generate->add_option("--n", n, "Odd n >= 3")->required();
  generate->add_option("--out", out_path, "Output file (default: stdout)");
  generate->add_option("--format", format, "json");

  auto* verify_cmd = app.add_subcommand("verify", "Check properties (i)-(iii) for one n and epsilon");
  verify_cmd->add_option("--n", n, "Odd n >= 3")->required();
  verify_cmd->add_option("--epsilon", epsilon_text, "Tolerance, \"p/q\" or decimal")->required();
  verify_cmd->add_option("--grid-step", grid_text, "Extent grid spacing (default 1/(4n^2))");
  verify_cmd->add_option("--mc-samples", mc_samples, "Monte Carlo samples for the union cross-check (0 = off)");
  verify_cmd->add_option("--seed", seed, "Monte Carlo seed");
  verify_cmd->add_option("--cap", cap, "Largest admissible n");
  verify_cmd->add_option("--out", out_path, "Output file (default: stdout)");
  verify_cmd->add_option("--format", format, "json");

  auto* min_n = app.add_subcommand("min-n", "Smallest odd n passing every check for epsilon");
  min_n->add_option("--epsilon", epsilon_text, "Tolerance, \"p/q\" or decimal")->required();
  min_n->add_option("--cap", cap, "Largest n to try");
  min_n->add_option("--grid-step", grid_text, "Extent grid spacing for the reported family");
  min_n->add_option("--mc-samples", mc_samples, "Monte Carlo samples for the reported family");
  min_n->add_option("--seed", seed, "Monte Carlo seed");
  min_n->add_option("--out", out_path, "Output file (default: stdout)");
  min_n->add_option("--format", format, "json");

  auto* render = app.add_subcommand("render", "Draw the family as SVG");
  render->add_option("--n", n, "Odd n >= 3")->required();
  render->add_option("--out", out_path, "Output file (default: stdout)");
  render->add_option("--format", format, "svg");

  auto* sweep_cmd = app.add_subcommand("sweep", "Sup deviations over a grid of n and epsilon, as CSV");
  sweep_cmd->add_option("--n", n_list_text, "Odd n values: \"3..41\" or \"3,5,7\"")->required();
  sweep_cmd->add_option("--epsilon", epsilon_text, "Comma-separated tolerances")->required();
  sweep_cmd->add_option("--cap", cap, "Largest admissible n");
  sweep_cmd->add_option("--out", out_path, "Output file (default: stdout)");
  sweep_cmd->add_option("--format", format, "csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (generate->parsed()) {
      require_format(format, {"json"});
      write_document(family_json(build_family(n, cap)) + "\n", out_path, out);
      return kExitPass;
    }
    if (render->parsed()) {
      require_format(format, {"svg"});
      const Family f = build_family(n, cap);
      write_document(render_svg(f), out_path, out);
      return kExitPass;
    }
    if (verify_cmd->parsed()) {
      require_format(format, {"json"});
      VerifyOptions opt;
      opt.n = n;
      opt.epsilon = Rational::parse(epsilon_text);
      if (!grid_text.empty()) opt.grid_step = Rational::parse(grid_text);
      opt.mc_samples = mc_samples;
      opt.seed = seed;
      opt.n_cap = cap;
      const VerificationReport r = verify(opt);
      write_document(report_json(r) + "\n", out_path, out);
      return r.pass ? kExitPass : kExitFail;
    }
    if (min_n->parsed()) {
      require_format(format, {"json"});
      const Rational eps = Rational::parse(epsilon_text);
      const auto found = min_odd_n(eps, cap);
      detail::Json j;
      j["epsilon"] = eps.str();
      j["cap"] = cap;
      j["found"] = found.has_value();
      if (found) {
        VerifyOptions opt;
        opt.n = found->n;
        opt.epsilon = eps;
        if (!grid_text.empty()) opt.grid_step = Rational::parse(grid_text);
        opt.mc_samples = mc_samples;
        opt.seed = seed;
        opt.n_cap = cap;
        j["n"] = found->n;
        j["report"] = detail::Json::parse(report_json(verify(opt)));
      } else {
        j["n"] = nullptr;
        j["report"] = nullptr;
      }
      write_document(j.dump(2) + "\n", out_path, out);
      if (!found) err << "no odd n <= " << cap << " passes for epsilon " << eps.str() << "\n";
      return found ? kExitPass : kExitFail;
    }
    if (sweep_cmd->parsed()) {
      require_format(format, {"csv"});
      const auto rows = sweep(parse_rational_list(epsilon_text), parse_n_list(n_list_text), cap);
      write_document(sweep_csv(rows), out_path, out);
      return kExitPass;
    }
  } catch (const ConsistencyError& e) {
    err << "internal consistency violation: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nikodym
