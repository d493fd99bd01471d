// Command-line front end: single computations, parameter sweeps over a
// JSON config, and the cross-path verification grid.
//
// Exit codes: 0 success, 1 usage/config error, 2 rejected input,
// 3 internal mismatch (the two evaluation routes disagree).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parahiggs/assembly.hpp"
#include "parahiggs/errors.hpp"
#include "parahiggs/strata111.hpp"
#include "parahiggs/verify.hpp"
#include "report_io.hpp"

namespace {

using namespace parahiggs;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

Method parse_method(const std::string& name) {
  if (name == "closed") return Method::closed;
  if (name == "direct") return Method::direct;
  if (name == "both") return Method::both;
  throw CLI::ValidationError("--method", "expected closed, direct or both");
}

struct ComputeArgs {
  long long genus = 0;
  long long a = 0;
  long long b = 0;
  std::vector<std::string> alpha1, alpha2, eta;
  long long punctures = 1;
  std::string method = "both";
  std::string jacobian = "off";
  std::string sum_all_d0 = "off";
  std::string format = "text";
};

ModuliInput build_input(const ComputeArgs& args) {
  if (args.punctures < 1) throw BadInput("--punctures must be >= 1");
  const auto s = static_cast<std::size_t>(args.punctures);
  if (args.alpha1.size() != s || args.alpha2.size() != s || args.eta.size() != s)
    throw BadInput("need exactly one --alpha1/--alpha2/--eta per puncture (" +
                   std::to_string(s) + " expected)");
  ModuliInput input;
  input.genus = args.genus;
  input.a = args.a;
  input.b = args.b;
  for (std::size_t i = 0; i < s; ++i)
    input.points.push_back({Rational::parse(args.alpha1[i]), Rational::parse(args.alpha2[i]),
                            Rational::parse(args.eta[i])});
  return input;
}

int run_compute(const ComputeArgs& args) {
  const ModuliInput input = build_input(args);
  DirectFlags flags{args.jacobian == "on", args.sum_all_d0 == "on"};

  if (args.punctures > 1) {
    // several punctures: only the direct (1,1,1) sum exists; no assembly
    if (args.method != "direct")
      throw CLI::ValidationError("--method",
                                 "only 'direct' is available with more than one puncture");
    validate(input);
    const LaurentPoly n = n111_direct(input, flags);
    if (args.format == "json") {
      json j{{"input", io::input_to_json(input)},
             {"method", "direct"},
             {"n111_contribution", io::poly_to_json(n)},
             {"tau", toledo(input).to_string()},
             {"delta", input.delta()}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "N(1,1,1) contribution = " << n.to_string() << "\n";
    }
    return kExitOk;
  }

  const ModuliReport report = poincare_U(input, parse_method(args.method), flags);
  if (args.format == "json") {
    std::cout << io::report_to_json(report).dump(2) << "\n";
  } else if (args.format == "csv") {
    std::cout << io::csv_header() << "\n" << io::report_to_csv_row(report) << "\n";
  } else {
    std::cout << io::report_to_text(report);
  }
  return kExitOk;
}

// ------------------------------------------------------------------ sweep

struct SweepConfig {
  std::vector<long long> genus;
  std::vector<std::pair<long long, long long>> degrees;
  std::vector<WeightPoint> points;
  Method method = Method::both;
  std::string format = "csv";
};

SweepConfig parse_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed JSON in '" + path + "': " + e.what());
  }

  SweepConfig cfg;
  try {
    for (const auto& g : j.at("genus")) cfg.genus.push_back(g.get<long long>());
    for (const auto& d : j.at("degrees"))
      cfg.degrees.emplace_back(d.at(0).get<long long>(), d.at(1).get<long long>());
    for (const auto& p : j.at("points"))
      cfg.points.push_back({Rational::parse(p.at("alpha1").get<std::string>()),
                            Rational::parse(p.at("alpha2").get<std::string>()),
                            Rational::parse(p.at("eta").get<std::string>())});
    if (j.contains("method")) cfg.method = parse_method(j["method"].get<std::string>());
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  } catch (const json::exception& e) {
    throw std::runtime_error("bad sweep config: " + std::string(e.what()));
  }
  return cfg;
}

int run_sweep(const std::string& path, const std::string& format_override) {
  SweepConfig cfg;
  try {
    cfg = parse_sweep_config(path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  const std::string format = format_override.empty() ? cfg.format : format_override;

  json rows = json::array();
  if (format == "csv") std::cout << io::csv_header() << "\n";

  // rows in config order: genus, then degrees, then points
  for (long long g : cfg.genus) {
    for (const auto& [a, b] : cfg.degrees) {
      for (const auto& p : cfg.points) {
        ModuliInput input;
        input.genus = g;
        input.a = a;
        input.b = b;
        input.points = {p};
        try {
          const ModuliReport report = poincare_U(input, cfg.method);
          if (format == "csv")
            std::cout << io::report_to_csv_row(report) << "\n";
          else
            rows.push_back(io::report_to_json(report));
        } catch (const Error& e) {
          // annotated, not fatal: the rest of the sweep still runs
          if (format == "csv")
            std::cout << io::error_to_csv_row(input, e.what()) << "\n";
          else
            rows.push_back(json{{"input", io::input_to_json(input)}, {"error", e.what()}});
        }
      }
    }
  }
  if (format != "csv") std::cout << json{{"rows", rows}}.dump(2) << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- verify

int run_verify_cmd(const VerifyOptions& options) {
  const VerifyReport report = run_verify(options);
  for (const auto& f : report.failures) {
    std::cout << "FAIL " << f.check << " at " << f.input_desc << "\n";
    if (!f.lhs.empty() || !f.rhs.empty())
      std::cout << "  lhs: " << f.lhs << "\n  rhs: " << f.rhs << "\n";
  }
  std::cout << "verified " << report.inputs_checked << " inputs ("
            << report.inputs_skipped << " skipped with tau >= 0, "
            << report.property_checks << " property checks): "
            << (report.ok() ? "OK" : "FAIL") << "\n";
  return report.ok() ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of moduli of stable parabolic U(2,1)-Higgs bundles"};
  app.require_subcommand(1);

  ComputeArgs cargs;
  auto* compute = app.add_subcommand("compute", "Poincare polynomial for one input");
  compute->add_option("--genus", cargs.genus, "genus of the base curve")->required();
  compute->add_option("--deg-a", cargs.a, "degree of V")->required();
  compute->add_option("--deg-b", cargs.b, "degree of W")->required();
  compute->add_option("--alpha1", cargs.alpha1, "weight alpha1 (rational p/q), once per puncture")
      ->required();
  compute->add_option("--alpha2", cargs.alpha2, "weight alpha2 (rational p/q), once per puncture")
      ->required();
  compute->add_option("--eta", cargs.eta, "weight eta (rational p/q), once per puncture")
      ->required();
  compute->add_option("--punctures", cargs.punctures, "number of marked points (default 1)");
  compute->add_option("--method", cargs.method, "closed | direct | both (default both)")
      ->check(CLI::IsMember({"closed", "direct", "both"}));
  compute->add_option("--jacobian", cargs.jacobian, "direct path: include the (1+t)^2g factor")
      ->check(CLI::IsMember({"on", "off"}));
  compute->add_option("--sum-all-d0", cargs.sum_all_d0, "direct path: sum over all d0")
      ->check(CLI::IsMember({"on", "off"}));
  compute->add_option("--format", cargs.format, "json | csv | text (default text)")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  std::string sweep_path, sweep_format;
  auto* sweep = app.add_subcommand("sweep", "batch computation from a JSON config");
  sweep->add_option("config", sweep_path, "sweep config file")->required();
  sweep->add_option("--format", sweep_format, "override the config's output format")
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyOptions vopts;
  std::vector<std::string> verify_cases, verify_pairs;
  auto* verify = app.add_subcommand("verify", "cross-path reconciliation grid");
  verify->add_option("--genus", vopts.genus, "genus values (default 1 2 3)");
  verify->add_option("--delta", vopts.deltas, "Delta values (default -3 0 3)");
  verify->add_option("--case", verify_cases, "restrict to chamber labels (e.g. S3b)");
  verify->add_option("--pair", verify_pairs, "restrict to degree pairs a,b (e.g. 0,0)");
  verify
      ->add_flag("--corrupt-closed-table", vopts.corrupt_closed_table,
                 "test fixture: perturb one closed case to exercise the harness")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return run_compute(cargs);
    if (sweep->parsed()) return run_sweep(sweep_path, sweep_format);
    // verify
    for (const auto& name : verify_cases) {
      auto c = case_from_string(name);
      if (!c) {
        std::cerr << "unknown case label '" << name << "'\n";
        return kExitUsage;
      }
      vopts.cases.push_back(*c);
    }
    if (!verify_pairs.empty()) {
      std::vector<std::pair<long long, long long>> pairs;
      for (const auto& text : verify_pairs) {
        const auto comma = text.find(',');
        if (comma == std::string::npos) {
          std::cerr << "bad --pair '" << text << "', expected a,b\n";
          return kExitUsage;
        }
        pairs.emplace_back(std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1)));
      }
      vopts.degree_pairs = pairs;
    }
    return run_verify_cmd(vopts);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  } catch (const InternalCheckError& e) {
    std::cerr << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
