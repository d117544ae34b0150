// stonework command line: thin wrappers over the library, JSON in and out.
//
// Exit status: 0 success / all checks pass, 1 a verification failed,
// 2 usage, parse or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stonework/boolring.hpp"
#include "stonework/contrast.hpp"
#include "stonework/duality.hpp"
#include "stonework/error.hpp"
#include "stonework/finmon.hpp"
#include "stonework/json_io.hpp"
#include "stonework/limits.hpp"
#include "stonework/navector.hpp"
#include "stonework/suite.hpp"
#include "stonework/ultra.hpp"
#include "stonework/unif.hpp"

namespace sw = stonework;
namespace jio = stonework::json_io;
using json = nlohmann::json;

namespace {

  constexpr int kPass  = 0;
  constexpr int kFail  = 1;
  constexpr int kUsage = 2;

  std::string slurp(std::string const& path) {
    if (path.empty() || path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
      throw sw::InvalidArgument("cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  json read_json(std::string const& path) {
    return jio::parse(slurp(path));
  }

  void emit(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  // "discrete:N" or a metric file.
  sw::UltraPseudometric load_metric(std::string const& spec) {
    constexpr std::string_view prefix = "discrete:";
    if (spec.rfind(prefix, 0) == 0) {
      auto rest = spec.substr(prefix.size());
      std::size_t used = 0;
      unsigned long n  = 0;
      try {
        n = std::stoul(rest, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used == 0 || used != rest.size() || n == 0) {
        throw sw::InvalidArgument("bad metric spec '" + spec + "'");
      }
      return sw::UltraPseudometric::discrete(n);
    }
    return jio::metric_from_json(read_json(spec));
  }

  std::vector<std::size_t> parse_points(std::string const& text) {
    std::vector<std::size_t> out;
    std::stringstream        ss(text);
    std::string              item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) {
        continue;
      }
      std::size_t used = 0;
      unsigned long x  = 0;
      try {
        x = std::stoul(item, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != item.size() || used == 0) {
        throw sw::InvalidArgument("bad point '" + item + "' in --vector");
      }
      out.push_back(x);
    }
    return out;
  }

  // Validation failures of a monoid table are verdicts, not usage errors.
  std::optional<json> monoid_violation(json const& j) {
    try {
      jio::monoid_from_json(j);
    } catch (sw::AssociativityViolation const& e) {
      return json{{"violation", "associativity"}, {"triple", e.witness}, {"monoid", j}};
    } catch (sw::IdentityViolation const& e) {
      return json{{"violation", "identity"}, {"element", e.element}, {"monoid", j}};
    }
    return std::nullopt;
  }

  int emit_reports(std::vector<sw::VerificationReport> const& reports, std::string const& fmt) {
    if (fmt == "tsv") {
      std::cout << sw::reports_to_tsv(reports);
    } else {
      std::cout << sw::reports_to_json(reports) << '\n';
    }
    return sw::all_passed(reports) ? kPass : kFail;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Stone duality and non-archimedean monoid toolkit"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  sw::SuiteConfig config;
  std::optional<std::string> out_fmt;
  app.add_option("--bound-points", config.bound_points, "largest |Y| for the duality sweeps");
  app.add_option("--bound-atoms", config.bound_atoms, "largest atom count for the End(B) sweep");
  app.add_option("--bound-k", config.bound_k, "largest truncation of the contrast monoid");
  app.add_option("--seed", config.seed, "seed of the randomized sweeps");
  app.add_option("--out", out_fmt, "report format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--self-test", config.self_test, "add a corrupted monoid as a negative control");

  std::string in_path;
  auto* dualize = app.add_subcommand("dualize", "self-map -> ring endomorphism and its dual");
  dualize->add_option("--in", in_path, "self-map JSON (default stdin)");

  std::size_t verify_points = 3;
  auto* vdual = app.add_subcommand("verify-duality", "exhaustive duality checks");
  vdual->add_option("--points", verify_points, "largest |Y|")->check(CLI::Range(1, 5));

  std::string chain_path;
  auto* metrize = app.add_subcommand("metrize", "ultra-pseudometric of a monotone chain");
  metrize->add_option("--chain", chain_path, "chain JSON")->required();

  std::string metric_spec;
  bool injective = false;
  auto* theta = app.add_subcommand("theta", "all 1-Lipschitz self-maps");
  theta->add_option("--metric", metric_spec, "metric JSON file or discrete:N")->required();
  theta->add_flag("--injective", injective, "keep only injective maps");

  std::string side_name, monoid_path;
  auto* check = app.add_subcommand("check", "validate a monoid, optionally with a metric");
  check->add_option("--monoid", monoid_path, "monoid JSON")->required();
  auto* ne_opt = check->add_option("--nonexpansive", side_name, "left|right")
                     ->check(CLI::IsMember({"left", "right"}));
  auto* check_metric = check->add_option("--metric", metric_spec, "metric JSON or discrete:N");
  ne_opt->needs(check_metric);
  check_metric->needs(ne_opt);

  std::string action_path, family_path;
  auto* saturate = app.add_subcommand("saturate", "least saturated meet-closed family");
  saturate->add_option("--action", action_path, "action JSON")->required();
  saturate->add_option("--family", family_path, "partition family JSON")->required();

  std::string op;
  std::vector<std::string> cover_paths;
  auto* covers = app.add_subcommand("cover-ops", "cover combinators");
  covers->add_option("--op", op, "operation")
      ->required()
      ->check(CLI::IsMember({"wedge", "star", "ord", "refines", "star-refines"}));
  covers->add_option("--cover", cover_paths, "cover JSON (repeat for binary ops)")->required();

  std::string vector_text;
  auto* kant = app.add_subcommand("kantorovich", "Kantorovich ultra-norm of a vector");
  kant->add_option("--metric", metric_spec, "metric JSON file or discrete:N")->required();
  kant->add_option("--vector", vector_text, "comma separated support, e.g. 0,2")->required();

  std::string example_name, report_fmt = "json";
  std::size_t example_k = 4;
  auto* example = app.add_subcommand("example", "worked examples");
  example->add_option("name", example_name, "example name")
      ->required()
      ->check(CLI::IsMember({"contrast"}));
  example->add_option("--k", example_k, "truncation")->check(CLI::Range(1, 20));
  example->add_option("--report", report_fmt, "report format")->check(CLI::IsMember({"json"}));

  bool all = false;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_flag("--all", all, "every module")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    config.limits = sw::Limits::from_env();

    if (*dualize) {
      auto s     = jio::selfmap_from_json(read_json(in_path));
      sw::BoolRing ring(s.size());
      auto mu    = sw::phi(s, ring);
      auto sigma = sw::delta_adjoint(mu.as_group_endo());
      emit({{"map", s}, {"ring_endo", jio::to_json(mu)}, {"dual_group_endo", jio::to_json(sigma)}});
      return kPass;
    }
    if (*vdual) {
      auto reports = sw::run_duality_suite(verify_points, std::min<std::size_t>(verify_points, 3),
                                           config.limits);
      return emit_reports(reports, out_fmt.value_or("tsv"));
    }
    if (*metrize) {
      auto j     = read_json(chain_path);
      auto chain = jio::chain_from_json(j);
      auto d     = sw::d_from_chain(chain, jio::chain_tail_from_json(j));
      emit(jio::to_json(d));
      return kPass;
    }
    if (*theta) {
      auto m = sw::enumerate_theta(load_metric(metric_spec), injective, config.limits);
      if (out_fmt.value_or("json") == "tsv") {
        for (auto const& f : m.elements()) {
          for (std::size_t i = 0; i < f.size(); ++i) {
            std::cout << (i ? "\t" : "") << f[i];
          }
          std::cout << '\n';
        }
      } else {
        auto j     = jio::to_json(m);
        j["count"] = m.size();
        emit(j);
      }
      return kPass;
    }
    if (*check) {
      auto mj = read_json(monoid_path);
      if (auto bad = monoid_violation(mj)) {
        emit(*bad);
        return kFail;
      }
      auto m = jio::monoid_from_json(mj);
      if (side_name.empty()) {
        emit({{"monoid", "valid"}, {"size", m.size()}, {"commutative", m.is_commutative()}});
        return kPass;
      }
      auto side = side_name == "left" ? sw::Side::left : sw::Side::right;
      auto r    = sw::check_nonexpansive(m, load_metric(metric_spec), side);
      auto j    = jio::to_json(r);
      j["side"] = side_name;
      emit(j);
      return r.holds ? kPass : kFail;
    }
    if (*saturate) {
      auto action = jio::action_from_json(read_json(action_path));
      auto gamma  = jio::family_from_json(read_json(family_path));
      auto sat    = sw::saturate(action, gamma, config.limits);
      emit({{"family", jio::to_json(sat.family)},
            {"rounds", sat.rounds},
            {"boundedness", sw::boundedness_report(action, sat.family)}});
      return kPass;
    }
    if (*covers) {
      std::vector<sw::Cover> cs;
      for (auto const& p : cover_paths) {
        cs.push_back(jio::cover_from_json(read_json(p)));
      }
      bool const binary = op == "wedge" || op == "refines" || op == "star-refines";
      if (cs.size() != (binary ? 2U : 1U)) {
        throw sw::InvalidArgument("--op " + op + " takes " + (binary ? "two" : "one")
                                  + " --cover arguments");
      }
      if (op == "wedge") {
        emit(jio::to_json(sw::cover_wedge(cs[0], cs[1])));
      } else if (op == "star") {
        emit(jio::to_json(sw::cover_star(cs[0])));
      } else if (op == "ord") {
        emit({{"ord", sw::cover_order(cs[0])}});
      } else if (op == "refines") {
        emit({{"refines", sw::refines(cs[0], cs[1])}});
      } else {
        emit({{"star_refines", sw::star_refines(cs[0], cs[1])}});
      }
      return kPass;
    }
    if (*kant) {
      sw::KantorovichSpace space(load_metric(metric_spec));
      auto v = sw::FreeVector::from_points(parse_points(vector_text));
      emit(jio::to_json(sw::kantorovich_norm(space, v, config.limits), space));
      return kPass;
    }
    if (*example) {
      sw::ContrastMonoid s(example_k, config.limits);
      auto cert = sw::rna_certificate(s);
      json witnesses = json::array();
      for (std::size_t j = 0; j < example_k; ++j) {
        witnesses.push_back(jio::to_json(sw::obstruction_witness(s, j), s));
      }
      emit({{"example", "contrast"},
            {"k", example_k},
            {"carrier_size", s.carrier_size()},
            {"table_digest", sw::table_digest(s.monoid())},
            {"certificate", jio::to_json(cert)},
            {"witnesses", witnesses}});
      return cert.passed() ? kPass : kFail;
    }
    if (*verify || config.self_test) {
      std::vector<sw::VerificationReport> reports;
      if (*verify) {
        reports = sw::run_suite(config);
      } else {
        reports.push_back(sw::run_self_test());
      }
      return emit_reports(reports, out_fmt.value_or("json"));
    }
    std::cout << app.help();
    return kUsage;
  } catch (sw::ParseError const& e) {
    std::cerr << "parse error at line " << e.line << ", column " << e.column << ": " << e.what()
              << '\n';
    return kUsage;
  } catch (sw::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
