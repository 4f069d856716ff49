#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "chiralkit/dsl.hpp"
#include "chiralkit/gamma.hpp"
#include "chiralkit/kinematic.hpp"
#include "chiralkit/qft.hpp"
#include "chiralkit/report_json.hpp"
#include "chiralkit/symmetry.hpp"
#include "chiralkit/verdict.hpp"

namespace {

using chiralkit::ChiralityClass;
using chiralkit::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // internal error or failed verification
constexpr int kExitInput = 2;    // flag, file, or parse problem
constexpr int kExitUnsupported = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

char sign_char(int sign) { return sign >= 0 ? '+' : '-'; }

std::string sign_text(int sign) {
  if (sign == 0) return "mixed";
  return std::string(1, sign_char(sign));
}

void print_span_error(const chiralkit::DslError& e) {
  std::cerr << "parse error at bytes [" << e.span().begin << ", " << e.span().end
            << "): " << e.what() << "\n";
}

std::string classification_line(const chiralkit::InfluenceClassification& c) {
  std::ostringstream out;
  out << to_string(c.cls) << " (P:" << sign_text(c.parity_sign) << ", T:" << sign_text(c.time_sign)
      << ", R:" << (c.rotation_invariant ? "invariant" : "not-invariant") << ")";
  return out.str();
}

struct ClassifySource {
  std::string builtin;
  std::string kinematic;
  std::string file;

  int count() const {
    return static_cast<int>(!builtin.empty()) + static_cast<int>(!kinematic.empty()) +
           static_cast<int>(!file.empty());
  }
};

Json source_echo(const ClassifySource& source) {
  Json echo = Json::object();
  if (!source.builtin.empty()) echo["builtin"] = source.builtin;
  if (!source.kinematic.empty()) echo["kinematic"] = source.kinematic;
  if (!source.file.empty()) echo["file"] = source.file;
  return echo;
}

int run_classify(const ClassifySource& source, const std::string& output) {
  Json config = source_echo(source);
  config["output"] = output;

  if (!source.kinematic.empty()) {
    const auto expr = chiralkit::parse_kinematic(source.kinematic);
    const auto sig = chiralkit::compose_signature(expr);
    const ChiralityClass cls = chiralkit::classify_signature(sig);
    if (output == "json") {
      Json result = {{"class", std::string(to_string(cls))},
                     {"parity_sign", sig.parity_sign},
                     {"time_sign", sig.time_sign},
                     {"rotational_scalar", sig.rotational_scalar}};
      std::cout << chiralkit::pretty(chiralkit::envelope("classify", config, result));
    } else {
      std::cout << to_string(cls) << " (P:" << sign_text(sig.parity_sign)
                << ", T:" << sign_text(sig.time_sign)
                << ", R:" << (sig.rotational_scalar ? "invariant" : "not-invariant") << ")\n";
    }
    return kExitOk;
  }

  chiralkit::HamiltonianIR ir;
  if (!source.builtin.empty()) {
    const chiralkit::HamiltonianIR* found = chiralkit::find_builtin(source.builtin);
    if (found == nullptr) {
      std::cerr << "unknown builtin '" << source.builtin << "'; available:";
      for (const auto& entry : chiralkit::builtin_library()) std::cerr << " " << entry.name;
      std::cerr << "\n";
      return kExitInput;
    }
    ir = *found;
  } else {
    ir = chiralkit::parse_hamiltonian(read_file(source.file));
  }

  const auto classification = chiralkit::classify_influence(ir);
  if (output == "json") {
    std::cout << chiralkit::pretty(
        chiralkit::envelope("classify", config, to_json(classification)));
    return kExitOk;
  }
  std::cout << classification_line(classification) << "\n";
  if (classification.cls == ChiralityClass::Undetermined) {
    for (std::size_t k = 0; k < classification.per_term.size(); ++k) {
      std::cout << "  term " << k << ": P:" << sign_char(classification.per_term[k].parity_sign)
                << " T:" << sign_char(classification.per_term[k].time_sign) << "\n";
    }
    std::cout << "  parity-even terms:";
    for (auto k : classification.parity_even_terms) std::cout << " " << k;
    std::cout << "\n  parity-odd terms:";
    for (auto k : classification.parity_odd_terms) std::cout << " " << k;
    std::cout << "\n";
  }
  return kExitOk;
}

int run_verdict(const std::string& system_name, const ClassifySource& source,
                const std::string& direct_class, const std::string& output) {
  const chiralkit::SystemKind system = system_name == "truly"
                                           ? chiralkit::SystemKind::TrulyChiralSystem
                                           : chiralkit::SystemKind::FalselyChiralSystem;

  ChiralityClass influence;
  Json config = source_echo(source);
  config["system"] = system_name;
  config["output"] = output;

  if (!direct_class.empty()) {
    config["class"] = direct_class;
    influence = direct_class == "truly" ? ChiralityClass::TrulyChiral : ChiralityClass::FalselyChiral;
  } else if (!source.kinematic.empty()) {
    influence = chiralkit::classify_kinematic(chiralkit::parse_kinematic(source.kinematic));
  } else if (!source.builtin.empty()) {
    const chiralkit::HamiltonianIR* found = chiralkit::find_builtin(source.builtin);
    if (found == nullptr) {
      std::cerr << "unknown builtin '" << source.builtin << "'\n";
      return kExitInput;
    }
    influence = chiralkit::classify_influence(*found).cls;
  } else {
    influence = chiralkit::classify_influence(chiralkit::parse_hamiltonian(read_file(source.file))).cls;
  }

  const chiralkit::Verdict verdict = chiralkit::chirality_test(system, influence);
  if (output == "json") {
    std::cout << chiralkit::pretty(chiralkit::envelope("verdict", config, to_json(verdict)));
    return kExitOk;
  }
  std::cout << "system: " << to_string(verdict.system) << "\n"
            << "influence: " << to_string(verdict.influence) << "\n"
            << "relation: "
            << (verdict.relation == chiralkit::DiagonalRelation::AntisymmetricDiagonal
                    ? "H_LL = -H_RR"
                    : "H_LL = H_RR = 0")
            << "\n"
            << (verdict.pved_possible ? "PVED possible" : "PVED impossible") << "\n"
            << "derivation:\n";
  for (const auto& step : verdict.derivation)
    std::cout << "  - " << step.operation << ": " << step.relation << "\n";
  std::cout << verdict.note << "\n";
  return kExitOk;
}

int run_table(const std::string& output) {
  if (output == "json") {
    std::cout << chiralkit::pretty(
        chiralkit::envelope("table", Json{{"output", output}}, chiralkit::verdict_table_json()));
    return kExitOk;
  }
  for (chiralkit::SystemKind system : {chiralkit::SystemKind::TrulyChiralSystem,
                                       chiralkit::SystemKind::FalselyChiralSystem}) {
    for (ChiralityClass influence : {ChiralityClass::TrulyChiral, ChiralityClass::FalselyChiral}) {
      const auto v = chiralkit::chirality_test(system, influence);
      std::cout << to_string(system) << "  " << to_string(influence) << "  "
                << (v.relation == chiralkit::DiagonalRelation::AntisymmetricDiagonal
                        ? "H_LL = -H_RR"
                        : "H_LL = H_RR = 0")
                << "  " << (v.pved_possible ? "PVED possible" : "PVED impossible") << "\n";
    }
  }
  return kExitOk;
}

int run_verify_qft(const std::string& case_name, std::uint64_t seed, int samples, double tol,
                   const std::string& output) {
  const chiralkit::CheckReport report = case_name == "nc"
                                            ? chiralkit::run_nc_check(seed, samples, tol)
                                            : chiralkit::run_axion_check(seed, samples, tol);
  if (output == "json") {
    Json config = {
        {"case", case_name}, {"seed", seed}, {"samples", samples}, {"tol", tol}, {"output", output}};
    std::cout << chiralkit::pretty(chiralkit::envelope("verify-qft", config, to_json(report)));
  } else {
    std::cout << "case: " << report.case_name << "\n"
              << "seed: " << report.seed << "  samples: " << report.samples
              << "  tolerance: " << report.tolerance << "\n"
              << "max |deviation|: " << report.max_abs_deviation << "\n"
              << "parity sign: expected " << sign_text(report.expected_parity_sign) << ", measured "
              << sign_text(report.measured_parity_sign) << "\n"
              << "chain sign: expected " << sign_text(report.expected_chain_sign) << ", measured "
              << sign_text(report.measured_chain_sign) << "\n"
              << "nonzero samples: " << report.nonzero_samples
              << "  degenerate rows: " << report.degenerate_rows << "\n"
              << (report.passed ? "PASS" : "FAIL") << "\n";
  }
  return report.passed ? kExitOk : kExitFailure;
}

int run_check_clifford(const std::string& output) {
  const chiralkit::CliffordReport report = chiralkit::verify_clifford(chiralkit::weyl_basis());
  if (output == "json") {
    std::cout << chiralkit::pretty(
        chiralkit::envelope("check-clifford", Json{{"output", output}}, to_json(report)));
  } else {
    for (const auto& check : report.checks)
      std::cout << (check.passed ? "ok   " : "FAIL ") << check.name << "\n";
    std::cout << (report.all_passed() ? "all checks passed" : "some checks failed") << "\n";
  }
  return report.all_passed() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chiral-influence classifier and plane-wave sign-chain verifier"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(chiralkit::kToolVersion));

  std::string output = "text";
  app.add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  ClassifySource classify_source;
  CLI::App* classify = app.add_subcommand("classify", "Classify an interaction as a chiral influence");
  classify->add_option("--builtin", classify_source.builtin, "Builtin interaction name");
  classify->add_option("--kinematic", classify_source.kinematic, "Kinematic one-line expression");
  classify->add_option("file", classify_source.file, "Interaction file (.ham)");

  ClassifySource verdict_source;
  std::string verdict_system;
  std::string verdict_class;
  CLI::App* verdict = app.add_subcommand("verdict", "Derive whether a PVED is possible");
  verdict->add_option("--system", verdict_system, "System kind")
      ->required()
      ->check(CLI::IsMember({"truly", "falsely"}));
  verdict->add_option("--builtin", verdict_source.builtin, "Builtin interaction name");
  verdict->add_option("--kinematic", verdict_source.kinematic, "Kinematic one-line expression");
  verdict->add_option("--class", verdict_class, "Influence class given directly")
      ->check(CLI::IsMember({"truly", "falsely"}));
  verdict->add_option("file", verdict_source.file, "Interaction file (.ham)");

  CLI::App* table = app.add_subcommand("table", "Print the system-by-influence decision table");

  std::string qft_case;
  std::uint64_t qft_seed = 42;
  int qft_samples = 1000;
  double qft_tol = 1e-10;
  CLI::App* verify = app.add_subcommand("verify-qft", "Run a randomized plane-wave sign-chain check");
  verify->add_option("--case", qft_case, "Which chain to verify")
      ->required()
      ->check(CLI::IsMember({"nc", "axion"}));
  verify->add_option("--seed", qft_seed, "Sampling seed")->capture_default_str();
  verify->add_option("--samples", qft_samples, "Number of samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--tol", qft_tol, "Deviation tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* clifford = app.add_subcommand("check-clifford", "Audit the gamma-matrix realization");

  // Let --output appear after the subcommand as well as before it.
  for (CLI::App* sub : {classify, verdict, table, verify, clifford}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(classify)) {
      if (classify_source.count() != 1) {
        std::cerr << "classify needs exactly one of --builtin, --kinematic, or a file argument\n";
        return kExitInput;
      }
      return run_classify(classify_source, output);
    }
    if (app.got_subcommand(verdict)) {
      const int sources = verdict_source.count() + static_cast<int>(!verdict_class.empty());
      if (sources != 1) {
        std::cerr << "verdict needs exactly one influence source "
                     "(--builtin, --kinematic, --class, or a file argument)\n";
        return kExitInput;
      }
      return run_verdict(verdict_system, verdict_source, verdict_class, output);
    }
    if (app.got_subcommand(table)) return run_table(output);
    if (app.got_subcommand(verify)) return run_verify_qft(qft_case, qft_seed, qft_samples, qft_tol, output);
    if (app.got_subcommand(clifford)) return run_check_clifford(output);
    std::cerr << "no command given\n";
    return kExitInput;
  } catch (const chiralkit::DslError& e) {
    print_span_error(e);
    return kExitInput;
  } catch (const chiralkit::MalformedExpressionError& e) {
    std::cerr << "malformed expression: " << e.what() << "\n";
    return kExitInput;
  } catch (const chiralkit::UnsupportedInfluenceError& e) {
    std::cerr << "unsupported combination: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}
