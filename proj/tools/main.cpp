#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "blp/bigm.hpp"
#include "blp/certificates.hpp"
#include "blp/kkt.hpp"
#include "blp/model.hpp"
#include "blp/solver.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnbounded = 2;
constexpr int kExitParseError = 64;
constexpr int kExitDimensionError = 65;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw blp::ParseError("cannot read '" + path + "'", 0, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) throw blp::ParseError("cannot write '" + path + "'", 0, 0);
  out << text;
}

void print_vector(std::ostream& os, const char* label, const blp::RatVector& v) {
  os << label;
  for (const blp::Rat& x : v) os << ' ' << blp::to_string(x);
  os << '\n';
}

blp::Rat parse_rational_arg(const std::string& text, const char* flag) {
  try {
    return blp::parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw blp::ParseError(std::string("bad value for ") + flag + ": '" + text + "'", 0, 0);
  }
}

blp::DecisionInstance load_decision(const std::string& path,
                                    const std::optional<std::string>& alpha_flag) {
  const blp::ParsedInstance parsed = blp::parse_instance(read_file(path));
  parsed.instance.validate();
  if (alpha_flag) {
    return blp::DecisionInstance{parsed.instance,
                                 parse_rational_arg(*alpha_flag, "--alpha")};
  }
  if (!parsed.alpha) {
    throw blp::ParseError(
        "no alpha: give --alpha or add an alpha: line to '" + path + "'", 0, 0);
  }
  return parsed.decision();
}

blp::ScaledInstance load_scaled(const std::string& path) {
  const blp::ParsedInstance parsed = blp::parse_instance(read_file(path));
  parsed.instance.validate();
  return blp::scale_to_integers(parsed.instance);
}

struct Options {
  std::string instance_path;
  std::string cert_path;
  std::string out_path;
  std::optional<std::string> alpha;
  std::optional<std::string> mp;
  std::optional<std::string> md;
  bool tight = false;
};

int report_milp_outcome(const blp::MilpModel& model, const blp::LpOutcome& out) {
  switch (out.tag) {
    case blp::OutcomeTag::Infeasible:
      std::cout << "INFEASIBLE\n";
      return kExitNo;
    case blp::OutcomeTag::Unbounded:
      std::cout << "UNBOUNDED\n";
      return kExitUnbounded;
    case blp::OutcomeTag::Optimal:
      break;
  }
  std::cout << "OPTIMAL value " << blp::to_string(out.value) << '\n';
  const auto& p = out.point;
  const std::size_t n = model.n, m = model.m, r = model.r;
  print_vector(std::cout, "x:", blp::RatVector(p.begin(), p.begin() + n));
  print_vector(std::cout, "y:", blp::RatVector(p.begin() + n, p.begin() + n + m));
  print_vector(std::cout, "lambda:",
               blp::RatVector(p.begin() + n + m, p.begin() + n + m + r));
  print_vector(std::cout, "z:", blp::RatVector(p.begin() + n + m + r, p.end()));
  return kExitYes;
}

int run_solve(const Options& opt) {
  const blp::ParsedInstance parsed = blp::parse_instance(read_file(opt.instance_path));
  parsed.instance.validate();
  const blp::BilevelOutcome out = blp::solve_optimistic(parsed.instance);
  switch (out.tag) {
    case blp::OutcomeTag::Infeasible:
      std::cout << "INFEASIBLE\n";
      return kExitNo;
    case blp::OutcomeTag::Unbounded:
      std::cout << "UNBOUNDED\n";
      return kExitUnbounded;
    case blp::OutcomeTag::Optimal:
      break;
  }
  std::cout << "OPTIMAL value " << blp::to_string(out.value) << '\n';
  print_vector(std::cout, "x:", out.x);
  print_vector(std::cout, "y:", out.y);
  std::cout << "basis:";
  for (std::size_t j : out.certificate.basis) std::cout << ' ' << (j + 1);
  std::cout << '\n';
  if (!opt.cert_path.empty())
    write_file(opt.cert_path, blp::serialize_certificate(out.certificate));
  return kExitYes;
}

int run_decide(const Options& opt, bool pessimistic) {
  const blp::DecisionInstance dec = load_decision(opt.instance_path, opt.alpha);
  std::string serialized;
  if (pessimistic) {
    const auto cert = blp::decide_pessimistic(dec);
    if (cert) serialized = blp::serialize_certificate(*cert);
  } else {
    const auto cert = blp::decide_optimistic(dec);
    if (cert) serialized = blp::serialize_certificate(*cert);
  }
  if (serialized.empty()) {
    std::cout << "NO\n";
    return kExitNo;
  }
  std::cout << "YES\n" << serialized;
  if (!opt.cert_path.empty()) write_file(opt.cert_path, serialized);
  return kExitYes;
}

int run_bigm(const Options& opt) {
  const blp::ScaledInstance scaled = load_scaled(opt.instance_path);
  const blp::BigMResult ms = blp::compute_mp(scaled);
  std::cout << "Mp " << blp::to_string(ms.mp) << "  Md " << blp::to_string(ms.md) << '\n';
  if (opt.tight) {
    const auto [mp_star, md_star] = blp::tight_bounds_by_enumeration(scaled.instance);
    std::cout << "Mp* " << blp::to_string(mp_star) << "  Md* " << blp::to_string(md_star)
              << '\n';
  }
  return kExitYes;
}

blp::BigMResult resolve_bigm(const blp::ScaledInstance& scaled, const Options& opt) {
  blp::BigMResult ms = blp::compute_mp(scaled);
  if (opt.mp) ms.mp = parse_rational_arg(*opt.mp, "--mp");
  if (opt.md) ms.md = parse_rational_arg(*opt.md, "--md");
  return ms;
}

int run_reformulate(const Options& opt) {
  const blp::ScaledInstance scaled = load_scaled(opt.instance_path);
  const blp::BigMResult ms = resolve_bigm(scaled, opt);
  write_file(opt.out_path, blp::write_lp_format(blp::build_milp(scaled.instance, ms)));
  std::cout << "wrote " << opt.out_path << " (Mp " << blp::to_string(ms.mp) << ", Md "
            << blp::to_string(ms.md) << ")\n";
  return kExitYes;
}

int run_check_cert(const Options& opt) {
  const blp::DecisionInstance dec = load_decision(opt.instance_path, opt.alpha);
  const auto cert = blp::parse_certificate(read_file(opt.cert_path));
  const blp::CheckReport report =
      std::holds_alternative<blp::OptCert>(cert)
          ? blp::check_opt_cert(dec, std::get<blp::OptCert>(cert).basis)
          : blp::check_pess_cert(dec, std::get<blp::PessCert>(cert));
  if (report.accepted) {
    std::cout << "ACCEPTED\n";
    if (report.witness) print_vector(std::cout, "witness:", *report.witness);
    return kExitYes;
  }
  std::cout << "REJECTED " << blp::to_string(report.failed_condition) << '\n';
  return kExitNo;
}

int run_gen_gadget(const Options& opt) {
  const blp::BinaryProgram bp = blp::parse_binary_program(read_file(opt.instance_path));
  write_file(opt.out_path, blp::serialize_instance(blp::gen_binary_gadget(bp)));
  std::cout << "wrote " << opt.out_path << '\n';
  return kExitYes;
}

int run_solve_milp(const Options& opt) {
  const blp::ScaledInstance scaled = load_scaled(opt.instance_path);
  const blp::MilpModel model = blp::build_milp(scaled.instance, resolve_bigm(scaled, opt));
  return report_milp_outcome(model, blp::solve_by_z_enumeration(model));
}

void add_string_opt(CLI::App* cmd, const char* name, std::optional<std::string>& slot,
                    const char* help) {
  cmd->add_option_function<std::string>(
      name, [&slot](const std::string& v) { slot = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rational toolkit for bilevel linear programs"};
  app.require_subcommand(1);
  Options opt;

  auto* solve_cmd = app.add_subcommand("solve", "solve the optimistic problem exactly");
  solve_cmd->add_option("instance", opt.instance_path, "BLP instance file")->required();
  solve_cmd->add_option("--cert-out", opt.cert_path, "write the optimal basis certificate");

  auto* dopt = app.add_subcommand("decide-opt", "optimistic decision with certificate");
  auto* dpess = app.add_subcommand("decide-pess", "pessimistic decision with certificate");
  for (CLI::App* cmd : {dopt, dpess}) {
    cmd->add_option("instance", opt.instance_path, "BLP instance file")->required();
    add_string_opt(cmd, "--alpha", opt.alpha,
                   "threshold (overrides the instance's alpha: line)");
    cmd->add_option("--cert-out", opt.cert_path, "write the accepting certificate");
  }

  auto* bigm_cmd = app.add_subcommand("bigm", "bilevel-correct big-M constants");
  bigm_cmd->add_option("instance", opt.instance_path, "BLP instance file")->required();
  bigm_cmd->add_flag("--tight", opt.tight, "also print enumerated tight bounds");

  auto* reform = app.add_subcommand("reformulate", "emit the LP-format MILP reformulation");
  auto* smilp = app.add_subcommand("solve-milp", "solve the reformulation by z enumeration");
  for (CLI::App* cmd : {reform, smilp}) {
    cmd->add_option("instance", opt.instance_path, "BLP instance file")->required();
    add_string_opt(cmd, "--mp", opt.mp, "override the computed Mp");
    add_string_opt(cmd, "--md", opt.md, "override the computed Md");
  }
  reform->add_option("-o,--out", opt.out_path, "output LP file")->required();

  auto* check = app.add_subcommand("check-cert", "verify a certificate file");
  check->add_option("instance", opt.instance_path, "BLP instance file")->required();
  check->add_option("certificate", opt.cert_path, "certificate file")->required();
  add_string_opt(check, "--alpha", opt.alpha,
                 "threshold (overrides the instance's alpha: line)");

  auto* gadget = app.add_subcommand("gen-gadget", "binary program to BLP instance");
  gadget->add_option("binary-program", opt.instance_path, "BIN program file")->required();
  gadget->add_option("-o,--out", opt.out_path, "output BLP file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(solve_cmd)) return run_solve(opt);
    if (app.got_subcommand(dopt)) return run_decide(opt, false);
    if (app.got_subcommand(dpess)) return run_decide(opt, true);
    if (app.got_subcommand(bigm_cmd)) return run_bigm(opt);
    if (app.got_subcommand(reform)) return run_reformulate(opt);
    if (app.got_subcommand(check)) return run_check_cert(opt);
    if (app.got_subcommand(gadget)) return run_gen_gadget(opt);
    if (app.got_subcommand(smilp)) return run_solve_milp(opt);
  } catch (const blp::DimensionError& ex) {
    std::cerr << "dimension error: " << ex.what() << '\n';
    return kExitDimensionError;
  } catch (const blp::ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 70;
  }
  return kExitYes;
}
