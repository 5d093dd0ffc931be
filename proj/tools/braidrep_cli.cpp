// braidrep: command-line access to the braid homomorphism, the Laurent
// representation, the Burau baseline, the relation checks and the
// collinearity simulator. Output is JSON on stdout; exit codes are
// 0 success, 1 computation-level failure, 2 usage or parse error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidrep/braidrep.hpp"

namespace {

using namespace braidrep;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Options {
  std::size_t n = 0;
  std::string output = "json";
  std::string braid;
  bool bigelow = false;
  std::string convention = "aba-b-";
  std::string order = "hom";
  std::vector<std::string> sets;
  std::optional<std::string> set_rest;
  std::vector<std::string> entry;
  bool symbolic = false;
  bool reduced = false;
  std::optional<std::string> burau_at;
  std::string which;
  std::string file;
  std::vector<std::size_t> sigma;
  std::size_t segments = 256;
  double tolerance = 1e-12;
};

void emit(const Options& opt, const Json& j) { std::cout << (opt.output == "pretty" ? j.dump(2) : j.dump()) << '\n'; }

std::size_t require_n(const Options& opt) {
  if (opt.n == 0) throw DomainError("--n is required");
  return opt.n;
}

BraidWord input_braid(const Options& opt) {
  const std::size_t n = require_n(opt);
  if (opt.bigelow) {
    if (!opt.braid.empty()) throw DomainError("--bigelow and an explicit braid are mutually exclusive");
    return bigelow_beta(n, parse_commutator_convention(opt.convention));
  }
  return parse_braid(opt.braid, n);
}

Assignment input_assignment(const Options& opt, std::size_t n) {
  Assignment a(n);
  if (opt.set_rest) a.set_rest(parse_rational(*opt.set_rest));
  for (const std::string& s : opt.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("assignment '" + s + "' is not of the form var=value");
    a.set(s.substr(0, eq), parse_rational(s.substr(eq + 1)));
  }
  a.resolve();
  return a;
}

int cmd_phi(const Options& opt) {
  emit(opt, to_json(phi(input_braid(opt))));
  return kOk;
}

int cmd_rep(const Options& opt) {
  const BraidWord w = input_braid(opt);
  const std::size_t n = w.strands();
  const ProductOrder order = parse_product_order(opt.order);
  const bool numeric = !opt.sets.empty() || opt.set_rest.has_value();
  if (opt.bigelow && !numeric && !opt.symbolic) {
    throw DomainError("--bigelow evaluates numerically; pass --set/--set-rest, or --symbolic for the full matrix");
  }
  std::optional<std::pair<BasisIndex, BasisIndex>> entry;
  if (!opt.entry.empty()) entry.emplace(BasisIndex::parse(opt.entry.at(0), n), BasisIndex::parse(opt.entry.at(1), n));

  const GnWord word = phi_pure(w);
  if (numeric) {
    const NumericMatrix m = rep_of_word(word, input_assignment(opt, n), order);
    if (entry) emit(opt, format_rational(corner_entry(m, n, entry->first, entry->second)));
    else emit(opt, to_json(m, n));
  } else {
    const RepMatrix m = rep_of_word(word, order);
    if (entry) emit(opt, format(corner_entry(m, n, entry->first, entry->second)));
    else emit(opt, to_json(m, n));
  }
  return kOk;
}

int cmd_burau(const Options& opt) {
  const BraidWord w = input_braid(opt);
  const BurauMatrix m = opt.reduced ? burau_reduced(w) : burau_unreduced(w);
  if (opt.burau_at) {
    const Assignment a = Assignment(1).set_rest(parse_rational(*opt.burau_at));
    Evaluator eval(a);
    emit(opt, burau_to_json(m.map([&](const LaurentPoly& p) { return eval(p); }, Rational(0)), w.strands(), opt.reduced));
  } else {
    emit(opt, burau_to_json(m, w.strands(), opt.reduced));
  }
  return kOk;
}

int cmd_check(const Options& opt) {
  const std::size_t n = require_n(opt);
  Json report;
  bool passed = false;
  if (opt.which == "gn-relations") {
    if (n < 4 || n > 6) throw DomainError("gn-relations supports 4 <= n <= 6");
    const RelationReport r = check_relations(n);
    report = to_json(r);
    passed = r.all_passed();
  } else if (opt.which == "braid-relations") {
    if (n < 3 || n > 5) throw DomainError("braid-relations supports 3 <= n <= 5");
    const RelationReport r = check_braid_relations(n, parse_product_order(opt.order));
    report = to_json(r);
    passed = r.all_passed();
  } else if (opt.which == "oracle") {
    if (n < 3 || n > 8) throw DomainError("oracle supports 3 <= n <= 8");
    const CalibrationReport r = calibrate_against_phi(n, opt.segments, opt.tolerance);
    report = to_json(r);
    passed = r.all_exact();
  } else {
    throw DomainError("unknown check '" + opt.which + "'");
  }
  report["check"] = opt.which;
  emit(opt, report);
  return passed ? kOk : kFailure;
}

int cmd_simulate(const Options& opt) {
  std::optional<TrajectorySet> ts;
  if (!opt.sigma.empty()) {
    if (!opt.file.empty()) throw DomainError("--sigma and a trajectory file are mutually exclusive");
    ts.emplace(sigma_motion(opt.sigma.at(0), opt.sigma.at(1), opt.segments));
  } else if (!opt.file.empty()) {
    ts.emplace(load_trajectories(opt.file));
  } else {
    throw DomainError("simulate needs a trajectory file or --sigma n i");
  }
  const auto events = detect_events(*ts, opt.tolerance);
  const GnWord word = events_to_word(events, ts->points());
  emit(opt, Json{{"n", ts->points()},
                 {"permutation", to_json(ts->final_labels())},
                 {"events", to_json(events)},
                 {"word", to_json(word)},
                 {"text", word.to_string()}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Braid homomorphism, Laurent representation and collinearity simulator"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--n", opt.n, "Strand count");
  app.add_option("--output", opt.output, "Output style")->check(CLI::IsMember({"json", "pretty"}));

  auto add_braid_input = [&](CLI::App* sub) {
    sub->add_option("braid", opt.braid, "Braid word, e.g. \"s1 s2^-1\" or \"1 -2\"");
    sub->add_flag("--bigelow", opt.bigelow, "Use the built-in Burau-kernel braid (n = 5 or 6)");
    sub->add_option("--commutator-convention", opt.convention, "Commutator used by --bigelow")
        ->check(CLI::IsMember({"aba-b-", "a-b-ab"}));
  };

  CLI::App* phi_cmd = app.add_subcommand("phi", "Image of a braid in the semidirect product");
  add_braid_input(phi_cmd);

  CLI::App* rep_cmd = app.add_subcommand("rep", "Matrix of a pure braid under the representation");
  add_braid_input(rep_cmd);
  rep_cmd->add_option("--set", opt.sets, "Specialize a variable, e.g. t1=-1 (repeatable)");
  rep_cmd->add_option("--set-rest", opt.set_rest, "Value for every variable not set explicitly");
  rep_cmd->add_option("--entry", opt.entry, "Print one entry: row and column basis labels, e.g. x_1_2 x_1_2")
      ->expected(2);
  rep_cmd->add_flag("--symbolic", opt.symbolic, "Allow the full symbolic matrix for --bigelow");
  rep_cmd->add_option("--order", opt.order, "Matrix product order")->check(CLI::IsMember({"hom", "anti"}));

  CLI::App* burau_cmd = app.add_subcommand("burau", "Burau matrix of a braid over Z[t^±]");
  add_braid_input(burau_cmd);
  burau_cmd->add_flag("--reduced", opt.reduced, "Reduced (n-1)x(n-1) form");
  burau_cmd->add_option("--at", opt.burau_at, "Specialize t to this rational");

  CLI::App* check_cmd = app.add_subcommand("check", "Relation and calibration checks");
  check_cmd->add_option("which", opt.which, "gn-relations | braid-relations | oracle")
      ->required()
      ->check(CLI::IsMember({"gn-relations", "braid-relations", "oracle"}));
  check_cmd->add_option("--order", opt.order, "Matrix product order")->check(CLI::IsMember({"hom", "anti"}));
  check_cmd->add_option("--segments", opt.segments, "Samples per generator motion");
  check_cmd->add_option("--tolerance", opt.tolerance, "Bisection tolerance");

  CLI::App* sim_cmd = app.add_subcommand("simulate", "Collinearity events of a planar motion");
  sim_cmd->add_option("file", opt.file, "Trajectory JSON file");
  sim_cmd->add_option("--sigma", opt.sigma, "Generator motion: n i")->expected(2);
  sim_cmd->add_option("--segments", opt.segments, "Samples per generator motion");
  sim_cmd->add_option("--tolerance", opt.tolerance, "Bisection tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (phi_cmd->parsed()) return cmd_phi(opt);
    if (rep_cmd->parsed()) return cmd_rep(opt);
    if (burau_cmd->parsed()) return cmd_burau(opt);
    if (check_cmd->parsed()) return cmd_check(opt);
    if (sim_cmd->parsed()) return cmd_simulate(opt);
  } catch (const NotPureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const DegenerateEventError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
