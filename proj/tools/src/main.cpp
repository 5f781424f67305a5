#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "run_command.hpp"

namespace {

using ngit_cli::Command;
using ngit_cli::OutputMode;

// The --budget flag wins over the NGIT_BUDGET environment variable; an
// unreadable variable is an input error, not a silent fallback.
int resolve_budget(bool flag_given, std::uint64_t flag_value, Command& c) {
  if (flag_given) {
    c.budget = flag_value;
    return 0;
  }
  const char* env = std::getenv("NGIT_BUDGET");
  if (env == nullptr || *env == '\0') return 0;
  std::string text(env);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v == 0) {
    std::cerr << "error: NGIT_BUDGET must be a positive integer, got \"" << text << "\"\n";
    return 1;
  }
  c.budget = v;
  return 0;
}

// "-" means standard input; anything else is a file path.
int slurp_map(const std::string& source, Command& c) {
  if (source == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    c.map_source = buf.str();
    return 0;
  }
  std::ifstream in(source);
  if (!in) {
    std::cerr << "error: cannot read substitution description from \"" << source << "\"\n";
    return 1;
  }
  c.map_source.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return 0;
}

void add_common(CLI::App* sub, std::string& format, std::uint64_t& budget_value) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->add_option("--budget", budget_value, "Step budget for polynomial elimination");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for invariants of additive group actions"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t budget_value = 0;
  Command c;

  CLI::App* invariants = app.add_subcommand("invariants", "Kernel generators and relations");
  invariants->add_option("--n", c.n, "Degree of the binary form space")->required();
  add_common(invariants, format, budget_value);

  CLI::App* nullcone = app.add_subcommand("nullcone", "Coordinate form of the common zero locus");
  nullcone->add_option("--n", c.n, "Degree of the binary form space")->required();
  add_common(nullcone, format, budget_value);

  CLI::App* stability = app.add_subcommand("stability", "Semistability verdicts");
  stability->require_subcommand(1);

  CLI::App* torus = stability->add_subcommand("torus", "Convex-hull verdict for a torus action");
  torus->add_option("--weights", c.weights, "Weight vectors, ';' between vectors, ',' inside")
      ->required();
  torus->add_option("--support", c.support, "Nonzero coordinate indices, comma separated");
  add_common(torus, format, budget_value);

  CLI::App* config = stability->add_subcommand("config", "Criterion and oracle for a configuration");
  config->add_option("--n", c.n, "Total point count with multiplicity")->required();
  config->add_option("--p", c.p, "First linearization parameter")->required();
  config->add_option("--q", c.q, "Second linearization parameter")->required();
  config->add_option("--points", c.points, "Points a:b^m, comma separated")->required();
  add_common(config, format, budget_value);

  CLI::App* gstatus = stability->add_subcommand("gstatus", "Reductive verdict for a binary form");
  gstatus->add_option("--points", c.points, "Root configuration a:b^m, comma separated")->required();
  add_common(gstatus, format, budget_value);

  CLI::App* fg = app.add_subcommand("fg-check", "Whether the boundary point is unstable");
  fg->add_option("--n", c.n, "Degree of the binary form space")->required();
  fg->add_option("--p", c.p, "First linearization parameter")->required();
  fg->add_option("--q", c.q, "Second linearization parameter")->required();
  add_common(fg, format, budget_value);

  CLI::App* poincare = app.add_subcommand("poincare", "Betti series of the quotient stages");
  poincare->add_option("--n", c.n, "Degree of the binary form space")->required();
  bool sel_intersection = false, sel_partial = false, sel_stable = false, sel_gquotient = false;
  CLI::Option* oi = poincare->add_flag("--intersection", sel_intersection, "Intersection Betti series");
  CLI::Option* op = poincare->add_flag("--partial", sel_partial, "Partial desingularization series");
  CLI::Option* os = poincare->add_flag("--stable", sel_stable, "Stable locus quotient series");
  CLI::Option* og = poincare->add_flag("--gquotient", sel_gquotient, "Reductive quotient series");
  oi->excludes(op)->excludes(os)->excludes(og);
  op->excludes(os)->excludes(og);
  os->excludes(og);
  add_common(poincare, format, budget_value);

  CLI::App* represent = app.add_subcommand("represent", "Matrix of a substitution on a graded basis");
  std::string map_path;
  represent->add_option("--map", map_path, "Substitution description, JSON file or - for stdin")
      ->required();
  represent->add_option("--degree", c.degree, "Graded degree of the monomial basis")->required();
  represent->add_option("--weights", c.weights, "Expected variable weights, comma separated");
  add_common(represent, format, budget_value);

  CLI::App* grouplaw = app.add_subcommand("grouplaw", "One-parameter group law check");
  grouplaw->add_option("--map", map_path, "Substitution description, JSON file or - for stdin")
      ->required();
  grouplaw->add_option("--degree", c.degree, "Graded degree to check at");
  add_common(grouplaw, format, budget_value);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  CLI::App* leaf = app.get_subcommands().front();
  if (leaf == stability) leaf = stability->get_subcommands().front();

  if (leaf == invariants) c.name = "invariants";
  else if (leaf == nullcone) c.name = "nullcone";
  else if (leaf == torus) c.name = "stability torus";
  else if (leaf == config) c.name = "stability config";
  else if (leaf == gstatus) c.name = "stability gstatus";
  else if (leaf == fg) c.name = "fg-check";
  else if (leaf == poincare) c.name = "poincare";
  else if (leaf == represent) c.name = "represent";
  else c.name = "grouplaw";

  c.mode = format == "json" ? OutputMode::Json : OutputMode::Text;
  if (sel_intersection) c.selector = "intersection";
  if (sel_partial) c.selector = "partial";
  if (sel_stable) c.selector = "stable";
  if (sel_gquotient) c.selector = "gquotient";

  if (int rc = resolve_budget(leaf->count("--budget") > 0, budget_value, c); rc != 0) return rc;
  if (leaf == represent || leaf == grouplaw)
    if (int rc = slurp_map(map_path, c); rc != 0) return rc;

  ngit_cli::RunReport rep = ngit_cli::run_command(c);
  if (!rep.payload.empty()) std::cout << rep.payload << "\n";
  if (!rep.diagnostics.empty()) std::cerr << rep.diagnostics << "\n";
  return rep.exit_code;
}
