// invbruhat: command-line front end for the Bruhat order on involution
// classes F_n^A.
//
//   invbruhat enumerate      --n 6 --classes 2
//   invbruhat hasse          --n 4 --classes 0 --format dot
//   invbruhat check-graded   --n 6 --all-classes
//   invbruhat chains         --n 6 --from 124365 --to 426153 --kind all
//   invbruhat el-verify      --n 6 --classes 0
//   invbruhat counterexample --prop 20 --n 6 --i 2 --m 1
//
// Exit status: 0 when every embedded verification passes, 1 when one
// fails, 2 on invalid input.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "invbruhat/fpclasses.hpp"
#include "invbruhat/report.hpp"

using namespace invbruhat;

namespace {

struct Options {
  int n = 0;
  std::vector<int> classes;
  bool all_classes = false;
  std::string from;
  std::string to;
  std::string kind = "all";
  std::string format;
  std::string order = "auto";
  int prop = 0;
  int i = 0;
  std::optional<int> m;
  std::size_t limit = 10'000;
  bool timing = false;
};

std::vector<FixedPointSpec> selected_specs(const Options& opt) {
  if (opt.all_classes && !opt.classes.empty()) throw Error("use either --classes or --all-classes, not both");
  if (opt.all_classes) return all_specs(opt.n);
  if (opt.classes.empty()) throw Error("--classes or --all-classes is required");
  return {FixedPointSpec::make(opt.n, opt.classes)};
}

FixedPointSpec single_spec(const Options& opt) {
  if (opt.all_classes) throw Error("this command takes a single --classes list");
  if (opt.classes.empty()) throw Error("--classes is required");
  return FixedPointSpec::make(opt.n, opt.classes);
}

Format format_or(const Options& opt, Format fallback) {
  return opt.format.empty() ? fallback : parse_format(opt.format);
}

std::optional<bool> order_choice(const std::string& order) {
  if (order == "auto") return std::nullopt;
  if (order == "reversed") return true;
  if (order == "standard") return false;
  throw Error("--order must be auto, standard or reversed");
}

Permutation parse_endpoint(const std::string& text, int n, const char* flag) {
  if (text.empty()) throw Error(std::string(flag) + " is required");
  Permutation p = Permutation::parse(text);
  if (n != 0 && p.size() != n) throw Error(std::string(flag) + " has size " + std::to_string(p.size()) + ", expected " + std::to_string(n));
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat order on conjugation-invariant sets of involutions"};
  app.require_subcommand(1);
  Options opt;

  auto add_n = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--n", opt.n, "Size of the symmetric group")->check(CLI::Range(1, kMaxN));
    if (required) o->required();
  };
  auto add_classes = [&](CLI::App* sub, bool allow_all) {
    sub->add_option("--classes", opt.classes, "Admissible fixed-point counts, comma separated")->delimiter(',');
    if (allow_all) sub->add_flag("--all-classes", opt.all_classes, "Every parity-valid nonempty set of counts");
  };
  auto add_common = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("--format", opt.format, "Output format: " + formats);
    sub->add_flag("--timing", opt.timing, "Print elapsed time on stderr");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List the members of F_n^A with their statistics");
  add_n(enumerate);
  add_classes(enumerate, false);
  add_common(enumerate, "jsonl (default), text");

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of F_n^A");
  add_n(hasse);
  add_classes(hasse, false);
  add_common(hasse, "dot (default), jsonl, text");

  auto* graded = app.add_subcommand("check-graded", "Gradedness: closed-form criterion against brute force");
  add_n(graded);
  add_classes(graded, true);
  add_common(graded, "jsonl (default), text");

  auto* chains = app.add_subcommand("chains", "Saturated chains of an interval of I_n");
  add_n(chains, false);
  chains->add_option("--from", opt.from, "Bottom involution")->required();
  chains->add_option("--to", opt.to, "Top involution")->required();
  chains->add_option("--kind", opt.kind, "increasing, decreasing or all");
  chains->add_option("--limit", opt.limit, "Maximum number of chains for --kind all");
  add_common(chains, "jsonl (default), text");

  auto* el = app.add_subcommand("el-verify", "Check the EL property of the labelled Hasse diagram");
  add_n(el);
  add_classes(el, false);
  el->add_option("--order", opt.order, "Label order: auto, standard or reversed");
  add_common(el, "jsonl (default), text");

  auto* counter = app.add_subcommand("counterexample", "Print a non-gradedness witness");
  counter->add_option("--prop", opt.prop, "19 or 20")->required();
  add_n(counter);
  counter->add_option("--i", opt.i, "Fixed-point parameter")->required();
  counter->add_option("--m", opt.m, "Gap parameter (prop 20)");
  add_common(counter, "jsonl (default), text");

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  CommandOutput output;
  try {
    if (enumerate->parsed()) {
      output = cmd_enumerate(single_spec(opt), format_or(opt, Format::jsonl));
    } else if (hasse->parsed()) {
      output = cmd_hasse(single_spec(opt), format_or(opt, Format::dot));
    } else if (graded->parsed()) {
      output = cmd_check_graded(selected_specs(opt), format_or(opt, Format::jsonl));
    } else if (chains->parsed()) {
      const Permutation from = parse_endpoint(opt.from, opt.n, "--from");
      const Permutation to = parse_endpoint(opt.to, opt.n, "--to");
      output = cmd_chains(from, to, parse_chain_query(opt.kind), format_or(opt, Format::jsonl), opt.limit);
    } else if (el->parsed()) {
      output = cmd_el_verify(single_spec(opt), order_choice(opt.order), format_or(opt, Format::jsonl));
    } else if (counter->parsed()) {
      output = cmd_counterexample(opt.prop, opt.n, opt.i, opt.m, format_or(opt, Format::jsonl));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n" << app.get_subcommands().front()->help();
    return 2;
  }

  std::cout << output.body;
  if (opt.timing) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed " << elapsed.count() << " s\n";
  }
  return output.ok ? 0 : 1;
}
