#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catgraph/errors.hpp"
#include "catgraph/json_io.hpp"
#include "catgraph/verify.hpp"

namespace {

// Exit codes: 0 ok, 1 a law failed, 2 usage/parse, 3 kind mismatch, 4 budget.
constexpr int kOk = 0;
constexpr int kLawFailed = 1;
constexpr int kParse = 2;
constexpr int kKind = 3;
constexpr int kBudget = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw catgraph::ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw catgraph::ParseError("cannot open output file: " + path);
  out << text;
}

int run_apply(const std::string& functor, const std::string& in_path,
              const std::string& out_path) {
  std::vector<std::string> names = catgraph::functor_names();
  if (std::find(names.begin(), names.end(), functor) == names.end()) {
    std::cerr << "unknown functor: " << functor << "\nknown functors:";
    for (const auto& n : names) std::cerr << ' ' << n;
    std::cerr << '\n';
    return kParse;
  }
  std::string result = catgraph::apply_named_functor(functor, read_file(in_path));
  write_file(out_path, result);
  return kOk;
}

int run_check(const std::string& law, const catgraph::VerifyConfig& cfg) {
  std::vector<std::string> names = catgraph::law_names();
  if (std::find(names.begin(), names.end(), law) == names.end()) {
    std::cerr << "unknown law: " << law << "\nknown laws:";
    for (const auto& n : names) std::cerr << ' ' << n;
    std::cerr << '\n';
    return kParse;
  }
  bool all_pass = true;
  for (const catgraph::LawReport& rep : catgraph::run_law(law, cfg)) {
    std::cout << catgraph::emit_report(rep) << '\n';
    all_pass = all_pass && rep.pass;
  }
  return all_pass ? kOk : kLawFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"comma-presented graph categories: functors, laws, spaces"};
  app.require_subcommand(1);

  std::string functor, in_path, out_path;
  CLI::App* apply = app.add_subcommand("apply", "apply a named functor to a graph file");
  apply->add_option("--functor", functor, "functor name")->required();
  apply->add_option("--in", in_path, "input JSON file")->required();
  apply->add_option("--out", out_path, "output JSON file")->required();

  catgraph::VerifyConfig cfg;
  if (const char* env = std::getenv("CATGRAPH_BUDGET")) {
    try {
      cfg.budget = std::stoll(env);
    } catch (const std::exception&) {
      std::cerr << "CATGRAPH_BUDGET is not a number: " << env << '\n';
      return kParse;
    }
  }
  std::string law;
  CLI::App* check = app.add_subcommand("check", "run a law suite and stream reports");
  check->add_option("--law", law, "law name")->required();
  check->add_option("--max-size", cfg.max_size, "carrier size bound");
  check->add_option("--seed", cfg.seed, "seed for sampled generators");
  check->add_option("--budget", cfg.budget, "candidate budget per hom enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (apply->parsed()) return run_apply(functor, in_path, out_path);
    return run_check(law, cfg);
  } catch (const catgraph::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const catgraph::KindError& e) {
    std::cerr << "kind error: " << e.what() << '\n';
    return kKind;
  } catch (const catgraph::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
}
