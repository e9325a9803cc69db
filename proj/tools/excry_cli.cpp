/**
 * @file excry_cli.cpp
 * @brief Command-line front end: parse elements, apply operator and braid
 *        words, run randomized verification suites, fold by a diagram
 *        automorphism, export operator graphs, and compute affine labels.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
 */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <excrystal/braid.hpp>
#include <excrystal/cartan.hpp>
#include <excrystal/extended.hpp>
#include <excrystal/folding.hpp>
#include <excrystal/io.hpp>
#include <excrystal/labels.hpp>
#include <excrystal/verify.hpp>

namespace {

using excry::cartan::CartanDatum;
using excry::ext::ExtElt;
using nlohmann::json;

struct Options {
  std::string type = "A2";
  std::string suite = "all";
  std::string sigma;
  std::string window = "0:1";
  std::string out;
  std::uint64_t seed = 12345;
  int samples = 200;
  int depth = 8;
  int radius = 2;
  int count = 12;
  std::string element;
  std::vector<std::string> ops;
  std::string braid_text;
};

std::pair<int, int> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("window must be 'lo:hi', got: " + text);
  try {
    const int lo = std::stoi(text.substr(0, colon));
    const int hi = std::stoi(text.substr(colon + 1));
    if (lo > hi) throw std::invalid_argument("window is empty: " + text);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("window must be 'lo:hi', got: " + text);
  }
}

/// "1:3,3:1,2:2" -> 0-based permutation of the nodes (unspecified nodes fixed).
std::vector<int> parse_sigma(const CartanDatum& d, const std::string& text) {
  std::vector<int> sigma(d.rank());
  for (int i = 0; i < d.rank(); ++i) sigma[i] = i;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("sigma entries must be 'i:j', got: " + item);
    int from = 0, to = 0;
    try {
      from = std::stoi(item.substr(0, colon)) - 1;
      to = std::stoi(item.substr(colon + 1)) - 1;
    } catch (const std::exception&) {
      throw std::invalid_argument("sigma entries must be 'i:j', got: " + item);
    }
    if (from < 0 || from >= d.rank() || to < 0 || to >= d.rank())
      throw std::invalid_argument("sigma node out of range in: " + item);
    sigma[from] = to;
  }
  return sigma;
}

json report_to_json(const excry::verify::SuiteReport& rep) {
  return json{{"suite", rep.suite},
              {"type", rep.type},
              {"checked", rep.checked},
              {"failures", rep.failures.size()},
              {"failed_cases", rep.failures}};
}

void print_report(const excry::verify::SuiteReport& rep) {
  std::cout << "suite " << rep.suite << "  type " << rep.type << "  checked " << rep.checked
            << "  failures " << rep.failures.size() << "  " << (rep.ok() ? "ok" : "FAIL")
            << "\n";
  for (const auto& f : rep.failures) std::cout << "  failed: " << f << "\n";
}

int run_elem(const Options& opt) {
  const CartanDatum d = excry::cartan::build_cartan(excry::io::parse_type(opt.type));
  const ExtElt e = excry::io::ext_from_json_text(d, opt.element);
  std::cout << excry::io::ext_to_json(d, e).dump() << "\n";
  std::cout << "text: " << excry::io::ext_show(d, e) << "\n";
  return 0;
}

int run_apply(const Options& opt) {
  const CartanDatum d = excry::cartan::build_cartan(excry::io::parse_type(opt.type));
  ExtElt e = excry::io::ext_from_json_text(d, opt.element);
  for (const std::string& text : opt.ops)
    e = excry::io::apply_op(d, excry::io::parse_op(d, text), std::move(e));
  std::cout << excry::io::ext_to_json(d, e).dump() << "\n";
  return 0;
}

int run_braid(const Options& opt) {
  const CartanDatum d = excry::cartan::build_cartan(excry::io::parse_type(opt.type));
  ExtElt e = excry::io::ext_from_json_text(d, opt.element);
  const auto word = excry::io::parse_braid_word(d, opt.braid_text);
  e = excry::braid::braid_apply(d, word, e);
  std::cout << excry::io::ext_to_json(d, e).dump() << "\n";
  return 0;
}

int run_verify(const Options& opt) {
  namespace verify = excry::verify;
  const auto type = excry::io::parse_type(opt.type);
  const CartanDatum d = excry::cartan::build_cartan(type);
  std::cout << "seed " << opt.seed << "\n";

  std::optional<excry::fold::FoldingDatum> fd;
  if (!opt.sigma.empty())
    fd = excry::fold::fold_cartan(type, parse_sigma(d, opt.sigma));
  else if (type == excry::cartan::CartanType{excry::cartan::Family::A, 3})
    fd = verify::fold_a3_mirror();
  else if (type == excry::cartan::CartanType{excry::cartan::Family::D, 4})
    fd = verify::fold_d4_rotation();

  std::vector<std::string> wanted;
  if (opt.suite == "all") {
    wanted = {"crystal-axioms", "inverse-pairs", "braid-relations", "longest-word", "two-ld"};
    if (type.family == excry::cartan::Family::A) wanted.push_back("oracle-agreement");
    if (fd) wanted.push_back("folding");
  } else {
    wanted = {opt.suite};
  }

  std::vector<verify::SuiteReport> reports;
  for (const std::string& name : wanted) {
    if (name == "crystal-axioms")
      reports.push_back(verify::crystal_axioms(d, opt.samples, opt.depth, opt.seed));
    else if (name == "inverse-pairs")
      reports.push_back(verify::inverse_pairs(d, opt.samples, opt.depth, opt.seed));
    else if (name == "braid-relations")
      reports.push_back(verify::braid_relations(d, opt.samples, opt.depth, opt.seed));
    else if (name == "longest-word")
      reports.push_back(verify::longest_word(d, 3, opt.samples, opt.depth, opt.seed));
    else if (name == "oracle-agreement")
      reports.push_back(verify::oracle_agreement(d, opt.samples, opt.depth, opt.seed));
    else if (name == "two-ld")
      reports.push_back(verify::two_ld(d, opt.samples, opt.depth, opt.seed));
    else if (name == "folding") {
      if (!fd)
        throw std::invalid_argument(
            "folding suite needs --sigma (or --type A3/D4 for the built-in automorphisms)");
      reports.push_back(verify::folding(*fd, opt.samples, opt.depth, opt.seed));
    } else {
      throw std::invalid_argument("unknown suite: " + name);
    }
  }

  bool all_ok = true;
  json out = json::array();
  for (const auto& rep : reports) {
    print_report(rep);
    out.push_back(report_to_json(rep));
    all_ok = all_ok && rep.ok();
  }
  std::cout << json{{"seed", opt.seed}, {"type", excry::cartan::name(type)}, {"suites", out}}
                   .dump()
            << "\n";
  return all_ok ? 0 : 1;
}

int run_orbit(const Options& opt) {
  const CartanDatum d = excry::cartan::build_cartan(excry::io::parse_type(opt.type));
  const auto pairs = excry::labels::fundamental_orbit(d, opt.count);
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    excry::labels::AffineLabel l;
    l.pairs[pairs[t]] = 1;
    std::cout << "k=" << (t + 1) << "  " << excry::labels::label_show(l)
              << (excry::labels::in_fundamental_set(pairs[t]) ? "  in-P" : "  outside-P")
              << "\n";
  }
  return 0;
}

int run_fold(const Options& opt) {
  const auto type = excry::io::parse_type(opt.type);
  const CartanDatum d = excry::cartan::build_cartan(type);
  const auto fd = excry::fold::fold_cartan(type, parse_sigma(d, opt.sigma));

  json orbits = json::array();
  for (const auto& orb : fd.orbits) {
    json o = json::array();
    for (int i : orb) o.push_back(i + 1);
    orbits.push_back(o);
  }
  json sigma = json::array();
  for (int i : fd.sigma) sigma.push_back(i + 1);
  json matrix = json::array();
  for (int a = 0; a < fd.folded_rank(); ++a) {
    json row = json::array();
    for (int b = 0; b < fd.folded_rank(); ++b) row.push_back(fd.folded_matrix[a][b]);
    matrix.push_back(row);
  }
  json m_table = json::array();
  for (int a = 0; a < fd.folded_rank(); ++a) {
    json row = json::array();
    for (int b = 0; b < fd.folded_rank(); ++b)
      row.push_back(a == b ? 1 : fd.folded_m[a][b]);
    m_table.push_back(row);
  }
  json desc{{"source", excry::cartan::name(type)},
            {"sigma", sigma},
            {"orbits", orbits},
            {"folded_cartan", matrix},
            {"folded_m", m_table}};

  if (opt.element.empty()) {
    std::cout << desc.dump() << "\n";
    return 0;
  }

  ExtElt e = excry::io::ext_from_json_text(d, opt.element);
  for (const std::string& text : opt.ops) {
    const auto toks = excry::io::tokens_of(text);
    auto orbit_arg = [&](const std::string& s) {
      const int j = std::stoi(s) - 1;
      if (j < 0 || j >= fd.folded_rank())
        throw std::invalid_argument("folded node out of range in: " + text);
      return j;
    };
    if (toks.size() == 3 && (toks[0] == "F" || toks[0] == "E")) {
      const int j = orbit_arg(toks[1]);
      const int k = std::stoi(toks[2]);
      e = toks[0] == "F" ? excry::fold::fold_F(fd, j, k, std::move(e))
                         : excry::fold::fold_E(fd, j, k, std::move(e));
    } else if (toks.size() == 2 && (toks[0] == "R" || toks[0] == "R*")) {
      e = excry::fold::fold_R(fd, orbit_arg(toks[1]), std::move(e), toks[0] == "R" ? +1 : -1);
    } else {
      throw std::invalid_argument("folded operators are 'F j k', 'E j k', 'R j', 'R* j': " +
                                  text);
    }
  }
  std::cout << json{{"folding", desc},
                    {"element", excry::io::ext_to_json(d, e)},
                    {"sigma_fixed", excry::fold::invariance_check(fd, e)}}
                   .dump()
            << "\n";
  return 0;
}

int run_export_dot(const Options& opt) {
  const CartanDatum d = excry::cartan::build_cartan(excry::io::parse_type(opt.type));
  const auto [lo, hi] = parse_window(opt.window);
  if (opt.out.empty()) {
    const int n = excry::io::export_dot(d, opt.radius, lo, hi, std::cout);
    std::cerr << "nodes " << n << "\n";
  } else {
    std::ofstream file(opt.out);
    if (!file) throw std::runtime_error("cannot open output file: " + opt.out);
    const int n = excry::io::export_dot(d, opt.radius, lo, hi, file);
    std::cout << "wrote " << n << " nodes to " << opt.out << "\n";
  }
  return 0;
}

int run_labels(const Options& opt) {
  const CartanDatum d = excry::cartan::build_cartan(excry::io::parse_type(opt.type));
  const ExtElt e = excry::io::ext_from_json_text(d, opt.element);
  const auto l = excry::labels::gamma(d, e);
  std::cout << excry::labels::label_show(l) << "\n";
  std::cout << excry::io::label_to_json(l).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extended crystal toolkit: elements, operators, braid action, verification"};
  app.require_subcommand(1);
  Options opt;

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", opt.type, "Cartan type (A2, A3, D4, E6, ...)");
  };

  CLI::App* elem = app.add_subcommand("elem", "parse an element and echo canonical JSON");
  add_type(elem);
  elem->add_option("element", opt.element, "element JSON")->required();

  CLI::App* apply = app.add_subcommand("apply", "apply operators to an element");
  add_type(apply);
  apply->add_option("element", opt.element, "element JSON")->required();
  apply->add_option("ops", opt.ops, "operators like 'F 2 0', 'E 1 -1', 'D 1', 'zeta', 'R 1'");

  CLI::App* braid = app.add_subcommand("braid", "apply a braid word (rightmost letter first)");
  add_type(braid);
  braid->add_option("element", opt.element, "element JSON")->required();
  braid->add_option("word", opt.braid_text, "braid word, e.g. \"1 2 1'\"")->required();

  CLI::App* verify = app.add_subcommand("verify", "run randomized verification suites");
  add_type(verify);
  verify->add_option("--suite", opt.suite,
                     "all | crystal-axioms | inverse-pairs | braid-relations | longest-word | "
                     "oracle-agreement | folding | two-ld");
  verify->add_option("--samples", opt.samples, "random samples per suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--depth", opt.depth, "max random-walk length")->check(CLI::PositiveNumber);
  verify->add_option("--seed", opt.seed, "64-bit random seed (printed for reproducibility)");
  verify->add_option("--sigma", opt.sigma, "diagram automorphism for the folding suite");

  CLI::App* orbit = app.add_subcommand(
      "orbit", "labels along the alternating braid orbit of the fundamental elements");
  add_type(orbit);
  orbit->add_option("--count", opt.count, "how many orbit steps")->check(CLI::PositiveNumber);

  CLI::App* fold = app.add_subcommand("fold", "fold by a diagram automorphism");
  add_type(fold);
  fold->add_option("--sigma", opt.sigma, "automorphism as 1-based pairs, e.g. \"1:3,3:1,2:2\"")
      ->required();
  fold->add_option("element", opt.element, "element JSON (optional)");
  fold->add_option("ops", opt.ops, "folded operators 'F j k', 'E j k', 'R j', 'R* j'");

  CLI::App* exp = app.add_subcommand("export-dot", "write the local operator graph as DOT");
  add_type(exp);
  exp->add_option("--radius", opt.radius, "graph radius around the vacuum")
      ->check(CLI::NonNegativeNumber);
  exp->add_option("--window", opt.window, "slot window lo:hi (default 0:1)");
  exp->add_option("--out", opt.out, "output path (default stdout)");

  CLI::App* labels = app.add_subcommand("labels", "affine label of a rank-2 type A element");
  add_type(labels);
  labels->add_option("element", opt.element, "element JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (elem->parsed()) return run_elem(opt);
    if (apply->parsed()) return run_apply(opt);
    if (braid->parsed()) return run_braid(opt);
    if (verify->parsed()) return run_verify(opt);
    if (orbit->parsed()) return run_orbit(opt);
    if (fold->parsed()) return run_fold(opt);
    if (exp->parsed()) return run_export_dot(opt);
    if (labels->parsed()) return run_labels(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
