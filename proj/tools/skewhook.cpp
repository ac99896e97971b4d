// Command-line front end: enumerate, count, verify, map, hg.
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "skewhook/counting.hpp"
#include "skewhook/errors.hpp"
#include "skewhook/excited.hpp"
#include "skewhook/hillman_grassl.hpp"
#include "skewhook/io.hpp"
#include "skewhook/phi.hpp"
#include "skewhook/report.hpp"
#include "skewhook/tableaux.hpp"

using namespace skewhook;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeArgs {
  std::string outer;
  std::string inner;

  SkewShape shape() const {
    try {
      return SkewShape(Partition::parse(outer), Partition::parse(inner));
    } catch (const DomainError& e) {
      throw UsageError(std::string("bad shape: ") + e.what());
    }
  }
};

void add_shape_options(CLI::App* cmd, ShapeArgs& args, bool required) {
  auto* o = cmd->add_option("--outer", args.outer, "outer partition, e.g. 5,5,3,3,2");
  if (required) o->required();
  cmd->add_option("--inner", args.inner, "inner partition (default empty)");
}

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

struct EnumerateArgs {
  std::string what;
  ShapeArgs shape;
  std::string format = "json";
  long long limit = -1;
};

template <class Items, class ToJson, class ToAscii>
void print_items(const Items& items, const EnumerateArgs& a, ToJson to_json, ToAscii to_ascii) {
  long long shown = 0;
  for (const auto& item : items) {
    if (a.limit >= 0 && shown >= a.limit) break;
    ++shown;
    if (a.format == "json")
      std::cout << to_json(item).dump() << '\n';
    else
      std::cout << to_ascii(item) << "\n\n";
  }
  std::cout << "count: " << items.size() << '\n';
}

int run_enumerate(const EnumerateArgs& a) {
  SkewShape s = a.shape.shape();
  if (a.what == "excited") {
    print_items(enumerate_excited(s), a, diagram_to_json,
                [](const ExcitedDiagram& d) { return render_ascii(d); });
  } else if (a.what == "broken") {
    print_items(
        enumerate_excited(s), a, [](const ExcitedDiagram& d) { return Json{{"broken", cells_to_json(d.broken)}}; },
        [](const ExcitedDiagram& d) { return render_ascii(d); });
  } else if (a.what == "ssyt-min") {
    print_items(enumerate_min_via_moves(s), a, tableau_to_json,
                [](const SkewTableau& t) { return render_ascii(t); });
  } else if (a.what == "sf") {
    print_items(enumerate_flagged_skew(s), a, tableau_to_json,
                [](const SkewTableau& t) { return render_ascii(t); });
  } else {
    print_items(enumerate_oot(s), a, mu_tableau_to_json, [](const MuTableau& t) { return render_ascii(t); });
  }
  return kOk;
}

int run_count(const ShapeArgs& args, const std::string& method) {
  SkewShape s = args.shape();
  if (method == "hlf" && !s.inner().empty()) throw UsageError("--method hlf needs an empty --inner");
  if (method == "minimal" && !s.is_connected())
    throw UsageError("--method minimal needs a connected shape");
  if (method == "brute") std::cout << count_syt(s) << '\n';
  if (method == "hlf") std::cout << f_hlf(s.outer()) << '\n';
  if (method == "nhlf") std::cout << f_nhlf(s) << '\n';
  if (method == "oof") std::cout << f_oof(s) << '\n';
  if (method == "minimal") std::cout << f_minimal(s) << '\n';
  if (method != "all") return kOk;

  BigInt brute = count_syt(s);
  bool agree = true;
  auto show = [&](const char* name, const BigInt& v) {
    std::cout << name << ' ' << v << '\n';
    agree = agree && v == brute;
  };
  show("brute", brute);
  if (s.inner().empty()) show("hlf", f_hlf(s.outer()));
  show("nhlf", f_nhlf(s));
  show("oof", f_oof(s));
  if (s.is_connected()) show("minimal", f_minimal(s));
  return agree ? kOk : kFailed;
}

int run_verify(const std::string& suite, const ShapeArgs& args, std::optional<int> sweep,
               const SuiteOptions& opts) {
  if (sweep && !args.outer.empty()) throw UsageError("give either --outer/--inner or --sweep-max-size");
  if (!sweep && args.outer.empty()) throw UsageError("verify needs --outer or --sweep-max-size");
  VerificationReport r = sweep ? run_suite_sweep(suite, *sweep, opts) : run_suite(suite, args.shape(), opts);
  std::cout << report_to_json(r).dump(2) << '\n';
  return r.pass() ? kOk : kFailed;
}

int run_map(const ShapeArgs& args, const std::string& input) {
  Json j = read_json(input);
  try {
    if (j.contains("cells")) {
      if (args.outer.empty()) throw UsageError("mapping a diagram needs --outer/--inner");
      SkewShape s = args.shape();
      std::cout << tableau_to_json(phi(diagram_from_json(j, s))).dump() << '\n';
    } else {
      SkewTableau t = tableau_from_json(j);
      if (!args.outer.empty() && !(args.shape() == t.shape()))
        throw UsageError("tableau shape differs from --outer/--inner");
      std::cout << diagram_to_json(phi_inverse(t)).dump() << '\n';
    }
  } catch (const FormatError& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

int run_hg(const std::string& direction, const std::string& input) {
  Json j = read_json(input);
  Grid g;
  try {
    g = grid_from_json(j);
  } catch (const FormatError& e) {
    throw UsageError(e.what());
  }
  if (direction == "apply")
    std::cout << grid_to_json(hg_forward(RppLambda{g}).values).dump() << '\n';
  else
    std::cout << grid_to_json(hg_inverse(WeightArray{g}).values).dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew shape hook formulas: enumeration, counting and verification"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "list excited diagrams or tableaux");
  enumerate->add_option("kind", en.what)->required()->check(
      CLI::IsMember({"excited", "ssyt-min", "sf", "oot", "broken"}));
  add_shape_options(enumerate, en.shape, true);
  enumerate->add_option("--format", en.format)->check(CLI::IsMember({"json", "ascii"}));
  enumerate->add_option("--limit", en.limit, "print at most N items");

  ShapeArgs count_shape;
  std::string method = "all";
  auto* count = app.add_subcommand("count", "number of standard fillings");
  add_shape_options(count, count_shape, true);
  count->add_option("--method", method)->check(
      CLI::IsMember({"brute", "hlf", "nhlf", "oof", "minimal", "all"}));

  std::string suite;
  ShapeArgs verify_shape;
  std::optional<int> sweep;
  SuiteOptions opts;
  auto* verify = app.add_subcommand("verify", "check an identity and print a JSON report");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  add_shape_options(verify, verify_shape, false);
  verify->add_option("--sweep-max-size", sweep)->check(CLI::Range(1, 12));
  verify->add_option("--degree", opts.degree)->check(CLI::Range(0, 60));
  verify->add_option("--seed", opts.seed);

  ShapeArgs map_shape;
  std::string map_input = "-";
  auto* map = app.add_subcommand("map", "diagram JSON to tableau JSON and back");
  add_shape_options(map, map_shape, false);
  map->add_option("--input", map_input, "JSON file, - for stdin");

  std::string direction, hg_input = "-";
  auto* hg = app.add_subcommand("hg", "Hillman-Grassl on array JSON");
  hg->add_option("direction", direction)->required()->check(CLI::IsMember({"apply", "invert"}));
  hg->add_option("--input", hg_input, "JSON file, - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*enumerate) return run_enumerate(en);
    if (*count) return run_count(count_shape, method);
    if (*verify) return run_verify(suite, verify_shape, sweep, opts);
    if (*map) return run_map(map_shape, map_input);
    if (*hg) return run_hg(direction, hg_input);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedShape& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
