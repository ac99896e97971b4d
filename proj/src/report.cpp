#include "skewhook/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "skewhook/counting.hpp"
#include "skewhook/errors.hpp"
#include "skewhook/excited.hpp"
#include "skewhook/hillman_grassl.hpp"
#include "skewhook/phi.hpp"
#include "skewhook/strips.hpp"
#include "skewhook/sweep.hpp"
#include "skewhook/tableaux.hpp"

namespace skewhook {

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["suite"] = r.suite;
  if (r.shape)
    j["shape"] = shape_to_json(*r.shape);
  else
    j["sweep_max_size"] = r.sweep_max_size;
  j["checked"] = r.checked;
  j["skipped"] = r.skipped;
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"case", f.case_id}, {"expected", f.expected}, {"actual", f.actual}});
  j["failures"] = failures;
  j["elapsed_ms"] = r.elapsed_ms;
  j["pass"] = r.pass();
  return j;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  try {
    r.suite = j.at("suite").get<std::string>();
    if (j.contains("shape")) r.shape = shape_from_json(j.at("shape"));
    if (j.contains("sweep_max_size")) r.sweep_max_size = j.at("sweep_max_size").get<int>();
    r.checked = j.at("checked").get<long long>();
    r.skipped = j.at("skipped").get<long long>();
    for (const auto& f : j.at("failures"))
      r.failures.push_back({f.at("case").get<std::string>(), f.at("expected").get<std::string>(),
                            f.at("actual").get<std::string>()});
    r.elapsed_ms = j.at("elapsed_ms").get<long long>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad report: ") + e.what());
  }
  return r;
}

namespace {

struct Outcome {
  long long checked = 0;
  long long skipped = 0;
  std::vector<CaseFailure> failures;

  void expect(bool ok, std::string id, std::string expected, std::string actual) {
    ++checked;
    if (!ok) failures.push_back({std::move(id), std::move(expected), std::move(actual)});
  }
};

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string cells_str(const std::vector<Cell>& cells) { return cells_to_json(cells).dump(); }

// Row-major fillings of [λ] with entries 0..max_entry accepted cell by cell.
void for_each_filling(const Partition& outer, int max_entry,
                      const std::function<bool(const Grid&, Cell, int)>& allowed,
                      const std::function<void(const Grid&)>& visit) {
  auto cells = outer.cells();
  Grid g(outer);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      visit(g);
      return;
    }
    for (int v = 0; v <= max_entry; ++v) {
      if (!allowed(g, cells[k], v)) continue;
      g.at(cells[k]) = v;
      rec(k + 1);
    }
    g.at(cells[k]) = 0;
  };
  rec(0);
}

void gamma_theta(const SkewShape& s, const SuiteOptions&, Outcome& out) {
  auto r = verify_gamma_theta(s);
  out.checked += r.checked;
  for (const auto& f : r.failures)
    out.failures.push_back({"strip " + std::to_string(f.index), "epsilon " + std::to_string(f.epsilon),
                            "gamma starts at " + str(f.gamma_start) + ", theta at " + str(f.theta_start)});
}

void commutation(const SkewShape& s, const SuiteOptions&, Outcome& out) {
  auto r = verify_commutation(s);
  out.checked += r.checked;
  for (const auto& f : r.failures)
    out.failures.push_back({"D=" + cells_str(f.diagram) + " u=" + str(f.move), "commuting square", f.reason});
}

void bijection(const SkewShape& s, const SuiteOptions&, Outcome& out) {
  auto minimal = enumerate_min_via_moves(s);
  auto diagrams = enumerate_excited(s);
  out.expect(minimal.size() == diagrams.size(), "sizes", std::to_string(diagrams.size()),
             std::to_string(minimal.size()));
  std::set<std::vector<int>> targets, images;
  for (const auto& t : minimal) targets.insert(t.entries());
  for (const auto& d : diagrams) {
    const std::string id = "D=" + cells_str(d.cells);
    try {
      check_consistency(d);
      out.expect(true, id, "", "");
    } catch (const StructuralError& e) {
      out.expect(false, id, "consistent state", e.what());
    }
    auto t = phi(d);
    out.expect(targets.count(t.entries()) == 1, id + " phi", "minimal tableau", tableau_to_json(t).dump());
    out.expect(images.insert(t.entries()).second, id + " phi", "distinct image", tableau_to_json(t).dump());
    auto back = phi_inverse(t);
    out.expect(back.cells == d.cells, id + " inverse", cells_str(d.cells), cells_str(back.cells));
  }
  for (const auto& t : minimal) {
    auto again = phi(phi_inverse(t));
    out.expect(again == t, "T=" + tableau_to_json(t)["rows"].dump(), tableau_to_json(t).dump(),
               tableau_to_json(again).dump());
  }
}

void characterization(const SkewShape& s, const SuiteOptions&, Outcome& out) {
  auto closure = enumerate_min_via_moves(s);
  auto direct = enumerate_min_via_characterization(s);
  std::set<std::vector<int>> a, b;
  for (const auto& t : closure) a.insert(t.entries());
  for (const auto& t : direct) b.insert(t.entries());
  out.expect(a == b, "sets", std::to_string(a.size()) + " closure tableaux",
             std::to_string(b.size()) + " characterized tableaux");
  for (const auto& t : closure)
    out.expect(is_minimal(t), "T=" + tableau_to_json(t)["rows"].dump(), "minimal", "not minimal");
}

void phi_hg(const SkewShape& s, const SuiteOptions&, Outcome& out) {
  auto r = verify_phi_vs_hg(s);
  out.checked += r.checked;
  for (const auto& f : r.failures) out.failures.push_back({f.case_id, f.expected, f.actual});
}

void additivity(const SkewShape& s, const SuiteOptions&, Outcome& out) {
  auto r = verify_additivity(s);
  out.checked += r.checked;
  for (const auto& f : r.failures) out.failures.push_back({f.case_id, f.expected, f.actual});
}

void restricted_hg(const SkewShape& s, const SuiteOptions& opts, Outcome& out) {
  auto allowed = [&](const Grid& g, Cell c, int v) {
    if (!s.contains(c)) return v == 0;
    Cell left{c.row, c.col - 1}, up{c.row - 1, c.col};
    if (s.contains(left) && g.at(left) > v) return false;
    if (s.contains(up) && g.at(up) >= v) return false;
    return true;
  };
  for_each_filling(s.outer(), opts.max_entry, allowed, [&](const Grid& g) {
    const std::string id = "T=" + to_string(g);
    RppLambda p{g};
    auto a = hg_forward(p);
    out.expect(hg_inverse(a) == p, id + " round trip", to_string(g), to_string(hg_inverse(a).values));
    out.expect(a.hook_weight() == p.size(), id + " weight", std::to_string(p.size()),
               std::to_string(a.hook_weight()));
    try {
      classify_restricted(a, s);
      out.expect(true, id, "", "");
    } catch (const StructuralError& e) {
      out.expect(false, id + " classification", "one excited diagram", e.what());
    }
  });
}

void hg_roundtrip(const SkewShape& s, const SuiteOptions& opts, Outcome& out) {
  if (!s.inner().empty()) throw UnsupportedShape("hg-roundtrip runs on straight shapes");
  const auto& outer = s.outer();
  auto rpp = [](const Grid& g, Cell c, int v) {
    Cell left{c.row, c.col - 1}, up{c.row - 1, c.col};
    return (c.col == 1 || g.at(left) <= v) && (c.row == 1 || g.at(up) <= v);
  };
  for_each_filling(outer, opts.max_entry, rpp, [&](const Grid& g) {
    RppLambda p{g};
    auto a = hg_forward(p);
    out.expect(hg_inverse(a) == p, "pi=" + to_string(g), to_string(g), to_string(hg_inverse(a).values));
    out.expect(a.hook_weight() == p.size(), "pi=" + to_string(g) + " weight", std::to_string(p.size()),
               std::to_string(a.hook_weight()));
  });
  auto any = [](const Grid&, Cell, int) { return true; };
  for_each_filling(outer, opts.max_entry, any, [&](const Grid& g) {
    WeightArray a{g};
    auto p = hg_inverse(a);
    out.expect(p.is_valid(), "A=" + to_string(g) + " rpp", "reverse plane partition", to_string(p.values));
    out.expect(hg_forward(p) == a, "A=" + to_string(g), to_string(g), to_string(hg_forward(p).values));
    out.expect(a.hook_weight() == p.size(), "A=" + to_string(g) + " weight",
               std::to_string(a.hook_weight()), std::to_string(p.size()));
  });
}

// Random reverse plane partitions and arrays on λ; the stream depends on the
// seed and on λ only.
void hg_random(const SkewShape& s, const SuiteOptions& opts, Outcome& out) {
  if (!s.inner().empty()) throw UnsupportedShape("hg-random runs on straight shapes");
  const auto& outer = s.outer();
  unsigned key = 17;
  for (int part : outer.parts()) key = key * 31 + static_cast<unsigned>(part);
  std::seed_seq seq{opts.seed, key};
  std::mt19937 rng(seq);
  std::uniform_int_distribution<int> entry(0, 6);
  for (int k = 0; k < 200; ++k) {
    Grid g(outer);
    for (Cell c : outer.cells()) {
      int v = entry(rng);
      if (c.col > 1) v = std::max(v, g.at({c.row, c.col - 1}));
      if (c.row > 1) v = std::max(v, g.at({c.row - 1, c.col}));
      g.at(c) = v;
    }
    RppLambda p{g};
    auto a = hg_forward(p);
    out.expect(hg_inverse(a) == p && a.hook_weight() == p.size(), "pi=" + to_string(g), to_string(g),
               to_string(hg_inverse(a).values));
    WeightArray b{Grid(outer)};
    for (Cell c : outer.cells()) b.values.at(c) = entry(rng) / 3;
    auto rho = hg_inverse(b);
    out.expect(rho.is_valid() && hg_forward(rho) == b && b.hook_weight() == rho.size(),
               "A=" + to_string(b.values), to_string(b.values), to_string(hg_forward(rho).values));
  }
}

void formulas(const SkewShape& s, const SuiteOptions&, Outcome& out) {
  BigInt brute = count_syt(s);
  const std::string b = brute.str();
  out.expect(f_nhlf(s) == brute, "nhlf", b, f_nhlf(s).str());
  out.expect(f_oof(s) == brute, "oof", b, f_oof(s).str());
  if (s.is_connected()) out.expect(f_minimal(s) == brute, "minimal", b, f_minimal(s).str());
  if (s.inner().empty()) out.expect(f_hlf(s.outer()) == brute, "hlf", b, f_hlf(s.outer()).str());
}

int degree_or(const SuiteOptions& opts, int fallback) { return opts.degree >= 0 ? opts.degree : fallback; }

void qnhlf(const SkewShape& s, const SuiteOptions& opts, Outcome& out) {
  int n = degree_or(opts, 12);
  auto lhs = skew_schur_q_lhs(s, n), rhs = qnhlf_rhs(s, n);
  out.expect(lhs == rhs, "degree " + std::to_string(n), lhs.to_string(), rhs.to_string());
}

void littlewood(const SkewShape& s, const SuiteOptions& opts, Outcome& out) {
  if (!s.inner().empty()) throw UnsupportedShape("littlewood runs on straight shapes");
  int n = degree_or(opts, 15);
  auto lw = littlewood_q(s.outer(), n);
  auto lhs = skew_schur_q_lhs(s, n);
  out.expect(lw == lhs, "bounded ssyt, degree " + std::to_string(n), lhs.to_string(), lw.to_string());
  auto rhs = qnhlf_rhs(s, n);
  out.expect(lw == rhs, "excited sum, degree " + std::to_string(n), lw.to_string(), rhs.to_string());
}

void leading(const SkewShape& s, const SuiteOptions&, Outcome& out) {
  if (!s.is_connected()) throw UnsupportedShape("leading-terms needs a connected shape");
  auto [lhs, rhs] = leading_terms(s);
  out.expect(lhs == rhs, "minimal vs excited", lhs.to_string(), rhs.to_string());
  auto hw = excited_array_weights(s);
  out.expect(lhs == hw, "minimal vs array hook weights", lhs.to_string(), hw.to_string());
}

void term_count(const SkewShape& s, const SuiteOptions&, Outcome& out) {
  auto tc = term_counts(s);
  const std::string counts = "ED=" + std::to_string(tc.excited) + " OOT=" + std::to_string(tc.oot);
  out.expect(tc.excited <= tc.oot, "ED <= OOT", "ED <= OOT", counts);
  out.expect((tc.excited == tc.oot) == tc.slim, "equality iff slim",
             tc.slim ? "equal counts" : "strict inequality", counts);
  if (tc.slim) {
    BigInt hc = hook_content_count(s);
    out.expect(hc == tc.excited, "hook-content", std::to_string(tc.excited), hc.str());
  }
}

using SuiteFn = void (*)(const SkewShape&, const SuiteOptions&, Outcome&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table{
      {"gamma-theta", gamma_theta},   {"commutation", commutation},
      {"bijection", bijection},       {"characterization", characterization},
      {"phi-hg", phi_hg},             {"restricted-hg", restricted_hg},
      {"hg-roundtrip", hg_roundtrip}, {"hg-random", hg_random},
      {"additivity", additivity},
      {"formulas", formulas},         {"qnhlf", qnhlf},
      {"littlewood", littlewood},     {"leading-terms", leading},
      {"term-counts", term_count},
  };
  return table;
}

SuiteFn lookup(const std::string& suite) {
  auto it = suite_table().find(suite);
  if (it == suite_table().end()) throw DomainError("unknown suite " + suite);
  return it->second;
}

Outcome run_one(SuiteFn fn, const SkewShape& s, const SuiteOptions& opts) {
  Outcome out;
  try {
    fn(s, opts, out);
  } catch (const UnsupportedShape&) {
    out.skipped = 1;
  } catch (const std::exception& e) {
    out.failures.push_back({"exception", "no error", e.what()});
    ++out.checked;
  }
  return out;
}

long long since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "gamma-theta",   "commutation", "bijection",  "characterization", "phi-hg",
      "restricted-hg", "hg-roundtrip", "hg-random", "additivity", "formulas",         "qnhlf",
      "littlewood",    "leading-terms", "term-counts"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const SkewShape& s, const SuiteOptions& opts) {
  auto fn = lookup(suite);
  auto start = std::chrono::steady_clock::now();
  Outcome out = run_one(fn, s, opts);
  VerificationReport r;
  r.suite = suite;
  r.shape = s;
  r.checked = out.checked;
  r.skipped = out.skipped;
  r.failures = std::move(out.failures);
  r.elapsed_ms = since(start);
  return r;
}

VerificationReport run_suite_sweep(const std::string& suite, int max_size, const SuiteOptions& opts) {
  auto fn = lookup(suite);
  auto start = std::chrono::steady_clock::now();
  SweepOptions sweep;
  sweep.max_size = max_size;
  sweep.straight_only = suite == "littlewood" || suite == "hg-roundtrip" || suite == "hg-random";
  auto shapes = sweep_shapes(sweep);
  auto outcomes = parallel_map<Outcome>(shapes.size(), [&](std::size_t i) { return run_one(fn, shapes[i], opts); });
  VerificationReport r;
  r.suite = suite;
  r.sweep_max_size = max_size;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    r.checked += outcomes[i].checked;
    r.skipped += outcomes[i].skipped;
    for (auto& f : outcomes[i].failures)
      r.failures.push_back({shapes[i].to_string() + " " + f.case_id, f.expected, f.actual});
  }
  r.elapsed_ms = since(start);
  return r;
}

}  // namespace skewhook
