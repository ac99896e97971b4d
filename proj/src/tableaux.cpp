#include "skewhook/tableaux.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "skewhook/errors.hpp"

namespace skewhook {

SkewTableau::SkewTableau(SkewShape shape) : shape_(std::move(shape)), grid_(shape_.outer()) {}

void SkewTableau::set(Cell c, int value) {
  if (!shape_.contains(c)) {
    std::ostringstream os;
    os << "cell " << c << " is not in " << shape_;
    throw DomainError(os.str());
  }
  grid_.at(c) = value;
}

bool SkewTableau::is_semistandard() const {
  for (Cell c : shape_.cells()) {
    int v = at(c);
    if (v < 0) return false;
    Cell left{c.row, c.col - 1}, up{c.row - 1, c.col};
    if (shape_.contains(left) && at(left) > v) return false;
    if (shape_.contains(up) && at(up) >= v) return false;
  }
  return true;
}

std::vector<int> SkewTableau::entries() const {
  std::vector<int> out;
  for (Cell c : shape_.cells()) out.push_back(at(c));
  return out;
}

SkewTableau minimum_tableau(const SkewShape& s) {
  SkewTableau t(s);
  auto inner_conj = s.inner().conjugate();
  for (Cell c : s.cells()) t.set(c, c.row - inner_conj.part(c.col) - 1);
  return t;
}

SkewTableau excess(const SkewTableau& t) {
  auto t0 = minimum_tableau(t.shape());
  SkewTableau out(t.shape());
  for (Cell c : t.shape().cells()) out.set(c, t.at(c) - t0.at(c));
  return out;
}

namespace {

void require_connected(const SkewShape& s, const char* what) {
  if (!s.is_connected())
    throw UnsupportedShape(std::string(what) + " needs a connected shape, got " + s.to_string());
}

struct FillRules {
  int base = 0;
  std::function<int(Cell)> upper;                           // inclusive
  std::function<bool(Cell, int, const SkewTableau&)> accept;  // optional
  long long max_weight = std::numeric_limits<long long>::max();
};

// Row-major backtracking over the cells of s. Row and column constraints are
// checked against cells already placed (left and above).
void backtrack(const SkewShape& s, const FillRules& rules,
               const std::function<void(const SkewTableau&)>& visit) {
  const auto cells = s.cells();
  // Pointwise lower bound of any filling: base + T_0, so suffix sums prune
  // the weight search.
  auto t0 = minimum_tableau(s);
  std::vector<long long> rest(cells.size() + 1, 0);
  for (std::size_t k = cells.size(); k-- > 0;)
    rest[k] = rest[k + 1] + t0.at(cells[k]) + rules.base;
  if (rest[0] > rules.max_weight) return;

  SkewTableau t(s);
  std::function<void(std::size_t, long long)> step = [&](std::size_t k, long long weight) {
    if (k == cells.size()) {
      visit(t);
      return;
    }
    Cell c = cells[k];
    Cell left{c.row, c.col - 1}, up{c.row - 1, c.col};
    int lo = rules.base;
    if (s.contains(left)) lo = std::max(lo, t.at(left));
    if (s.contains(up)) lo = std::max(lo, t.at(up) + 1);
    long long budget = rules.max_weight - weight - rest[k + 1];
    long long hi = rules.upper ? rules.upper(c) : budget;
    hi = std::min(hi, budget);
    for (long long v = lo; v <= hi; ++v) {
      if (rules.accept && !rules.accept(c, static_cast<int>(v), t)) continue;
      t.set(c, static_cast<int>(v));
      step(k + 1, weight + v);
    }
    t.set(c, 0);
  };
  step(0, 0);
}

std::vector<SkewTableau> collect(const SkewShape& s, const FillRules& rules) {
  std::vector<SkewTableau> out;
  backtrack(s, rules, [&](const SkewTableau& t) { out.push_back(t); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<DeltaMove> active_columns(const SkewTableau& t) {
  require_connected(t.shape(), "active_columns");
  return active_columns(t, lascoux_pragacz(t.shape()));
}

std::vector<DeltaMove> active_columns(const SkewTableau& t, const Decomposition& theta) {
  std::vector<DeltaMove> out;
  for (const auto& strip : theta.strips) {
    for (int col : strip.columns()) {
      auto seg = column_segment(strip, col);
      Cell top = seg.front();
      if (t.at(top) >= theta_height(strip, top.row)) continue;
      SkewTableau next = t;
      for (Cell c : seg) next.set(c, t.at(c) + 1);
      if (next.is_semistandard()) out.push_back({strip.index, col});
    }
  }
  return out;
}

SkewTableau apply_delta(const SkewTableau& t, DeltaMove move) {
  require_connected(t.shape(), "apply_delta");
  return apply_delta(t, move, lascoux_pragacz(t.shape()));
}

SkewTableau apply_delta(const SkewTableau& t, DeltaMove move, const Decomposition& theta) {
  auto active = active_columns(t, theta);
  if (std::find(active.begin(), active.end(), move) == active.end()) {
    std::ostringstream os;
    os << "column segment (strip " << move.strip << ", column " << move.col << ") is not active";
    throw PreconditionError(os.str());
  }
  const auto& strip = theta.strips.at(static_cast<std::size_t>(move.strip - 1));
  SkewTableau next = t;
  for (Cell c : column_segment(strip, move.col)) next.set(c, t.at(c) + 1);
  return next;
}

std::vector<SkewTableau> enumerate_min_via_moves(const SkewShape& s) {
  require_connected(s, "enumerate_min_via_moves");
  auto theta = lascoux_pragacz(s);
  std::set<std::vector<int>> seen;
  std::deque<SkewTableau> todo{minimum_tableau(s)};
  std::vector<SkewTableau> out;
  seen.insert(todo.front().entries());
  while (!todo.empty()) {
    SkewTableau t = std::move(todo.front());
    todo.pop_front();
    for (DeltaMove m : active_columns(t, theta)) {
      auto next = apply_delta(t, m, theta);
      if (seen.insert(next.entries()).second) todo.push_back(std::move(next));
    }
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SkewTableau> enumerate_min_via_characterization(const SkewShape& s) {
  require_connected(s, "enumerate_min_via_characterization");
  auto theta = lascoux_pragacz(s);
  FillRules rules;
  rules.upper = [&](Cell c) {
    const auto& strip = theta.strips[static_cast<std::size_t>(theta.strip_of(c) - 1)];
    return theta_height(strip, c.row);
  };
  rules.accept = [&](Cell c, int v, const SkewTableau& t) {
    Cell up{c.row - 1, c.col};
    int k = theta.strip_of(c);
    if (s.contains(up) && theta.strip_of(up) == k) return v == t.at(up) + 1;
    return true;
  };
  return collect(s, rules);
}

bool is_minimal(const SkewTableau& t) {
  require_connected(t.shape(), "is_minimal");
  return is_minimal(t, lascoux_pragacz(t.shape()));
}

bool is_minimal(const SkewTableau& t, const Decomposition& theta) {
  if (!t.is_semistandard()) return false;
  for (const auto& strip : theta.strips) {
    for (Cell c : strip.cells) {
      if (t.at(c) > theta_height(strip, c.row)) return false;
      Cell down{c.row + 1, c.col};
      if (strip.contains(down) && t.at(down) - t.at(c) != 1) return false;
    }
  }
  return true;
}

std::vector<SkewTableau> enumerate_flagged_skew(const SkewShape& s) {
  FillRules rules;
  rules.upper = [](Cell c) { return c.row - 1; };
  return collect(s, rules);
}

std::vector<MuTableau> enumerate_oot(const SkewShape& s) {
  const int d = s.rows();
  const auto& outer = s.outer();
  SkewShape mu_shape(s.inner());
  FillRules rules;
  rules.base = 1;
  rules.upper = [d](Cell) { return d; };
  rules.accept = [&](Cell c, int v, const SkewTableau&) {
    return c.content() < outer.part(d + 1 - v);
  };
  std::vector<MuTableau> out;
  backtrack(mu_shape, rules, [&](const SkewTableau& t) { out.push_back({s.inner(), t.grid()}); });
  std::sort(out.begin(), out.end(),
            [](const MuTableau& a, const MuTableau& b) { return a.grid < b.grid; });
  return out;
}

BigInt count_syt(const SkewShape& s) {
  const auto& inner = s.inner();
  std::map<std::vector<int>, BigInt> memo;
  std::function<BigInt(const std::vector<int>&)> f = [&](const std::vector<int>& nu) -> BigInt {
    auto it = memo.find(nu);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    bool at_bottom = true;
    for (std::size_t i = 0; i < nu.size(); ++i) {
      int below = i + 1 < nu.size() ? nu[i + 1] : 0;
      int floor = inner.part(static_cast<int>(i) + 1);
      if (nu[i] > floor) {
        at_bottom = false;
        if (nu[i] > below) {
          auto smaller = nu;
          --smaller[i];
          total += f(smaller);
        }
      }
    }
    if (at_bottom) total = 1;
    memo.emplace(nu, total);
    return total;
  };
  std::vector<int> start(s.outer().parts().begin(), s.outer().parts().end());
  return f(start);
}

void for_each_bounded_ssyt(const SkewShape& s, int max_weight,
                           const std::function<void(const SkewTableau&)>& visit) {
  if (max_weight < 0) throw DomainError("max weight must be nonnegative");
  FillRules rules;
  rules.max_weight = max_weight;
  backtrack(s, rules, visit);
}

std::vector<SkewTableau> enumerate_bounded_ssyt(const SkewShape& s, int max_weight) {
  std::vector<SkewTableau> out;
  for_each_bounded_ssyt(s, max_weight, [&](const SkewTableau& t) { out.push_back(t); });
  std::sort(out.begin(), out.end());
  return out;
}

long long minimum_weight(const SkewShape& s) { return minimum_tableau(s).weight(); }

}  // namespace skewhook
