#include "skewhook/shape.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "skewhook/errors.hpp"

namespace skewhook {

std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << '(' << c.row << ',' << c.col << ')';
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing: " + to_string());
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return Partition{};
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = trim(text.substr(pos, comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw DomainError("bad partition text: '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i)
    if (other.part(i) > part(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> cols(static_cast<std::size_t>(part(1)), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

int Partition::hook(Cell c) const {
  if (!contains(c)) {
    std::ostringstream os;
    os << "cell " << c << " is outside [" << to_string() << "]";
    throw DomainError(os.str());
  }
  int leg = 0;
  while (c.col <= part(c.row + leg + 1)) ++leg;
  return part(c.row) - c.col + leg + 1;
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
  return out;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw DomainError("inner partition " + inner_.to_string() + " is not contained in " +
                      outer_.to_string());
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= rows(); ++i)
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.push_back({i, j});
  return out;
}

bool SkewShape::is_connected() const {
  const auto all = cells();
  if (all.empty()) return true;
  std::set<Cell> seen{all.front()};
  std::queue<Cell> todo;
  todo.push(all.front());
  while (!todo.empty()) {
    Cell c = todo.front();
    todo.pop();
    for (Cell n : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1},
                   Cell{c.row, c.col + 1}}) {
      if (contains(n) && seen.insert(n).second) todo.push(n);
    }
  }
  return seen.size() == all.size();
}

std::vector<std::pair<int, int>> SkewShape::diagonal_lengths() const {
  std::vector<std::pair<int, int>> out;
  for (Cell c : cells()) {
    auto it = std::find_if(out.begin(), out.end(), [&](auto& e) { return e.first == c.content(); });
    if (it == out.end())
      out.emplace_back(c.content(), 1);
    else
      ++it->second;
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first > b.first; });
  return out;
}

int SkewShape::column_height(int col) const {
  int h = 0;
  for (int i = 1; i <= rows(); ++i)
    if (contains({i, col})) ++h;
  return h;
}

std::string SkewShape::to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

std::ostream& operator<<(std::ostream& os, const SkewShape& s) { return os << s.to_string(); }

std::vector<int> hook_lengths(const Partition& p) {
  std::vector<int> out;
  for (Cell c : p.cells()) out.push_back(p.hook(c));
  return out;
}

Grid::Grid(const Partition& outer, int fill) : outer_(outer) {
  for (int p : outer.parts()) rows_.emplace_back(static_cast<std::size_t>(p), fill);
}

long long Grid::total() const {
  long long t = 0;
  for (auto& r : rows_)
    for (int v : r) t += v;
  return t;
}

bool Grid::all_zero() const {
  for (auto& r : rows_)
    for (int v : r)
      if (v != 0) return false;
  return true;
}

std::vector<Cell> Grid::support() const {
  std::vector<Cell> out;
  for (Cell c : outer_.cells())
    if (at(c) != 0) out.push_back(c);
  return out;
}

}  // namespace skewhook
