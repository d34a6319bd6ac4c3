#include "osborn/loop_table.hpp"

#include <algorithm>
#include <string>

#include "osborn/errors.hpp"

namespace osborn {

namespace {

std::string axis_name(NotLatinSquare::Axis axis) {
  return axis == NotLatinSquare::Axis::row ? "row" : "column";
}

}  // namespace

NotLatinSquare::NotLatinSquare(Axis axis, std::size_t line, std::size_t value)
    : InputError("not a Latin square: " + axis_name(axis) + " " +
                 std::to_string(line + 1) + " repeats value " +
                 std::to_string(value + 1)),
      axis_(axis),
      line_(line),
      value_(value) {}

SearchBoundExceeded::SearchBoundExceeded(std::size_t n, std::size_t bound)
    : BoundError("order " + std::to_string(n) + " exceeds search bound " +
                 std::to_string(bound)) {}

BudgetExceeded::BudgetExceeded(std::size_t holomorph_order, std::size_t budget)
    : BoundError("holomorph order " + std::to_string(holomorph_order) +
                 " exceeds budget " + std::to_string(budget)),
      order_(holomorph_order) {}

ElementSet::ElementSet(std::size_t n, std::vector<Elem> members)
    : n_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= n)
    throw std::invalid_argument("element set member out of range");
}

ElementSet ElementSet::full(std::size_t n) {
  std::vector<Elem> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Elem>(i);
  return ElementSet(n, std::move(all));
}

bool ElementSet::contains(Elem x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  std::vector<Elem> out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  return ElementSet(n_, std::move(out));
}

Perm LoopTable::left_translation(Elem x) const {
  std::vector<Elem> image(mul_.begin() + x * n_, mul_.begin() + (x + 1) * n_);
  return Perm(std::move(image));
}

Perm LoopTable::right_translation(Elem x) const {
  std::vector<Elem> image(n_);
  for (std::size_t y = 0; y < n_; ++y) image[y] = mul_[y * n_ + x];
  return Perm(std::move(image));
}

std::vector<std::vector<Elem>> LoopTable::rows() const {
  std::vector<std::vector<Elem>> out(n_);
  for (std::size_t x = 0; x < n_; ++x)
    out[x].assign(mul_.begin() + x * n_, mul_.begin() + (x + 1) * n_);
  return out;
}

LoopTable validate_loop(const std::vector<std::vector<Elem>>& raw) {
  const std::size_t n = raw.size();
  std::vector<Elem> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (raw[r].size() != n)
      throw RaggedInput("row " + std::to_string(r + 1) + " has " +
                        std::to_string(raw[r].size()) + " entries, expected " +
                        std::to_string(n));
    cells.insert(cells.end(), raw[r].begin(), raw[r].end());
  }
  return validate_loop_cells(n, std::move(cells));
}

LoopTable validate_loop_cells(std::size_t n, std::vector<Elem> cells) {
  if (n == 0) throw RaggedInput("empty table");
  if (cells.size() != n * n) throw RaggedInput("cell count is not n*n");
  for (Elem v : cells)
    if (v >= n)
      throw InputError("entry " + std::to_string(v + 1) + " out of range 1.." +
                       std::to_string(n));

  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      Elem v = cells[r * n + c];
      if (seen[v]) throw NotLatinSquare(NotLatinSquare::Axis::row, r, v);
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      Elem v = cells[r * n + c];
      if (seen[v]) throw NotLatinSquare(NotLatinSquare::Axis::column, c, v);
      seen[v] = 1;
    }
  }

  std::optional<Elem> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = cells[e * n + x] == x && cells[x * n + e] == x;
    if (ok) identity = static_cast<Elem>(e);
  }
  if (!identity) throw NoIdentity();

  LoopTable L;
  L.n_ = n;
  L.e_ = *identity;
  L.mul_ = std::move(cells);
  L.ldiv_.resize(n * n);
  L.rdiv_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      Elem y = L.mul_[x * n + z];
      L.ldiv_[x * n + y] = static_cast<Elem>(z);  // x * z = y
      L.rdiv_[y * n + z] = static_cast<Elem>(x);  // x * z = y  =>  y / z = x
    }
  return L;
}

std::optional<Triple> first_nonassociative_triple(const LoopTable& L) {
  const auto n = static_cast<Elem>(L.order());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem xy = L.multiply(x, y);
      for (Elem z = 0; z < n; ++z)
        if (L.multiply(xy, z) != L.multiply(x, L.multiply(y, z)))
          return Triple{x, y, z};
    }
  return std::nullopt;
}

bool is_commutative(const LoopTable& L) {
  const auto n = static_cast<Elem>(L.order());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (L.multiply(x, y) != L.multiply(y, x)) return false;
  return true;
}

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

// Backtracking over point images with product propagation: once f(a) and
// f(b) are fixed, f(ab) is forced to f(a)f(b).
class IsoSearch {
 public:
  IsoSearch(const LoopTable& a, const LoopTable& b,
            const std::function<bool(const Perm&)>& visit)
      : a_(a), b_(b), visit_(visit), n_(a.order()),
        map_(n_, kUnset), used_(n_, 0) {}

  void run() {
    std::vector<Elem> trail;
    if (!assign(a_.identity(), b_.identity(), trail)) return;
    recurse();
  }

 private:
  bool assign(Elem x, Elem y, std::vector<Elem>& trail) {
    std::vector<std::pair<Elem, Elem>> queue{{x, y}};
    while (!queue.empty()) {
      auto [p, q] = queue.back();
      queue.pop_back();
      if (map_[p] != kUnset) {
        if (map_[p] != q) return false;
        continue;
      }
      if (used_[q]) return false;
      map_[p] = q;
      used_[q] = 1;
      trail.push_back(p);
      assigned_.push_back(p);
      for (Elem s : assigned_) {
        queue.emplace_back(a_.multiply(p, s), b_.multiply(q, map_[s]));
        queue.emplace_back(a_.multiply(s, p), b_.multiply(map_[s], q));
      }
    }
    return true;
  }

  void undo(std::vector<Elem>& trail) {
    for (Elem p : trail) {
      used_[map_[p]] = 0;
      map_[p] = kUnset;
    }
    assigned_.resize(assigned_.size() - trail.size());
    trail.clear();
  }

  bool recurse() {
    if (assigned_.size() == n_) return visit_(Perm(map_));
    Elem x = 0;
    while (map_[x] != kUnset) ++x;
    for (Elem y = 0; y < n_; ++y) {
      if (used_[y]) continue;
      std::vector<Elem> trail;
      bool ok = assign(x, y, trail);
      bool keep_going = !ok || recurse();
      undo(trail);
      if (!keep_going) return false;
    }
    return true;
  }

  const LoopTable& a_;
  const LoopTable& b_;
  const std::function<bool(const Perm&)>& visit_;
  std::size_t n_;
  std::vector<Elem> map_;
  std::vector<char> used_;
  std::vector<Elem> assigned_;
};

}  // namespace

void for_each_isomorphism(const LoopTable& a, const LoopTable& b,
                          const std::function<bool(const Perm&)>& visit) {
  if (a.order() != b.order()) return;
  IsoSearch(a, b, visit).run();
}

std::optional<Perm> loops_isomorphic(const LoopTable& a, const LoopTable& b) {
  std::optional<Perm> found;
  for_each_isomorphism(a, b, [&](const Perm& f) {
    found = f;
    return false;
  });
  return found;
}

}  // namespace osborn
