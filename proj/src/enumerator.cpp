#include "osborn/enumerator.hpp"

#include <cstdint>

#include "osborn/errors.hpp"
#include "osborn/parallel.hpp"

namespace osborn {

std::string filter_name(LoopFilter f) {
  switch (f) {
    case LoopFilter::osborn: return "osborn";
    case LoopFilter::nonassociative: return "nonassociative";
    case LoopFilter::nontrivial_aum: return "nontrivial-aum";
    case LoopFilter::holomorph_osborn_all_subgroups: return "holomorph-osborn-all-subgroups";
    case LoopFilter::holomorph_osborn_some_subgroup: return "holomorph-osborn-some-subgroup";
  }
  return "?";
}

LoopFilter parse_filter(const std::string& name) {
  for (auto f : {LoopFilter::osborn, LoopFilter::nonassociative, LoopFilter::nontrivial_aum,
                 LoopFilter::holomorph_osborn_all_subgroups,
                 LoopFilter::holomorph_osborn_some_subgroup})
    if (filter_name(f) == name) return f;
  throw InputError("unknown filter '" + name + "'");
}

void check_enum_bounds(const EnumSpec& spec) {
  if (spec.order == 0) throw BoundExceeded("order must be at least 1");
  if (spec.order > kLimitedSweepBound)
    throw BoundExceeded("order " + std::to_string(spec.order) + " exceeds " +
                        std::to_string(kLimitedSweepBound));
  if (spec.order > kFullSweepBound && !spec.limit)
    throw BoundExceeded("order " + std::to_string(spec.order) +
                        " needs --limit (full sweeps stop at " +
                        std::to_string(kFullSweepBound) + ")");
}

namespace {

// Row-major backtracking over the (n-1)^2 free cells of a reduced square,
// values tried in increasing order so output is lexicographic.
class SquareFiller {
 public:
  explicit SquareFiller(std::size_t n) : n_(n), cells_(n * n), row_used_(n), col_used_(n) {
    for (std::size_t i = 0; i < n; ++i) {
      place(0, i, static_cast<Elem>(i));
      if (i) place(i, 0, static_cast<Elem>(i));
    }
  }

  // Fills rows [first_row, n) given rows before it are complete.
  bool fill(std::size_t first_row, const std::function<bool(const std::vector<Elem>&)>& emit) {
    stop_row_ = n_;
    emit_ = &emit;
    return step(first_row, 1);
  }

  // Enumerates completions of a single row, used to split the search.
  void rows_of(std::size_t row, std::vector<std::vector<Elem>>& out) {
    stop_row_ = row + 1;
    std::function<bool(const std::vector<Elem>&)> grab = [&](const std::vector<Elem>& c) {
      out.emplace_back(c.begin() + row * n_, c.begin() + (row + 1) * n_);
      return true;
    };
    emit_ = &grab;
    step(row, 1);
  }

  void set_row(std::size_t row, const std::vector<Elem>& values) {
    for (std::size_t c = 1; c < n_; ++c) place(row, c, values[c]);
  }

 private:
  void place(std::size_t r, std::size_t c, Elem v) {
    cells_[r * n_ + c] = v;
    row_used_[r] |= bit(v);
    col_used_[c] |= bit(v);
  }
  void unplace(std::size_t r, std::size_t c, Elem v) {
    row_used_[r] &= ~bit(v);
    col_used_[c] &= ~bit(v);
  }
  static std::uint32_t bit(Elem v) { return std::uint32_t{1} << v; }

  bool step(std::size_t r, std::size_t c) {
    if (c == n_) {
      ++r;
      c = 1;
    }
    if (r >= stop_row_) return (*emit_)(cells_);
    const std::uint32_t all = (std::uint32_t{1} << n_) - 1;
    for (Elem v = 0; v < n_; ++v) {
      if ((row_used_[r] | col_used_[c]) & bit(v)) continue;
      place(r, c, v);
      bool viable = true;
      // forward check: later cells of this row keep a candidate
      for (std::size_t c2 = c + 1; c2 < n_ && viable; ++c2)
        viable = (all & ~(row_used_[r] | col_used_[c2])) != 0;
      bool keep_going = !viable || step(r, c + 1);
      unplace(r, c, v);
      if (!keep_going) return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<Elem> cells_;
  std::vector<std::uint32_t> row_used_;
  std::vector<std::uint32_t> col_used_;
  std::size_t stop_row_ = 0;
  const std::function<bool(const std::vector<Elem>&)>* emit_ = nullptr;
};

// Relabels a loop with identity 0 so that its identity becomes `e`.
LoopTable move_identity(const LoopTable& L, Elem e) {
  const std::size_t n = L.order();
  auto swap = [&](Elem x) -> Elem { return x == 0 ? e : (x == e ? 0 : x); };
  std::vector<Elem> cells(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) cells[swap(x) * n + swap(y)] = swap(L.multiply(x, y));
  return validate_loop_cells(n, std::move(cells));
}

}  // namespace

void enumerate_normalized(std::size_t order,
                          const std::function<bool(const LoopTable&)>& visit) {
  if (order == 0) return;
  if (order > 31) throw BoundExceeded("order too large for enumeration");
  SquareFiller filler(order);
  std::function<bool(const std::vector<Elem>&)> emit = [&](const std::vector<Elem>& cells) {
    return visit(validate_loop_cells(order, cells));
  };
  filler.fill(1, emit);
}

std::vector<LoopTable> enumerate_loops(const EnumSpec& spec, unsigned jobs) {
  check_enum_bounds(spec);
  const std::size_t n = spec.order;
  std::vector<LoopTable> normalized;
  if (spec.limit && *spec.limit == 0) return normalized;

  if (n <= 2 || spec.limit) {
    const std::size_t cap = spec.limit.value_or(SIZE_MAX);
    enumerate_normalized(n, [&](const LoopTable& L) {
      normalized.push_back(L);
      return normalized.size() < cap;
    });
  } else {
    std::vector<std::vector<Elem>> second_rows;
    SquareFiller(n).rows_of(1, second_rows);
    std::vector<std::vector<LoopTable>> slots(second_rows.size());
    parallel_for(second_rows.size(), jobs, [&](std::size_t i) {
      SquareFiller filler(n);
      filler.set_row(1, second_rows[i]);
      std::function<bool(const std::vector<Elem>&)> emit = [&](const std::vector<Elem>& c) {
        slots[i].push_back(validate_loop_cells(n, c));
        return true;
      };
      filler.fill(2, emit);
    });
    for (auto& s : slots)
      for (auto& L : s) normalized.push_back(std::move(L));
  }

  if (spec.normalized) return normalized;
  std::vector<LoopTable> out;
  for (Elem e = 0; e < n; ++e)
    for (const auto& L : normalized) {
      if (spec.limit && out.size() >= *spec.limit) return out;
      out.push_back(e == 0 ? L : move_identity(L, e));
    }
  return out;
}

}  // namespace osborn
