#pragma once

// Sparse vectors and row reduction over an exact field.
//
// Column 0 is the largest hat element, so the pivot of a row (its smallest
// column) is its leading term in hat order.

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lieforge {

template <class T>
using SparseVec = std::vector<std::pair<std::uint32_t, T>>;

// Sorts by column, merges repeated columns and drops zeros.
template <class F>
SparseVec<typename F::value_type> combine(const F& f, SparseVec<typename F::value_type> raw) {
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<typename F::value_type> out;
  out.reserve(raw.size());
  for (auto& [col, c] : raw) {
    if (!out.empty() && out.back().first == col) {
      out.back().second = f.add(out.back().second, c);
    } else {
      if (!out.empty() && f.isZero(out.back().second)) out.pop_back();
      out.emplace_back(col, std::move(c));
    }
  }
  if (!out.empty() && f.isZero(out.back().second)) out.pop_back();
  return out;
}

// a + s * b
template <class F>
SparseVec<typename F::value_type> addScaled(const F& f, const SparseVec<typename F::value_type>& a,
                                            const typename F::value_type& s,
                                            const SparseVec<typename F::value_type>& b) {
  using T = typename F::value_type;
  SparseVec<T> out;
  if (f.isZero(s)) return a;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f.mul(s, b[j].second));
      ++j;
    } else {
      T v = f.add(a[i].second, f.mul(s, b[j].second));
      if (!f.isZero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
SparseVec<typename F::value_type> scaled(const F& f, const typename F::value_type& s,
                                         SparseVec<typename F::value_type> v) {
  if (f.isZero(s)) return {};
  for (auto& e : v) e.second = f.mul(s, e.second);
  return v;
}

template <class F>
struct ReductionRule {
  std::uint32_t lead;
  SparseVec<typename F::value_type> rhs;  // lead -> rhs, all columns > lead
};

// Fully inter-reduced row echelon form. Rows are sorted by pivot column and
// each pivot has coefficient one and is absent from every other row.
template <class F>
struct Echelon {
  std::vector<SparseVec<typename F::value_type>> rows;

  std::size_t rank() const { return rows.size(); }

  std::vector<std::uint32_t> pivots() const {
    std::vector<std::uint32_t> p;
    p.reserve(rows.size());
    for (const auto& r : rows) p.push_back(r.front().first);
    return p;
  }

  // Columns in [0, columns) that are not pivots, ascending.
  std::vector<std::uint32_t> survivors(std::size_t columns) const {
    std::vector<bool> isPivot(columns, false);
    for (const auto& r : rows) isPivot[r.front().first] = true;
    std::vector<std::uint32_t> s;
    for (std::uint32_t c = 0; c < columns; ++c)
      if (!isPivot[c]) s.push_back(c);
    return s;
  }

  std::vector<ReductionRule<F>> rules(const F& f) const {
    std::vector<ReductionRule<F>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
      ReductionRule<F> rule{r.front().first, {}};
      for (std::size_t k = 1; k < r.size(); ++k) rule.rhs.emplace_back(r[k].first, f.neg(r[k].second));
      out.push_back(std::move(rule));
    }
    return out;
  }
};

// Deterministic in the order of the input rows.
template <class F>
Echelon<F> gaussReduce(const F& f, std::span<const SparseVec<typename F::value_type>> input,
                       std::size_t columns) {
  using T = typename F::value_type;
  std::vector<SparseVec<T>> rows;
  std::vector<std::int32_t> pivotRow(columns, -1);
  std::vector<T> acc(columns, f.zero());
  std::vector<char> touched(columns, 0);
  std::vector<std::uint32_t> support;

  for (const auto& in : input) {
    if (in.empty()) continue;
    support.clear();
    for (const auto& [c, v] : in) {
      acc[c] = f.add(acc[c], v);
      if (!touched[c]) {
        touched[c] = 1;
        support.push_back(c);
      }
    }
    // Pivot rows are inter-reduced, so clearing the input's own pivot
    // entries in one pass cannot reintroduce another pivot column.
    for (const auto& [c, v] : in) {
      (void)v;
      if (pivotRow[c] < 0 || f.isZero(acc[c])) continue;
      T s = f.neg(acc[c]);
      for (const auto& [pc, pv] : rows[pivotRow[c]]) {
        acc[pc] = f.add(acc[pc], f.mul(s, pv));
        if (!touched[pc]) {
          touched[pc] = 1;
          support.push_back(pc);
        }
      }
    }
    std::sort(support.begin(), support.end());
    SparseVec<T> reduced;
    for (std::uint32_t c : support) {
      if (!f.isZero(acc[c])) reduced.emplace_back(c, std::move(acc[c]));
      acc[c] = f.zero();
      touched[c] = 0;
    }
    if (reduced.empty()) continue;

    const std::uint32_t lead = reduced.front().first;
    T scale = f.inv(reduced.front().second);
    for (auto& e : reduced) e.second = f.mul(scale, e.second);

    for (auto& r : rows) {
      auto it = std::lower_bound(r.begin(), r.end(), lead,
                                 [](const auto& e, std::uint32_t c) { return e.first < c; });
      if (it == r.end() || it->first != lead) continue;
      T s = f.neg(it->second);
      r = addScaled(f, r, s, reduced);
    }
    pivotRow[lead] = static_cast<std::int32_t>(rows.size());
    rows.push_back(std::move(reduced));
  }

  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
  return Echelon<F>{std::move(rows)};
}

template <class F>
std::size_t rankOf(const F& f, std::span<const SparseVec<typename F::value_type>> rows,
                   std::size_t columns) {
  return gaussReduce(f, rows, columns).rank();
}

}  // namespace lieforge
