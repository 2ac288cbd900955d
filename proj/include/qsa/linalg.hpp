#pragma once

// Sparse exact linear algebra over Q(q).
//
// Vectors are ordered maps Key -> Scalar without zero entries. Echelon keeps
// rows whose pivot is their smallest key with pivot coefficient 1; incoming
// vectors are reduced in increasing key order, so only the blocks a vector
// actually touches are visited.

#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qsa/scalar.hpp"

namespace qsa {

template <class Key, class Less = std::less<Key>>
using SparseVec = std::map<Key, Scalar, Less>;

template <class Key, class Less>
void axpy(SparseVec<Key, Less>& y, const Scalar& a, const SparseVec<Key, Less>& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * v);
    } else {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

template <class Key, class Less = std::less<Key>>
class Echelon {
 public:
  using Vec = SparseVec<Key, Less>;
  using Combo = std::map<std::size_t, Scalar>;

  /// Without tracking, rows carry no input combinations and insert() cannot
  /// report kernel vectors; spans and membership are cheaper.
  explicit Echelon(bool track_combos = true) : track_(track_combos) {}

  struct Row {
    Vec vec;
    Combo combo;  // which inserted inputs this row is made of
  };

  /// Reduce v against the current rows. Returns the residual; when combo is
  /// given it is updated alongside (residual = sum combo[i] * input_i).
  Vec reduce(Vec v, Combo* combo = nullptr) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Key k = it->first;
      const Scalar f = -it->second;
      axpy(v, f, row->second.vec);
      if (combo) axpy_combo(*combo, f, row->second.combo);
      it = v.upper_bound(k);
    }
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Insert v (tagged as input number `tag`). Returns true if it was
  /// independent of the current rows. If dependent, `kernel` (when given)
  /// receives the combination of inputs that vanishes.
  bool insert(const Vec& v, std::size_t tag, Combo* kernel = nullptr) {
    Combo combo;
    if (track_) combo.emplace(tag, Scalar(1));
    Vec r = reduce(v, track_ ? &combo : nullptr);
    if (r.empty()) {
      if (kernel) *kernel = std::move(combo);
      return false;
    }
    const Scalar inv = r.begin()->second.inverse();
    for (auto& [k, c] : r) c *= inv;
    for (auto& [k, c] : combo) c *= inv;
    const Key pivot = r.begin()->first;
    rows_.emplace(pivot, Row{std::move(r), std::move(combo)});
    return true;
  }

  bool insert(const Vec& v) {
    return insert(v, counter_++, nullptr);
  }

  std::size_t rank() const { return rows_.size(); }
  const std::map<Key, Row, Less>& rows() const { return rows_; }

 private:
  static void axpy_combo(Combo& y, const Scalar& a, const Combo& x) {
    for (const auto& [k, v] : x) {
      auto it = y.find(k);
      if (it == y.end()) {
        y.emplace(k, a * v);
      } else {
        it->second += a * v;
        if (it->second.is_zero()) y.erase(it);
      }
    }
  }

  std::map<Key, Row, Less> rows_;
  std::size_t counter_ = 0;
  bool track_ = true;
};

/// Kernel of the linear map sending basis vector i to images[i], as
/// coefficient vectors over the input indices.
template <class Key, class Less>
std::vector<std::map<std::size_t, Scalar>> kernel(const std::vector<SparseVec<Key, Less>>& images) {
  Echelon<Key, Less> ech;
  std::vector<std::map<std::size_t, Scalar>> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::map<std::size_t, Scalar> k;
    if (!ech.insert(images[i], i, &k)) out.push_back(std::move(k));
  }
  return out;
}

/// Reduced row echelon form of a family of vectors (pivot = smallest key,
/// pivot coefficient 1, pivot columns cleared in every other row). Gives a
/// canonical basis of the span.
template <class Key, class Less>
std::vector<SparseVec<Key, Less>> reduced_basis(const std::vector<SparseVec<Key, Less>>& vs) {
  Echelon<Key, Less> ech(false);
  for (const auto& v : vs) ech.insert(v);
  std::vector<SparseVec<Key, Less>> rows;
  for (const auto& [pivot, row] : ech.rows()) rows.push_back(row.vec);
  // Back substitution, last pivot first.
  for (std::size_t i = rows.size(); i-- > 0;) {
    const Key pivot = rows[i].begin()->first;
    for (std::size_t j = 0; j < i; ++j) {
      auto it = rows[j].find(pivot);
      if (it != rows[j].end()) {
        const Scalar f = -it->second;
        axpy(rows[j], f, rows[i]);
      }
    }
  }
  return rows;
}

}  // namespace qsa
