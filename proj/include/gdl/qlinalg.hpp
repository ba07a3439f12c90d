#ifndef GDL_QLINALG_HPP
#define GDL_QLINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "gdl/rational.hpp"

namespace gdl {

/// Sparse rational vector, index -> nonzero coefficient.
using QVec = std::map<int, Rational>;

inline void qvec_axpy(QVec& y, const Rational& a, const QVec& x) {
  if (is_zero(a)) return;
  for (const auto& [i, c] : x) {
    auto [it, fresh] = y.emplace(i, a * c);
    if (!fresh) {
      it->second += a * c;
      if (is_zero(it->second)) y.erase(it);
    }
  }
}

/// Incremental reduced echelon of inserted vectors with representation
/// tracking. Invariant: every stored pivot vector has coefficient 1 at its
/// pivot position and 0 at every other pivot position, so reduction
/// terminates after one elimination per pivot position present.
class QReducer {
public:
  /// Insert a vector. Returns its representation over previously inserted
  /// vectors if dependent, nullopt if it became a new pivot.
  std::optional<QVec> insert(QVec v) {
    QVec combo;
    reduce(v, combo);
    if (v.empty()) {
      ++next_id_;
      dependents_.push_back(std::move(combo));
      dep_ids_.push_back(next_id_ - 1);
      return dependents_.back();
    }
    int pivot = v.begin()->first;
    Rational inv = 1 / v.begin()->second;
    QVec norm;
    for (const auto& [i, c] : v) norm.emplace(i, c * inv);
    QVec expr;
    expr.emplace(next_id_, inv);
    for (const auto& [j, c] : combo) qvec_axpy(expr, -inv, QVec{{j, c}});
    // restore the RREF invariant: remove the new pivot position from all
    // existing pivot vectors.
    for (auto& [pos, entry] : pivots_) {
      auto it = entry.vec.find(pivot);
      if (it == entry.vec.end()) continue;
      Rational a = it->second;
      qvec_axpy(entry.vec, -a, norm);
      qvec_axpy(entry.expr, -a, expr);
    }
    pivots_.emplace(pivot, Entry{std::move(norm), std::move(expr)});
    ++next_id_;
    return std::nullopt;
  }

  /// Express v over the inserted vectors; nullopt if outside the span.
  std::optional<QVec> express(QVec v) const {
    QVec combo;
    reduce(v, combo);
    if (!v.empty()) return std::nullopt;
    return combo;
  }

  /// Canonical residual of v modulo the span.
  QVec residual(QVec v) const {
    QVec combo;
    reduce(v, combo);
    return v;
  }

  bool in_span(const QVec& v) const {
    QVec w = v, combo;
    reduce(w, combo);
    return w.empty();
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  int inserted() const { return next_id_; }

private:
  struct Entry {
    QVec vec;   // pivot coefficient 1, zero at other pivots
    QVec expr;  // vec = sum expr[j] * inserted_j
  };

  void reduce(QVec& v, QVec& combo) const {
    for (;;) {
      const Entry* entry = nullptr;
      Rational a;
      for (const auto& [i, c] : v) {
        auto it = pivots_.find(i);
        if (it != pivots_.end()) {
          entry = &it->second;
          a = c;
          break;
        }
      }
      if (!entry) return;
      qvec_axpy(v, -a, entry->vec);
      qvec_axpy(combo, a, entry->expr);
    }
  }

  std::map<int, Entry> pivots_;
  std::vector<QVec> dependents_;
  std::vector<int> dep_ids_;
  int next_id_ = 0;
};

/// Rank of a set of sparse columns.
inline int qrank(const std::vector<QVec>& cols) {
  QReducer red;
  for (const auto& c : cols) red.insert(c);
  return red.rank();
}

}  // namespace gdl

#endif
