#ifndef GDL_MATRIX_HPP
#define GDL_MATRIX_HPP

#include <vector>

#include "gdl/free_element.hpp"

namespace gdl {

/// Dense matrix with polynomial entries. Columns act on the source free
/// module's basis: column c is the image of the c-th source generator.
class PolyMatrix {
public:
  PolyMatrix(ContextPtr ctx, int rows, int cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, Polynomial(ctx_)) {}

  const ContextPtr& context() const { return ctx_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Polynomial& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  Polynomial& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    for (const auto& p : a_)
      if (!p.is_zero()) return false;
    return true;
  }

  PolyMatrix transpose() const {
    PolyMatrix t(ctx_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  PolyMatrix operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw InternalError("matrix shape mismatch in product");
    PolyMatrix p(ctx_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int k = 0; k < cols_; ++k) {
        if (at(r, k).is_zero()) continue;
        for (int c = 0; c < o.cols_; ++c) {
          if (o.at(k, c).is_zero()) continue;
          p.at(r, c) += at(r, k) * o.at(k, c);
        }
      }
    return p;
  }

  PolyMatrix scaled(const Rational& s) const {
    PolyMatrix p(ctx_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) p.a_[i] = a_[i] * s;
    return p;
  }

  PolyMatrix sign_twist() const {
    PolyMatrix p(ctx_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) p.a_[i] = a_[i].sign_twist();
    return p;
  }

  bool operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  FreeElement column(int c) const {
    FreeElement e(ctx_);
    for (int r = 0; r < rows_; ++r)
      if (!at(r, c).is_zero()) e.set_component(r, at(r, c));
    return e;
  }

  void set_column(int c, const FreeElement& e) {
    for (int r = 0; r < rows_; ++r) at(r, c) = Polynomial(ctx_);
    for (const auto& [r, p] : e.components()) {
      if (r < 0 || r >= rows_) throw InternalError("column component out of range");
      at(r, c) = p;
    }
  }

  std::vector<FreeElement> columns() const {
    std::vector<FreeElement> v;
    v.reserve(cols_);
    for (int c = 0; c < cols_; ++c) v.push_back(column(c));
    return v;
  }

  static PolyMatrix from_columns(ContextPtr ctx, int rows,
                                 const std::vector<FreeElement>& cols) {
    PolyMatrix m(std::move(ctx), rows, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) m.set_column(static_cast<int>(c), cols[c]);
    return m;
  }

private:
  ContextPtr ctx_;
  int rows_, cols_;
  std::vector<Polynomial> a_;
};

}  // namespace gdl

#endif
