#ifndef GDL_MONOMIAL_HPP
#define GDL_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "gdl/context.hpp"

namespace gdl {

/// A monomial: exponent vector over a context, base variables first.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(int total_vars) : exps_(total_vars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  int size() const { return static_cast<int>(exps_.size()); }
  int operator[](int i) const { return exps_[i]; }
  int& operator[](int i) { return exps_[i]; }
  const std::vector<int>& exps() const { return exps_; }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }

  int total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  /// Grading degree: sum of fiber-variable exponents.
  int xi_degree(const Context& ctx) const {
    int d = 0;
    for (int i = ctx.base_vars(); i < ctx.total_vars(); ++i) d += exps_[i];
    return d;
  }

  /// Degree in the base variables only.
  int x_degree(const Context& ctx) const {
    int d = 0;
    for (int i = 0; i < ctx.base_vars(); ++i) d += exps_[i];
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// Quotient o / this; caller must ensure divisibility.
  Monomial quotient_into(const Monomial& o) const {
    Monomial r(o);
    for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

private:
  std::vector<int> exps_;
};

inline Monomial unit_monomial(const Context& ctx) { return Monomial(ctx.total_vars()); }

/// x_i (0-based) as a monomial.
inline Monomial base_var(const Context& ctx, int i) {
  Monomial mono(ctx.total_vars());
  mono[i] = 1;
  return mono;
}

/// xi_i (0-based) as a monomial.
inline Monomial fiber_var(const Context& ctx, int i) {
  Monomial mono(ctx.total_vars());
  mono[ctx.base_vars() + i] = 1;
  return mono;
}

}  // namespace gdl

#endif
