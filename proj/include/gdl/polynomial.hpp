#ifndef GDL_POLYNOMIAL_HPP
#define GDL_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "gdl/order.hpp"
#include "gdl/rational.hpp"

namespace gdl {

namespace detail {
/// Storage comparator: the default block order. Terms of a polynomial are kept
/// sorted by it so the leading term under the default order is rbegin().
struct StoredTermLess {
  int base_vars = 0;
  int total_vars = 0;
  bool operator()(const Monomial& a, const Monomial& b) const {
    int c = drl_compare_range(a, b, base_vars, total_vars);
    if (c != 0) return c < 0;
    return drl_compare_range(a, b, 0, base_vars) < 0;
  }
};
}  // namespace detail

/// Sparse exact-rational multivariate polynomial over a context.
/// Invariant: no zero coefficients are stored.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, detail::StoredTermLess>;

  explicit Polynomial(ContextPtr ctx)
      : ctx_(std::move(ctx)),
        terms_(detail::StoredTermLess{ctx_->base_vars(), ctx_->total_vars()}) {}

  Polynomial(ContextPtr ctx, const Rational& c) : Polynomial(std::move(ctx)) {
    if (!gdl::is_zero(c)) terms_.emplace(unit_monomial(*ctx_), c);
  }

  Polynomial(ContextPtr ctx, const Monomial& mono, const Rational& c = Rational(1))
      : Polynomial(std::move(ctx)) {
    if (!gdl::is_zero(c)) terms_.emplace(mono, c);
  }

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Rational constant_coefficient() const {
    auto it = terms_.find(unit_monomial(*ctx_));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Leading term under the default block order.
  const std::pair<const Monomial, Rational>& leading_term() const {
    if (terms_.empty()) throw InternalError("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  void add_term(const Monomial& mono, const Rational& c) {
    if (gdl::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(mono, c);
    if (!fresh) {
      it->second += c;
      if (gdl::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// this += c * mu * q  (the reduction workhorse).
  void axpy(const Rational& c, const Monomial& mu, const Polynomial& q) {
    require_same_context(ctx_, q.ctx_);
    for (const auto& [mono, coef] : q.terms_) add_term(mu * mono, c * coef);
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_context(ctx_, o.ctx_);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    require_same_context(ctx_, o.ctx_);
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r(*this);
    r += o;
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    Polynomial r(*this);
    r -= o;
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& [mono, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    require_same_context(ctx_, o.ctx_);
    Polynomial r(ctx_);
    for (const auto& [ma, ca] : terms_) r.axpy(ca, ma, o);
    return r;
  }

  Polynomial operator*(const Rational& c) const {
    Polynomial r(ctx_);
    if (gdl::is_zero(c)) return r;
    r.terms_ = terms_;
    for (auto& [mono, coef] : r.terms_) coef *= c;
    return r;
  }

  Polynomial mul_monomial(const Monomial& mu, const Rational& c = Rational(1)) const {
    Polynomial r(ctx_);
    r.axpy(c, mu, *this);
    return r;
  }

  bool operator==(const Polynomial& o) const {
    return ctx_->same_signature(*o.ctx_) &&
           std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                      [](const auto& a, const auto& b) {
                        return a.first == b.first && a.second == b.second;
                      }) &&
           terms_.size() == o.terms_.size();
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Grading degree if every term has the same one; nullopt otherwise.
  /// Callers treat the zero polynomial as homogeneous of every degree.
  std::optional<int> xi_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.xi_degree(*ctx_);
    for (const auto& [mono, c] : terms_)
      if (mono.xi_degree(*ctx_) != d) return std::nullopt;
    return d;
  }

  std::optional<int> x_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.x_degree(*ctx_);
    for (const auto& [mono, c] : terms_)
      if (mono.x_degree(*ctx_) != d) return std::nullopt;
    return d;
  }

  bool xi_homogeneous_of(int d) const {
    for (const auto& [mono, c] : terms_)
      if (mono.xi_degree(*ctx_) != d) return false;
    return true;
  }

  /// Image under the graded ring automorphism u_i -> -u_i: negates the
  /// coefficients of all odd grading-degree terms.
  Polynomial sign_twist() const {
    Polynomial r(*this);
    for (auto& [mono, c] : r.terms_)
      if (mono.xi_degree(*ctx_) % 2 != 0) c = -c;
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Rational& c = it->second;
      if (first) {
        if (sgn(c) < 0) os << "-";
        first = false;
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      Rational a = abs(c);
      bool printed_coef = false;
      if (!is_one(a) || it->first.is_one()) {
        os << a.get_str();
        printed_coef = true;
      }
      const Monomial& mono = it->first;
      for (int i = 0; i < ctx_->total_vars(); ++i) {
        if (mono[i] == 0) continue;
        if (printed_coef) os << "*";
        printed_coef = true;
        if (i < ctx_->base_vars())
          os << ctx_->base_prefix() << (i + 1);
        else
          os << ctx_->fiber_prefix() << (i - ctx_->base_vars() + 1);
        if (mono[i] > 1) os << "^" << mono[i];
      }
    }
    return os.str();
  }

private:
  ContextPtr ctx_;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// Reinterpret a polynomial with no fiber exponents as an element of the base
/// ring context (where the base variables carry the grading).
inline Polynomial to_base_ring(const Polynomial& p, const ContextPtr& base_ctx) {
  if (base_ctx->base_vars() != 0 || base_ctx->fiber_vars() != p.context()->base_vars())
    throw InternalError("to_base_ring: context shape mismatch");
  Polynomial r(base_ctx);
  const int m = p.context()->base_vars();
  const int t = p.context()->total_vars();
  for (const auto& [mono, c] : p.terms()) {
    for (int i = m; i < t; ++i)
      if (mono[i] != 0) throw InternalError("to_base_ring: fiber exponent present");
    std::vector<int> exps(mono.exps().begin(), mono.exps().begin() + m);
    r.add_term(Monomial(std::move(exps)), c);
  }
  return r;
}

}  // namespace gdl

#endif
