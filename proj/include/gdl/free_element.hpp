#ifndef GDL_FREE_ELEMENT_HPP
#define GDL_FREE_ELEMENT_HPP

#include <map>
#include <optional>
#include <sstream>

#include "gdl/polynomial.hpp"

namespace gdl {

/// One term of a free-module element: coef * mono * e_comp.
struct ModuleTerm {
  int comp = -1;
  Monomial mono;
  Rational coef;
};

/// Element of a free module with polynomial entries, sparse by component.
class FreeElement {
public:
  explicit FreeElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  FreeElement(ContextPtr ctx, int comp, Polynomial p) : ctx_(std::move(ctx)) {
    if (!p.is_zero()) comps_.emplace(comp, std::move(p));
  }

  const ContextPtr& context() const { return ctx_; }
  const std::map<int, Polynomial>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  const Polynomial& component(int c) const {
    static thread_local std::map<const Context*, Polynomial> zeros;
    auto it = comps_.find(c);
    if (it != comps_.end()) return it->second;
    auto z = zeros.find(ctx_.get());
    if (z == zeros.end()) z = zeros.emplace(ctx_.get(), Polynomial(ctx_)).first;
    return z->second;
  }

  void set_component(int c, Polynomial p) {
    if (p.is_zero())
      comps_.erase(c);
    else
      comps_.insert_or_assign(c, std::move(p));
  }

  void add_term(int c, const Monomial& mono, const Rational& coef) {
    if (gdl::is_zero(coef)) return;
    auto it = comps_.find(c);
    if (it == comps_.end()) it = comps_.emplace(c, Polynomial(ctx_)).first;
    it->second.add_term(mono, coef);
    if (it->second.is_zero()) comps_.erase(it);
  }

  /// this += coef * mu * other.
  void axpy(const Rational& coef, const Monomial& mu, const FreeElement& other) {
    for (const auto& [c, p] : other.comps_) {
      auto it = comps_.find(c);
      if (it == comps_.end()) it = comps_.emplace(c, Polynomial(ctx_)).first;
      it->second.axpy(coef, mu, p);
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  FreeElement& operator+=(const FreeElement& o) {
    axpy(Rational(1), unit_monomial(*ctx_), o);
    return *this;
  }
  FreeElement& operator-=(const FreeElement& o) {
    axpy(Rational(-1), unit_monomial(*ctx_), o);
    return *this;
  }

  FreeElement operator*(const Rational& c) const {
    FreeElement r(ctx_);
    if (gdl::is_zero(c)) return r;
    for (const auto& [comp, p] : comps_) r.comps_.emplace(comp, p * c);
    return r;
  }

  FreeElement mul_monomial(const Monomial& mu, const Rational& c = Rational(1)) const {
    FreeElement r(ctx_);
    r.axpy(c, mu, *this);
    return r;
  }

  bool operator==(const FreeElement& o) const {
    if (comps_.size() != o.comps_.size()) return false;
    auto it = o.comps_.begin();
    for (const auto& [c, p] : comps_) {
      if (it->first != c || !(it->second == p)) return false;
      ++it;
    }
    return true;
  }

  /// Leading term under the given module order.
  ModuleTerm leading_term(const ModuleOrder& order) const {
    if (comps_.empty()) throw InternalError("leading term of zero element");
    ModuleTerm best;
    for (const auto& [c, p] : comps_) {
      // under the default block order the polynomial's leading term is rbegin
      const Monomial* cand_mono = nullptr;
      const Rational* cand_coef = nullptr;
      if (order.mono.kind == OrderKind::Block) {
        cand_mono = &p.leading_term().first;
        cand_coef = &p.leading_term().second;
      } else {
        for (const auto& [mono, coef] : p.terms()) {
          if (!cand_mono || order.mono.less(*cand_mono, mono, *ctx_)) {
            cand_mono = &mono;
            cand_coef = &coef;
          }
        }
      }
      if (best.comp < 0 ||
          order.compare(best.comp, best.mono, c, *cand_mono, *ctx_) < 0) {
        best.comp = c;
        best.mono = *cand_mono;
        best.coef = *cand_coef;
      }
    }
    return best;
  }

  /// Grading degree relative to the twists, if homogeneous.
  std::optional<int> degree(const std::vector<int>& twists) const {
    std::optional<int> d;
    for (const auto& [c, p] : comps_) {
      auto pd = p.xi_degree();
      if (!pd) return std::nullopt;
      int twist = c < static_cast<int>(twists.size()) ? twists[c] : 0;
      int total = *pd + twist;
      if (d && *d != total) return std::nullopt;
      d = total;
    }
    return d;
  }

  FreeElement sign_twist() const {
    FreeElement r(ctx_);
    for (const auto& [c, p] : comps_) r.comps_.emplace(c, p.sign_twist());
    return r;
  }

  std::string str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, p] : comps_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << p.str() << ")*e" << c;
    }
    return os.str();
  }

private:
  ContextPtr ctx_;
  std::map<int, Polynomial> comps_;
};

}  // namespace gdl

#endif
