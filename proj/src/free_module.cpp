#include "gdl/free_module.hpp"

namespace gdl {

namespace {
void enumerate(int vars_left, int degree_left, std::vector<int>& acc,
               std::vector<std::vector<int>>& out) {
  if (vars_left == 1) {
    acc.push_back(degree_left);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int e = degree_left; e >= 0; --e) {
    acc.push_back(e);
    enumerate(vars_left - 1, degree_left - e, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Monomial> fiber_monomials_of_degree(const Context& ctx, int degree) {
  std::vector<Monomial> result;
  if (degree < 0) return result;
  const int n = ctx.fiber_vars();
  if (n == 0) {
    if (degree == 0) result.push_back(unit_monomial(ctx));
    return result;
  }
  std::vector<std::vector<int>> fiber_exps;
  std::vector<int> acc;
  enumerate(n, degree, acc, fiber_exps);
  result.reserve(fiber_exps.size());
  for (auto& fe : fiber_exps) {
    std::vector<int> exps(ctx.total_vars(), 0);
    for (int i = 0; i < n; ++i) exps[ctx.base_vars() + i] = fe[i];
    result.emplace_back(std::move(exps));
  }
  return result;
}

long long fiber_monomial_count(int fiber_vars, int degree) {
  if (degree < 0) return 0;
  if (fiber_vars == 0) return degree == 0 ? 1 : 0;
  // C(degree + n - 1, n - 1)
  long long num = 1;
  for (int i = 1; i <= fiber_vars - 1; ++i) num = num * (degree + i) / i;
  return num;
}

std::vector<SliceLabel> slice_basis(const Context& ctx, const GradedFreeModule& f, int p) {
  std::vector<SliceLabel> basis;
  for (int i = 0; i < f.rank(); ++i)
    for (auto& mono : fiber_monomials_of_degree(ctx, p - f.twists[i]))
      basis.push_back(SliceLabel{i, mono, false});
  return basis;
}

}  // namespace gdl
