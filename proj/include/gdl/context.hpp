#ifndef GDL_CONTEXT_HPP
#define GDL_CONTEXT_HPP

#include <memory>
#include <stdexcept>
#include <string>

namespace gdl {

/// Input data that does not parse or violates a precondition. CLI exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal invariant was violated. CLI exit code 4.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Variable signature of one polynomial ring session.
///
/// A ring has `base_vars` variables of grading degree 0 (coefficient
/// directions) and `fiber_vars` variables of grading degree 1 (the graded
/// directions). All values created against one context are interoperable;
/// mixing contexts is an error, never a coercion.
///
/// The base ring of a context (m, n) is the context (0, m) whose graded
/// variables are the former base variables; degree slices of graded modules
/// live there.
class Context {
public:
  Context(int base_vars, int fiber_vars, std::string base_prefix = "x",
          std::string fiber_prefix = "u")
      : base_vars_(base_vars),
        fiber_vars_(fiber_vars),
        base_prefix_(std::move(base_prefix)),
        fiber_prefix_(std::move(fiber_prefix)) {
    if (base_vars < 0 || fiber_vars < 0) throw InputError("negative variable count");
  }

  int base_vars() const { return base_vars_; }
  int fiber_vars() const { return fiber_vars_; }
  int total_vars() const { return base_vars_ + fiber_vars_; }
  const std::string& base_prefix() const { return base_prefix_; }
  const std::string& fiber_prefix() const { return fiber_prefix_; }

  bool same_signature(const Context& o) const {
    return base_vars_ == o.base_vars_ && fiber_vars_ == o.fiber_vars_;
  }

private:
  int base_vars_;
  int fiber_vars_;
  std::string base_prefix_;
  std::string fiber_prefix_;
};

using ContextPtr = std::shared_ptr<const Context>;

inline ContextPtr make_context(int base_vars, int fiber_vars) {
  return std::make_shared<Context>(base_vars, fiber_vars);
}

/// The ring the degree slices live over: all former base variables become the
/// graded variables, printed with the same names they had.
inline ContextPtr base_ring_of(const ContextPtr& ctx) {
  return std::make_shared<Context>(0, ctx->base_vars(), "y", ctx->base_prefix());
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_signature(*b))
    throw InputError("mismatched variable signature between operands");
}

}  // namespace gdl

#endif
