#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "swapdeon/algebra.hpp"
#include "swapdeon/formula.hpp"

namespace swapdeon {

// Valuation restrictions layered on top of the multialgebra.
enum class Restriction {
  CL,       // v(a) = t  =>  v(a & ~a) = T
  CAHash,   // v(a), v(b) classical  =>  v(a # b) classical
  CAO,      // v_w(a) classical  =>  v_w(O a) classical (three-valued)
  CnRest,   // t0 / t_k forcing on a & ~a and a^1
  CnOBoo,   // v_w(a) in Boo_n  =>  v_w(O a) in Boo_n
  StrictO,  // v_w(O a) designated  =>  v_w'(a) = T at every successor
};

inline constexpr Restriction kAllRestrictions[] = {
    Restriction::CL,     Restriction::CAHash, Restriction::CAO,
    Restriction::CnRest, Restriction::CnOBoo, Restriction::StrictO};

const char* restriction_id(Restriction r);
std::optional<Restriction> parse_restriction(std::string_view id);

using Substitution = std::unordered_map<std::string, Formula>;

struct AxiomSchema {
  std::string id;
  Formula templ;                      // metavariables are Meta leaves
  std::vector<std::string> metavars;  // in first-occurrence order
};

class Logic {
 public:
  const std::string& key() const;   // "dmbc", "cnd", ...
  const std::string& name() const;  // "DmbC", "CnD(2)", ...
  Signature signature() const;
  // Hierarchy level: 0 for the Sigma logics, 1 for C1D.
  int n() const;
  const Algebra& algebra() const;
  Dialect dialect() const;

  bool has(Restriction r) const;
  std::vector<Restriction> restrictions() const;
  // Same logic with `r` switched off; the result is non-standard.
  Logic without(Restriction r) const;
  bool standard() const;

  const std::vector<AxiomSchema>& axioms() const;
  const AxiomSchema* find_axiom(std::string_view id) const;

  ClosureRules closure_rules(std::size_t cap = 4096) const;

  struct Impl;
  explicit Logic(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
};

// Throws LogicError for unknown names or a missing / invalid n.
Logic get_logic(std::string_view name, std::optional<int> n = std::nullopt);

// Sigma logics, C1D, and CnD / CnD-strict for n = 2..max_n.
std::vector<Logic> registered_logics(int max_n = 2);

// Throws LogicError when a metavariable is unbound.
Formula instantiate(const AxiomSchema& schema, const Substitution& subst);

std::optional<Substitution> match_schema(const AxiomSchema& schema,
                                         const Formula& f);

struct AxiomMatch {
  std::string schema;
  Substitution subst;
};
// First schema, in registry order, that `f` instantiates.
std::optional<AxiomMatch> match_axiom(const Logic& logic, const Formula& f);

ClosureSet closure(std::span<const Formula> targets, const Logic& logic,
                   std::size_t cap = 4096);

Formula parse(std::string_view text, const Logic& logic);

}  // namespace swapdeon
