#include "swapdeon/logics.hpp"

#include <algorithm>
#include <cctype>

#include "swapdeon/error.hpp"

namespace swapdeon {

struct Logic::Impl {
  std::string key;
  std::string name;
  Signature signature = Signature::Sigma;
  int n = 0;
  Algebra algebra = Algebra::three_valued(NegVariant::Basic, CircVariant::Basic);
  unsigned restrictions = 0;
  bool standard = true;
  std::vector<AxiomSchema> axioms;
};

namespace {

unsigned bit(Restriction r) { return 1u << static_cast<int>(r); }

// Templates are written over atoms a, b, c, which become metavariables.
AxiomSchema schema(const std::string& id, const std::string& text,
                   const Dialect& dialect) {
  Formula f = parse(text, dialect);
  static const std::unordered_map<std::string, std::string> names{
      {"a", "A"}, {"b", "B"}, {"c", "C"}};
  Substitution to_meta;
  std::vector<std::string> metavars;
  for (const std::string& atom : atoms(f)) {
    to_meta.emplace(atom, Formula::meta(names.at(atom)));
    metavars.push_back(names.at(atom));
  }
  struct Rewrite {
    const Substitution& map;
    Formula operator()(const Formula& g) const {
      switch (g.arity()) {
        case 0:
          return g.kind() == Kind::Atom ? map.at(g.name()) : g;
        case 1:
          return Formula::unary(g.kind(), (*this)(g.child()));
        default:
          return Formula::binary(g.kind(), (*this)(g.left()), (*this)(g.right()));
      }
    }
  };
  return AxiomSchema{id, Rewrite{to_meta}(f), metavars};
}

void add_positive_base(std::vector<AxiomSchema>& out, const Dialect& d) {
  out.push_back(schema("A1", "a -> (b -> a)", d));
  out.push_back(schema("A2", "(a -> b) -> ((a -> (b -> c)) -> (a -> c))", d));
  out.push_back(schema("A3", "a -> (b -> a & b)", d));
  out.push_back(schema("A4", "a & b -> a", d));
  out.push_back(schema("A5", "a & b -> b", d));
  out.push_back(schema("A6", "a -> a | b", d));
  out.push_back(schema("A7", "b -> a | b", d));
  out.push_back(schema("A8", "(a -> c) -> ((b -> c) -> (a | b -> c))", d));
  out.push_back(schema("A9", "((a -> b) -> a) -> a", d));
  out.push_back(schema("EM", "a | ~a", d));
}

struct SigmaSpec {
  const char* key;
  const char* name;
  NegVariant neg;
  CircVariant circ;
  unsigned restrictions;
  std::vector<std::string> extra;
};

const std::vector<SigmaSpec>& sigma_specs() {
  static const std::vector<SigmaSpec> specs{
      {"dmbc", "DmbC", NegVariant::Basic, CircVariant::Basic, 0, {}},
      {"dmbcciw", "DmbCciw", NegVariant::Basic, CircVariant::Exact, 0, {"ciw"}},
      {"dmbcci", "DmbCci", NegVariant::Basic, CircVariant::Deterministic, 0,
       {"ci"}},
      {"dbc", "DbC", NegVariant::Strong, CircVariant::Basic, 0, {"cf"}},
      {"dci", "DCi", NegVariant::Strong, CircVariant::Deterministic, 0,
       {"ci", "cf"}},
      {"dmbccl", "DmbCcl", NegVariant::Basic, CircVariant::Exact,
       bit(Restriction::CL), {"cl"}},
      {"dcila", "DCila", NegVariant::Strong, CircVariant::Deterministic,
       bit(Restriction::CL) | bit(Restriction::CAHash),
       {"ci", "cl", "cf", "ca_and", "ca_or", "ca_imp"}},
  };
  return specs;
}

const std::unordered_map<std::string, std::string>& sigma_axiom_text() {
  static const std::unordered_map<std::string, std::string> text{
      {"ciw", "@a | a & ~a"},
      {"ci", "~@a -> a & ~a"},
      {"cf", "~~a -> a"},
      {"cl", "~(a & ~a) -> @a"},
      {"ca_and", "@a & @b -> @(a & b)"},
      {"ca_or", "@a & @b -> @(a | b)"},
      {"ca_imp", "@a & @b -> @(a -> b)"},
  };
  return text;
}

Logic make_sigma(const SigmaSpec& spec) {
  auto impl = std::make_shared<Logic::Impl>();
  impl->key = spec.key;
  impl->name = spec.name;
  impl->algebra = Algebra::three_valued(spec.neg, spec.circ);
  impl->restrictions = spec.restrictions;
  Dialect d{Signature::Sigma, 0, true};
  add_positive_base(impl->axioms, d);
  impl->axioms.push_back(schema("bc", "@a -> (a -> (~a -> b))", d));
  for (const std::string& id : spec.extra) {
    impl->axioms.push_back(schema(id, sigma_axiom_text().at(id), d));
  }
  impl->axioms.push_back(schema("O-K", "O(a -> b) -> (O a -> O b)", d));
  impl->axioms.push_back(schema("O-E", "O bot(a) -> bot(a)", d));
  return Logic(impl);
}

Logic make_c1d() {
  auto impl = std::make_shared<Logic::Impl>();
  impl->key = "c1d";
  impl->name = "C1D";
  impl->signature = Signature::SigmaC1D;
  impl->n = 1;
  impl->algebra = Algebra::three_valued(NegVariant::Strong, CircVariant::None);
  impl->restrictions =
      bit(Restriction::CL) | bit(Restriction::CAHash) | bit(Restriction::CAO);
  Dialect d{Signature::SigmaC1D, 1, true};
  auto& ax = impl->axioms;
  add_positive_base(ax, d);
  ax.push_back(schema("cf", "~~a -> a", d));
  ax.push_back(schema("bc'", "a^1 -> (a -> (~a -> b))", d));
  ax.push_back(schema("ca_and'", "a^1 & b^1 -> (a & b)^1", d));
  ax.push_back(schema("ca_or'", "a^1 & b^1 -> (a | b)^1", d));
  ax.push_back(schema("ca_imp'", "a^1 & b^1 -> (a -> b)^1", d));
  ax.push_back(schema("caO'", "a^1 -> (O a)^1", d));
  ax.push_back(schema("O-K", "O(a -> b) -> (O a -> O b)", d));
  ax.push_back(schema("O-E", "O bot(a) -> bot(a)", d));
  return Logic(impl);
}

Logic make_cnd(int n, bool strict) {
  auto impl = std::make_shared<Logic::Impl>();
  impl->key = strict ? "cnd-strict" : "cnd";
  impl->name = std::string(strict ? "CnD-strict(" : "CnD(") +
               std::to_string(n) + ")";
  impl->signature = Signature::SigmaC1D;
  impl->n = n;
  impl->algebra = Algebra::hierarchy(n);
  impl->restrictions = bit(Restriction::CnRest) | bit(Restriction::CnOBoo);
  if (strict) impl->restrictions |= bit(Restriction::StrictO);
  Dialect d{Signature::SigmaC1D, n, true};
  const std::string pn = "^(" + std::to_string(n) + ")";
  auto& ax = impl->axioms;
  add_positive_base(ax, d);
  ax.push_back(schema("cf", "~~a -> a", d));
  ax.push_back(schema("bc_n", "a" + pn + " -> (a -> (~a -> b))", d));
  ax.push_back(schema("P_n", "a" + pn + " & b" + pn + " -> (a -> b)" + pn +
                                 " & (a | b)" + pn + " & (a & b)" + pn,
                      d));
  ax.push_back(schema("O-K", "O(a -> b) -> (O a -> O b)", d));
  ax.push_back(schema("D_n", "O a -> snotn(O snotn(a))", d));
  ax.push_back(schema("PO_n", "a" + pn + " -> (O a)" + pn, d));
  if (strict) ax.push_back(schema("SD_n", "O a -> ~O ~a", d));
  return Logic(impl);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool match_into(const Formula& pattern, const Formula& f, Substitution& subst) {
  if (pattern.kind() == Kind::Meta) {
    auto [it, inserted] = subst.emplace(pattern.name(), f);
    return inserted || it->second == f;
  }
  if (pattern.kind() != f.kind()) return false;
  switch (pattern.arity()) {
    case 0:
      return pattern.name() == f.name();
    case 1:
      return match_into(pattern.child(), f.child(), subst);
    default:
      return match_into(pattern.left(), f.left(), subst) &&
             match_into(pattern.right(), f.right(), subst);
  }
}

}  // namespace

const char* restriction_id(Restriction r) {
  switch (r) {
    case Restriction::CL:
      return "CL";
    case Restriction::CAHash:
      return "CA#";
    case Restriction::CAO:
      return "CAO";
    case Restriction::CnRest:
      return "CN-REST";
    case Restriction::CnOBoo:
      return "CN-O-BOO";
    case Restriction::StrictO:
      return "STRICT-O";
  }
  return "?";
}

std::optional<Restriction> parse_restriction(std::string_view id) {
  std::string upper(id);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (Restriction r : kAllRestrictions) {
    if (upper == restriction_id(r)) return r;
  }
  return std::nullopt;
}

const std::string& Logic::key() const { return impl_->key; }
const std::string& Logic::name() const { return impl_->name; }
Signature Logic::signature() const { return impl_->signature; }
int Logic::n() const { return impl_->n; }
const Algebra& Logic::algebra() const { return impl_->algebra; }
Dialect Logic::dialect() const {
  return Dialect{impl_->signature, impl_->n, true};
}
bool Logic::has(Restriction r) const { return impl_->restrictions & bit(r); }
bool Logic::standard() const { return impl_->standard; }
const std::vector<AxiomSchema>& Logic::axioms() const { return impl_->axioms; }

std::vector<Restriction> Logic::restrictions() const {
  std::vector<Restriction> out;
  for (Restriction r : kAllRestrictions) {
    if (has(r)) out.push_back(r);
  }
  return out;
}

Logic Logic::without(Restriction r) const {
  if (!has(r)) {
    throw LogicError(std::string("restriction ") + restriction_id(r) +
                     " does not apply to " + name());
  }
  auto copy = std::make_shared<Impl>(*impl_);
  copy->restrictions &= ~bit(r);
  copy->standard = false;
  return Logic(copy);
}

const AxiomSchema* Logic::find_axiom(std::string_view id) const {
  for (const AxiomSchema& s : impl_->axioms) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

ClosureRules Logic::closure_rules(std::size_t cap) const {
  ClosureRules rules;
  rules.cap = cap;
  rules.contradiction_pairs = has(Restriction::CL);
  if (has(Restriction::CnRest)) rules.hierarchy_depth = impl_->n;
  return rules;
}

Logic get_logic(std::string_view name, std::optional<int> n) {
  const std::string key = lower(name);
  for (const SigmaSpec& spec : sigma_specs()) {
    if (key != spec.key) continue;
    if (n) throw LogicError(std::string(spec.name) + " takes no --n");
    return make_sigma(spec);
  }
  if (key == "c1d") {
    if (n && *n != 1) throw LogicError("C1D is fixed at n = 1");
    return make_c1d();
  }
  if (key == "cnd" || key == "cnd-strict") {
    if (!n) throw LogicError(key + " requires --n");
    if (*n == 1) {
      throw LogicError(key + " needs n >= 2; use \"c1d\" for n = 1");
    }
    if (*n < 1 || *n > 16) throw LogicError("n must be between 2 and 16");
    return make_cnd(*n, key == "cnd-strict");
  }
  throw LogicError("unknown logic \"" + std::string(name) + "\"");
}

std::vector<Logic> registered_logics(int max_n) {
  std::vector<Logic> out;
  for (const SigmaSpec& spec : sigma_specs()) out.push_back(make_sigma(spec));
  out.push_back(make_c1d());
  for (int n = 2; n <= max_n; ++n) {
    out.push_back(make_cnd(n, false));
    out.push_back(make_cnd(n, true));
  }
  return out;
}

Formula instantiate(const AxiomSchema& schema, const Substitution& subst) {
  for (const std::string& v : schema.metavars) {
    if (!subst.contains(v)) {
      throw LogicError("schema " + schema.id + ": metavariable " + v +
                       " is unbound");
    }
  }
  return substitute(schema.templ, subst);
}

std::optional<Substitution> match_schema(const AxiomSchema& schema,
                                         const Formula& f) {
  Substitution subst;
  if (!match_into(schema.templ, f, subst)) return std::nullopt;
  return subst;
}

std::optional<AxiomMatch> match_axiom(const Logic& logic, const Formula& f) {
  for (const AxiomSchema& s : logic.axioms()) {
    if (auto subst = match_schema(s, f)) return AxiomMatch{s.id, *subst};
  }
  return std::nullopt;
}

ClosureSet closure(std::span<const Formula> targets, const Logic& logic,
                   std::size_t cap) {
  return ClosureSet::build(targets, logic.closure_rules(cap));
}

Formula parse(std::string_view text, const Logic& logic) {
  return parse(text, logic.dialect());
}

}  // namespace swapdeon
