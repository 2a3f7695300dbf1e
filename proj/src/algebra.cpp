#include "swapdeon/algebra.hpp"

#include <algorithm>

#include "swapdeon/error.hpp"

namespace swapdeon {

std::string Snapshot::to_string() const {
  std::string out = "(";
  for (int i = 1; i <= width; ++i) {
    if (i > 1) out += ',';
    out += static_cast<char>('0' + coord(i));
  }
  return out + ")";
}

std::optional<Op> parse_op(std::string_view name) {
  if (name == "and") return Op::And;
  if (name == "or") return Op::Or;
  if (name == "imp") return Op::Imp;
  if (name == "neg") return Op::Neg;
  if (name == "circ") return Op::Circ;
  return std::nullopt;
}

const char* op_name(Op op) {
  switch (op) {
    case Op::And:
      return "and";
    case Op::Or:
      return "or";
    case Op::Imp:
      return "imp";
    case Op::Neg:
      return "neg";
    case Op::Circ:
      return "circ";
  }
  return "?";
}

namespace {

// Members of A_n ordered T_n, t_0, ..., t_{n-1}, F_n.
std::vector<Snapshot> hierarchy_domain(int n) {
  const int width = n + 1;
  std::vector<std::pair<int, Snapshot>> ranked;
  for (std::uint32_t z = 0; z < (1u << width); ++z) {
    Snapshot s{z, width};
    bool ok = true;
    bool prefix = true;
    for (int k = 1; k <= n && ok; ++k) {
      prefix = prefix && s.coord(k) == 1;
      ok = prefix || s.coord(k + 1) == 1;
    }
    if (!ok) continue;
    int rank;
    if (s.coord(1) == 0) {
      rank = width + 1;
    } else if (s.coord(2) == 0) {
      rank = 0;
    } else {
      int ones = 0;
      while (ones < width && s.coord(ones + 1) == 1) ++ones;
      rank = ones - 1;  // t_i has i + 2 leading ones (all ones for t_{n-1})
    }
    ranked.emplace_back(rank, s);
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Snapshot> out;
  for (const auto& [rank, s] : ranked) out.push_back(s);
  return out;
}

int apply_bool(BinOp op, int a, int b) {
  switch (op) {
    case BinOp::And:
      return a & b;
    case BinOp::Or:
      return a | b;
    case BinOp::Imp:
      return (1 - a) | b;
  }
  return 0;
}

}  // namespace

Algebra Algebra::three_valued(NegVariant neg, CircVariant circ) {
  Algebra alg;
  alg.width_ = 2;
  alg.neg_ = neg;
  alg.circ_ = circ;
  alg.domain_ = {Snapshot{0b01, 2}, Snapshot{0b11, 2}, Snapshot{0b10, 2}};
  alg.labels_ = {"T", "t", "F"};
  alg.tabulate();
  return alg;
}

Algebra Algebra::hierarchy(int n) {
  if (n < 1 || n > 16) {
    throw LogicError("hierarchy level must be between 1 and 16");
  }
  Algebra alg;
  alg.hierarchy_ = true;
  alg.width_ = n + 1;
  alg.neg_ = NegVariant::Strong;
  alg.domain_ = hierarchy_domain(n);
  if (alg.size() != n + 2) throw LogicError("malformed A_n domain");
  alg.labels_.push_back("T");
  for (int i = 0; i < n; ++i) alg.labels_.push_back("t" + std::to_string(i));
  alg.labels_.push_back("F");
  alg.tabulate();
  return alg;
}

void Algebra::tabulate() {
  const int m = size();
  auto collect = [&](auto&& pred) {
    ValueSet out;
    for (int c = 0; c < m; ++c) {
      if (pred(domain_[c])) out.insert(static_cast<Value>(c));
    }
    return out;
  };

  for (int op = 0; op < 3; ++op) {
    binary_[op].resize(m * m);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        int c1 = apply_bool(static_cast<BinOp>(op), domain_[a].coord(1),
                            domain_[b].coord(1));
        ValueSet out = collect([&](const Snapshot& c) { return c.coord(1) == c1; });
        if (hierarchy_ && is_classical(static_cast<Value>(a)) &&
            is_classical(static_cast<Value>(b))) {
          out = out & classical();
        }
        binary_[op][a * m + b] = out;
      }
    }
  }

  neg_table_.resize(m);
  for (int a = 0; a < m; ++a) {
    const Snapshot& s = domain_[a];
    neg_table_[a] = collect([&](const Snapshot& c) {
      if (c.coord(1) != s.coord(2)) return false;
      return neg_ == NegVariant::Basic || c.coord(2) <= s.coord(1);
    });
  }

  if (circ_ == CircVariant::None) return;
  circ_table_.resize(m);
  for (int a = 0; a < m; ++a) {
    const Snapshot& s = domain_[a];
    int meet = s.coord(1) & s.coord(2);
    circ_table_[a] = collect([&](const Snapshot& c) {
      switch (circ_) {
        case CircVariant::Basic:
          return c.coord(1) <= 1 - meet;
        case CircVariant::Exact:
          return c.coord(1) == 1 - meet;
        default:
          return c.coord(1) == 1 - meet && c.coord(2) == meet;
      }
    });
  }
}

std::optional<Value> Algebra::parse_label(std::string_view text) const {
  for (int v = 0; v < size(); ++v) {
    if (labels_[v] == text) return static_cast<Value>(v);
  }
  return std::nullopt;
}

ValueClass Algebra::classify(Value v) const {
  ValueClass c;
  c.designated = is_designated(v);
  c.undesignated = !c.designated;
  c.classical = is_classical(v);
  c.inconsistent = !c.classical;
  return c;
}

ValueSet Algebra::consistency(Value a) const {
  if (!has_circ()) {
    throw LogicError("the consistency connective is not in this signature");
  }
  return circ_table_[a];
}

ValueSet Algebra::obligation(ValueSet xs) const {
  if (xs.empty()) throw ModelError("obligation over an empty set of values");
  return xs.subset_of(designated()) ? designated() : undesignated();
}

std::string Algebra::format_set(ValueSet s) const {
  std::string out = "{";
  bool first = true;
  for (Value v : s) {
    if (!first) out += ',';
    out += labels_[v];
    first = false;
  }
  return out + "}";
}

std::string Algebra::truth_table(Op op) const {
  std::vector<std::vector<std::string>> rows;
  const int m = size();
  if (op == Op::Neg || op == Op::Circ) {
    if (op == Op::Circ && !has_circ()) {
      throw LogicError("the consistency connective is not in this signature");
    }
    rows.push_back({op_name(op), "value"});
    for (int a = 0; a < m; ++a) {
      auto v = static_cast<Value>(a);
      rows.push_back(
          {labels_[a], format_set(op == Op::Neg ? negation(v) : consistency(v))});
    }
  } else {
    auto bop = static_cast<BinOp>(static_cast<int>(op));
    std::vector<std::string> header{op_name(op)};
    header.insert(header.end(), labels_.begin(), labels_.end());
    rows.push_back(header);
    for (int a = 0; a < m; ++a) {
      std::vector<std::string> row{labels_[a]};
      for (int b = 0; b < m; ++b) {
        row.push_back(format_set(
            binary(bop, static_cast<Value>(a), static_cast<Value>(b))));
      }
      rows.push_back(row);
    }
  }

  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += " | ";
      line += row[i];
      if (i + 1 < row.size()) line.append(widths[i] - row[i].size(), ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace swapdeon
