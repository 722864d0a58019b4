#include "dunn/conditions.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace dunn {

struct ConditionExpr::Node {
  Kind kind;
  DunnAtom atom{TruthValue::truth, true, 1};  // valid only for Kind::atom
  std::vector<ConditionExpr> children;
};

ConditionExpr ConditionExpr::atom(DunnAtom a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::atom;
  node->atom = a;
  return ConditionExpr(std::move(node));
}

ConditionExpr ConditionExpr::make(Kind kind, std::vector<ConditionExpr> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->children = std::move(children);
  return ConditionExpr(std::move(node));
}

ConditionExpr ConditionExpr::negation(ConditionExpr operand) {
  return make(Kind::negation, {std::move(operand)});
}
ConditionExpr ConditionExpr::conjunction(ConditionExpr lhs, ConditionExpr rhs) {
  return make(Kind::conjunction, {std::move(lhs), std::move(rhs)});
}
ConditionExpr ConditionExpr::disjunction(ConditionExpr lhs, ConditionExpr rhs) {
  return make(Kind::disjunction, {std::move(lhs), std::move(rhs)});
}
ConditionExpr ConditionExpr::implication(ConditionExpr lhs, ConditionExpr rhs) {
  return make(Kind::implication, {std::move(lhs), std::move(rhs)});
}
ConditionExpr ConditionExpr::equivalence(ConditionExpr lhs, ConditionExpr rhs) {
  return make(Kind::equivalence, {std::move(lhs), std::move(rhs)});
}

ConditionExpr::Kind ConditionExpr::kind() const { return node_->kind; }

const DunnAtom& ConditionExpr::atom_value() const { return node_->atom; }

int ConditionExpr::child_count() const { return static_cast<int>(node_->children.size()); }

const ConditionExpr& ConditionExpr::child(int i) const { return node_->children[static_cast<std::size_t>(i)]; }

int ConditionExpr::max_arg() const {
  if (kind() == Kind::atom) return node_->atom.arg;
  int m = 0;
  for (const auto& c : node_->children) m = std::max(m, c.max_arg());
  return m;
}

static void collect_leaves(const ConditionExpr& c, std::vector<DunnAtom>& out) {
  if (c.kind() == ConditionExpr::Kind::atom) {
    out.push_back(c.atom_value());
    return;
  }
  for (int i = 0; i < c.child_count(); ++i) collect_leaves(c.child(i), out);
}

std::vector<DunnAtom> ConditionExpr::leaves() const {
  std::vector<DunnAtom> out;
  collect_leaves(*this, out);
  return out;
}

bool ConditionExpr::operator==(const ConditionExpr& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  if (kind() == Kind::atom) return node_->atom == other.node_->atom;
  if (child_count() != other.child_count()) return false;
  for (int i = 0; i < child_count(); ++i) {
    if (!(child(i) == other.child(i))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

int node_precedence(ConditionExpr::Kind k) {
  switch (k) {
    case ConditionExpr::Kind::equivalence: return 1;
    case ConditionExpr::Kind::implication: return 2;
    case ConditionExpr::Kind::disjunction: return 3;
    case ConditionExpr::Kind::conjunction: return 4;
    case ConditionExpr::Kind::negation: return 5;
    case ConditionExpr::Kind::atom: return 6;
  }
  return 6;
}

std::string_view node_keyword(ConditionExpr::Kind k) {
  switch (k) {
    case ConditionExpr::Kind::conjunction: return "and";
    case ConditionExpr::Kind::disjunction: return "or";
    case ConditionExpr::Kind::implication: return "implies";
    case ConditionExpr::Kind::equivalence: return "iff";
    default: return "";
  }
}

void render(const ConditionExpr& c, std::string& out) {
  switch (c.kind()) {
    case ConditionExpr::Kind::atom: {
      const DunnAtom& a = c.atom_value();
      out += a.value == TruthValue::truth ? '1' : '0';
      out += a.member ? " in A" : " notin A";
      out += std::to_string(a.arg);
      return;
    }
    case ConditionExpr::Kind::negation: {
      out += "not ";
      const ConditionExpr& operand = c.child(0);
      if (operand.kind() == ConditionExpr::Kind::atom) {
        render(operand, out);
      } else {
        out += '(';
        render(operand, out);
        out += ')';
      }
      return;
    }
    default: {
      const int prec = node_precedence(c.kind());
      auto render_side = [&](const ConditionExpr& side, bool needs_parens) {
        if (needs_parens) out += '(';
        render(side, out);
        if (needs_parens) out += ')';
      };
      const ConditionExpr& lhs = c.child(0);
      const ConditionExpr& rhs = c.child(1);
      // implies is right-associative, the others left-associative
      const bool right_assoc = c.kind() == ConditionExpr::Kind::implication;
      render_side(lhs, node_precedence(lhs.kind()) < prec + (right_assoc ? 1 : 0));
      out += ' ';
      out += node_keyword(c.kind());
      out += ' ';
      render_side(rhs, node_precedence(rhs.kind()) < prec + (right_assoc ? 0 : 1));
      return;
    }
  }
}

}  // namespace

std::string ConditionExpr::to_string() const {
  std::string out;
  render(*this, out);
  return out;
}

// ---------------------------------------------------------------------------
// Condition DSL parser

namespace {

struct CondToken {
  enum class Type { value, in, notin, arg, kw_not, kw_and, kw_or, kw_implies, kw_iff, lparen, rparen, end };
  Type type;
  TruthValue value = TruthValue::truth;  // Type::value
  int arg = 0;                           // Type::arg
  std::size_t offset = 0;
};

class CondLexer {
public:
  explicit CondLexer(std::string_view text) : text_(text) { advance(); }

  const CondToken& peek() const { return current_; }

  CondToken take() {
    CondToken t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_.offset = pos_;
    if (pos_ >= text_.size()) {
      current_.type = CondToken::Type::end;
      return;
    }
    char c = text_[pos_];
    if (c == '(') {
      current_.type = CondToken::Type::lparen;
      ++pos_;
      return;
    }
    if (c == ')') {
      current_.type = CondToken::Type::rparen;
      ++pos_;
      return;
    }
    if (c == '0' || c == '1') {
      current_.type = CondToken::Type::value;
      current_.value = c == '1' ? TruthValue::truth : TruthValue::falsity;
      ++pos_;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string word(text_.substr(start, pos_ - start));
      std::string lower;
      for (char w : word) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(w))));
      if (lower == "in") {
        current_.type = CondToken::Type::in;
      } else if (lower == "notin") {
        current_.type = CondToken::Type::notin;
      } else if (lower == "not") {
        current_.type = CondToken::Type::kw_not;
      } else if (lower == "and") {
        current_.type = CondToken::Type::kw_and;
      } else if (lower == "or") {
        current_.type = CondToken::Type::kw_or;
      } else if (lower == "implies") {
        current_.type = CondToken::Type::kw_implies;
      } else if (lower == "iff") {
        current_.type = CondToken::Type::kw_iff;
      } else if ((lower[0] == 'a') && lower.size() > 1 &&
                 std::all_of(lower.begin() + 1, lower.end(),
                             [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
        current_.type = CondToken::Type::arg;
        current_.arg = std::stoi(lower.substr(1));
      } else {
        throw ParseError("unknown keyword '" + word + "' in condition", start);
      }
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "' in condition", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  CondToken current_;
};

class CondParser {
public:
  explicit CondParser(std::string_view text) : lexer_(text) {}

  ConditionExpr parse() {
    ConditionExpr result = parse_iff();
    if (lexer_.peek().type != CondToken::Type::end) {
      throw ParseError("trailing input in condition", lexer_.peek().offset);
    }
    return result;
  }

private:
  ConditionExpr parse_iff() {
    ConditionExpr lhs = parse_implies();
    while (lexer_.peek().type == CondToken::Type::kw_iff) {
      lexer_.take();
      lhs = ConditionExpr::equivalence(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  ConditionExpr parse_implies() {
    ConditionExpr lhs = parse_or();
    if (lexer_.peek().type == CondToken::Type::kw_implies) {
      lexer_.take();
      return ConditionExpr::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  ConditionExpr parse_or() {
    ConditionExpr lhs = parse_and();
    while (lexer_.peek().type == CondToken::Type::kw_or) {
      lexer_.take();
      lhs = ConditionExpr::disjunction(std::move(lhs), parse_and());
    }
    return lhs;
  }

  ConditionExpr parse_and() {
    ConditionExpr lhs = parse_unary();
    while (lexer_.peek().type == CondToken::Type::kw_and) {
      lexer_.take();
      lhs = ConditionExpr::conjunction(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  ConditionExpr parse_unary() {
    const CondToken& t = lexer_.peek();
    switch (t.type) {
      case CondToken::Type::kw_not: {
        lexer_.take();
        return ConditionExpr::negation(parse_unary());
      }
      case CondToken::Type::lparen: {
        lexer_.take();
        ConditionExpr inner = parse_iff();
        if (lexer_.peek().type != CondToken::Type::rparen) {
          throw ParseError("expected ')' in condition", lexer_.peek().offset);
        }
        lexer_.take();
        return inner;
      }
      case CondToken::Type::value: {
        CondToken value = lexer_.take();
        CondToken membership = lexer_.take();
        bool member;
        if (membership.type == CondToken::Type::in) {
          member = true;
        } else if (membership.type == CondToken::Type::notin) {
          member = false;
        } else {
          throw ParseError("expected 'in' or 'notin' after value", membership.offset);
        }
        CondToken arg = lexer_.take();
        if (arg.type != CondToken::Type::arg) {
          throw ParseError("expected argument reference (A1, A2, ...)", arg.offset);
        }
        if (arg.arg < 1) throw ParseError("argument index must be at least 1", arg.offset);
        return ConditionExpr::atom(DunnAtom{value.value, member, arg.arg});
      }
      default:
        throw ParseError("expected Dunn atom, 'not' or '('", t.offset);
    }
  }

  CondLexer lexer_;
};

}  // namespace

ConditionExpr ConditionExpr::parse(std::string_view text) { return CondParser(text).parse(); }

// ---------------------------------------------------------------------------
// Evaluation

bool eval_condition(const ConditionExpr& c, std::span<const Interpretation> args) {
  switch (c.kind()) {
    case ConditionExpr::Kind::atom: {
      const DunnAtom& a = c.atom_value();
      if (a.arg < 1 || static_cast<std::size_t>(a.arg) > args.size()) {
        throw EvalError("condition refers to argument A" + std::to_string(a.arg) + " but only " +
                        std::to_string(args.size()) + " argument(s) are present");
      }
      const bool in = args[static_cast<std::size_t>(a.arg - 1)].contains(a.value);
      return a.member ? in : !in;
    }
    case ConditionExpr::Kind::negation:
      return !eval_condition(c.child(0), args);
    case ConditionExpr::Kind::conjunction:
      return eval_condition(c.child(0), args) && eval_condition(c.child(1), args);
    case ConditionExpr::Kind::disjunction:
      return eval_condition(c.child(0), args) || eval_condition(c.child(1), args);
    case ConditionExpr::Kind::implication:
      return !eval_condition(c.child(0), args) || eval_condition(c.child(1), args);
    case ConditionExpr::Kind::equivalence:
      return eval_condition(c.child(0), args) == eval_condition(c.child(1), args);
  }
  return false;
}

BooleanFunction classical_profile(const ConditionExpr& c, int arity) {
  BooleanFunction f;
  f.arity = arity;
  const int rows = 1 << arity;
  f.values.resize(static_cast<std::size_t>(rows));
  std::vector<Interpretation> args(static_cast<std::size_t>(arity));
  for (int row = 0; row < rows; ++row) {
    for (int j = 0; j < arity; ++j) {
      const bool arg_true = ((row >> (arity - 1 - j)) & 1) == 0;  // index 0 = all true
      args[static_cast<std::size_t>(j)] =
          arg_true ? Interpretation::just_true() : Interpretation::just_false();
    }
    f.values[static_cast<std::size_t>(row)] = eval_condition(c, args);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Change classification

std::string_view to_string(ChangeKind k) {
  switch (k) {
    case ChangeKind::identical: return "Identical";
    case ChangeKind::c1_value_change: return "C1-ValueChange";
    case ChangeKind::c2_membership_change: return "C2-MembershipChange";
    case ChangeKind::tweaking: return "Tweaking";
    case ChangeKind::c3_relation_change: return "C3-RelationChange";
    case ChangeKind::c4_extra_condition: return "C4-ExtraCondition";
    case ChangeKind::c5_mixed: return "C5-Mixed";
  }
  return "?";
}

namespace {

bool same_shape(const ConditionExpr& a, const ConditionExpr& b) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == ConditionExpr::Kind::atom) return true;
  if (a.child_count() != b.child_count()) return false;
  for (int i = 0; i < a.child_count(); ++i) {
    if (!same_shape(a.child(i), b.child(i))) return false;
  }
  return true;
}

enum class LeafDelta { unchanged, value_only, membership_only, counterpart, other };

LeafDelta leaf_delta(const DunnAtom& from, const DunnAtom& to) {
  if (from == to) return LeafDelta::unchanged;
  if (from.arg != to.arg) return LeafDelta::other;
  const bool value_changed = from.value != to.value;
  const bool member_changed = from.member != to.member;
  if (value_changed && member_changed) return LeafDelta::counterpart;
  if (value_changed) return LeafDelta::value_only;
  return LeafDelta::membership_only;
}

bool leaf_multisets_equal(const ConditionExpr& a, const ConditionExpr& b) {
  auto key = [](const DunnAtom& x) {
    return std::tuple<int, bool, int>(static_cast<int>(x.value), x.member, x.arg);
  };
  std::map<std::tuple<int, bool, int>, int> counts;
  for (const DunnAtom& x : a.leaves()) ++counts[key(x)];
  for (const DunnAtom& x : b.leaves()) --counts[key(x)];
  return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

bool is_tweaking(const ConditionExpr& from, const ConditionExpr& to) {
  if (!same_shape(from, to)) return false;
  const std::vector<DunnAtom> from_leaves = from.leaves();
  const std::vector<DunnAtom> to_leaves = to.leaves();
  bool any_changed = false;
  for (std::size_t i = 0; i < from_leaves.size(); ++i) {
    switch (leaf_delta(from_leaves[i], to_leaves[i])) {
      case LeafDelta::unchanged: break;
      case LeafDelta::counterpart: any_changed = true; break;
      default: return false;
    }
  }
  return any_changed;
}

ChangeKind classify_change(const ConditionExpr& from, const ConditionExpr& to) {
  if (from == to) return ChangeKind::identical;

  if (same_shape(from, to)) {
    const std::vector<DunnAtom> from_leaves = from.leaves();
    const std::vector<DunnAtom> to_leaves = to.leaves();
    bool all_counterpart = true, all_value = true, all_membership = true, any_other = false;
    for (std::size_t i = 0; i < from_leaves.size(); ++i) {
      switch (leaf_delta(from_leaves[i], to_leaves[i])) {
        case LeafDelta::unchanged: break;
        case LeafDelta::counterpart: all_value = all_membership = false; break;
        case LeafDelta::value_only: all_counterpart = all_membership = false; break;
        case LeafDelta::membership_only: all_counterpart = all_value = false; break;
        case LeafDelta::other: any_other = true; break;
      }
    }
    if (!any_other) {
      if (all_counterpart) return ChangeKind::tweaking;
      if (all_value) return ChangeKind::c1_value_change;
      if (all_membership) return ChangeKind::c2_membership_change;
    }
    return ChangeKind::c5_mixed;
  }

  if (leaf_multisets_equal(from, to)) return ChangeKind::c3_relation_change;

  if (to.kind() == ConditionExpr::Kind::conjunction &&
      (to.child(0) == from || to.child(1) == from)) {
    return ChangeKind::c4_extra_condition;
  }

  return ChangeKind::c5_mixed;
}

}  // namespace dunn
