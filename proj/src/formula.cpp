#include "dunn/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace dunn {

struct Formula::Node {
  std::string name;            // atom name or connective symbol
  bool atom = true;
  std::vector<Formula> args;
};

bool is_valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw SpecError("invalid atom name '" + name + "' (expected [a-z][a-zA-Z0-9_]*)");
  }
  auto node = std::make_shared<Node>();
  node->name = std::move(name);
  node->atom = true;
  return Formula(std::move(node));
}

Formula Formula::apply(std::string symbol, std::vector<Formula> args) {
  auto node = std::make_shared<Node>();
  node->name = std::move(symbol);
  node->atom = false;
  node->args = std::move(args);
  return Formula(std::move(node));
}

bool Formula::is_atom() const { return node_->atom; }
const std::string& Formula::atom_name() const { return node_->name; }
const std::string& Formula::symbol() const { return node_->name; }
const std::vector<Formula>& Formula::args() const { return node_->args; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->atom != other.node_->atom || node_->name != other.node_->name) return false;
  if (node_->args.size() != other.node_->args.size()) return false;
  for (std::size_t i = 0; i < node_->args.size(); ++i) {
    if (!(node_->args[i] == other.node_->args[i])) return false;
  }
  return true;
}

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
  if (f.is_atom()) {
    out.insert(f.atom_name());
    return;
  }
  for (const Formula& arg : f.args()) collect_variables(arg, out);
}

}  // namespace

std::vector<std::string> variables(const Formula& f) {
  std::set<std::string> names;
  collect_variables(f, names);
  return {names.begin(), names.end()};
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& map) {
  if (f.is_atom()) {
    auto it = map.find(f.atom_name());
    return it == map.end() ? f : it->second;
  }
  std::vector<Formula> args;
  args.reserve(f.args().size());
  for (const Formula& arg : f.args()) args.push_back(substitute(arg, map));
  return Formula::apply(f.symbol(), std::move(args));
}

std::span<const BiconditionalMacro> biconditional_macros() {
  static const BiconditionalMacro macros[] = {
      {"<->w", "->w"},
      {"<=>", "=>"},
      {"<->", "->"},
  };
  return macros;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

struct FormulaToken {
  enum class Type { atom, connective, macro, lparen, rparen, end };
  Type type;
  std::string text;
  const ConnectiveSignature* signature = nullptr;  // Type::connective
  const BiconditionalMacro* macro = nullptr;       // Type::macro
  std::size_t offset = 0;
};

class FormulaLexer {
public:
  FormulaLexer(std::string_view text, std::span<const ConnectiveSignature> signatures)
      : text_(text), signatures_(signatures) {
    advance();
  }

  const FormulaToken& peek() const { return current_; }

  FormulaToken take() {
    FormulaToken t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_ = FormulaToken{};
    current_.offset = pos_;
    if (pos_ >= text_.size()) {
      current_.type = FormulaToken::Type::end;
      return;
    }
    const char c = text_[pos_];
    if (c == '(') {
      current_.type = FormulaToken::Type::lparen;
      ++pos_;
      return;
    }
    if (c == ')') {
      current_.type = FormulaToken::Type::rparen;
      ++pos_;
      return;
    }

    // Longest match wins, over connective tokens and macro tokens alike.
    std::string_view rest = text_.substr(pos_);
    const ConnectiveSignature* best_sig = nullptr;
    const BiconditionalMacro* best_macro = nullptr;
    std::size_t best_len = 0;
    for (const ConnectiveSignature& sig : signatures_) {
      if (sig.token.size() > best_len && rest.starts_with(sig.token)) {
        best_sig = &sig;
        best_macro = nullptr;
        best_len = sig.token.size();
      }
    }
    for (const BiconditionalMacro& macro : biconditional_macros()) {
      if (macro.token.size() > best_len && rest.starts_with(macro.token)) {
        best_macro = &macro;
        best_sig = nullptr;
        best_len = macro.token.size();
      }
    }
    if (best_len > 0) {
      current_.type = best_sig ? FormulaToken::Type::connective : FormulaToken::Type::macro;
      current_.signature = best_sig;
      current_.macro = best_macro;
      current_.text = std::string(rest.substr(0, best_len));
      pos_ += best_len;
      return;
    }

    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      current_.type = FormulaToken::Type::atom;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }

    throw ParseError(std::string("unknown token starting at '") + c + "'", pos_);
  }

  std::string_view text_;
  std::span<const ConnectiveSignature> signatures_;
  std::size_t pos_ = 0;
  FormulaToken current_;
};

// ---------------------------------------------------------------------------
// Parser: precedence climbing; unary is prefix and binds tightest.

constexpr int kMacroPrecedence = 5;

class FormulaParser {
public:
  FormulaParser(std::string_view text, std::span<const ConnectiveSignature> signatures)
      : lexer_(text, signatures), signatures_(signatures) {}

  Formula parse() {
    Formula f = parse_binary(0);
    const FormulaToken& t = lexer_.peek();
    if (t.type != FormulaToken::Type::end) {
      if (t.type == FormulaToken::Type::rparen) {
        throw ParseError("unbalanced ')'", t.offset);
      }
      throw ParseError("unexpected trailing input", t.offset);
    }
    return f;
  }

private:
  Formula parse_binary(int min_precedence) {
    Formula lhs = parse_unary();
    for (;;) {
      const FormulaToken& t = lexer_.peek();
      if (t.type == FormulaToken::Type::connective && t.signature->arity == 2) {
        const int prec = t.signature->precedence;
        if (prec < min_precedence) return lhs;
        FormulaToken op = lexer_.take();
        Formula rhs = parse_binary(prec + 1);  // ties associate to the left
        lhs = Formula::apply(op.signature->symbol, {std::move(lhs), std::move(rhs)});
      } else if (t.type == FormulaToken::Type::macro) {
        if (kMacroPrecedence < min_precedence) return lhs;
        FormulaToken op = lexer_.take();
        Formula rhs = parse_binary(kMacroPrecedence + 1);
        lhs = expand_macro(*op.macro, std::move(lhs), std::move(rhs), op.offset);
      } else {
        return lhs;
      }
    }
  }

  Formula parse_unary() {
    const FormulaToken& t = lexer_.peek();
    switch (t.type) {
      case FormulaToken::Type::atom: {
        FormulaToken a = lexer_.take();
        return Formula::atom(a.text);
      }
      case FormulaToken::Type::lparen: {
        FormulaToken open = lexer_.take();
        Formula inner = parse_binary(0);
        if (lexer_.peek().type != FormulaToken::Type::rparen) {
          throw ParseError("unbalanced '(' opened here", open.offset);
        }
        lexer_.take();
        return inner;
      }
      case FormulaToken::Type::connective: {
        if (t.signature->arity == 1) {
          FormulaToken op = lexer_.take();
          return Formula::apply(op.signature->symbol, {parse_unary()});
        }
        throw ParseError("binary connective '" + t.text + "' needs a left argument", t.offset);
      }
      case FormulaToken::Type::macro:
        throw ParseError("biconditional '" + t.text + "' needs a left argument", t.offset);
      case FormulaToken::Type::rparen:
        throw ParseError("unbalanced ')'", t.offset);
      case FormulaToken::Type::end:
        throw ParseError("unexpected end of input", t.offset);
    }
    throw ParseError("unexpected input", t.offset);
  }

  const ConnectiveSignature* find_token(std::string_view token) const {
    for (const ConnectiveSignature& sig : signatures_) {
      if (sig.token == token) return &sig;
    }
    return nullptr;
  }

  Formula expand_macro(const BiconditionalMacro& macro, Formula lhs, Formula rhs,
                       std::size_t offset) const {
    const ConnectiveSignature* conditional = find_token(macro.conditional);
    const ConnectiveSignature* conjunction = find_token("&");
    if (conditional == nullptr || conditional->arity != 2 || conjunction == nullptr ||
        conjunction->arity != 2) {
      throw ParseError("biconditional '" + std::string(macro.token) + "' needs connectives '" +
                           std::string(macro.conditional) + "' and '&' in the active logic",
                       offset);
    }
    Formula forward = Formula::apply(conditional->symbol, {lhs, rhs});
    Formula backward = Formula::apply(conditional->symbol, {std::move(rhs), std::move(lhs)});
    return Formula::apply(conjunction->symbol, {std::move(forward), std::move(backward)});
  }

  FormulaLexer lexer_;
  std::span<const ConnectiveSignature> signatures_;
};

}  // namespace

Formula parse_formula(std::string_view text, std::span<const ConnectiveSignature> signatures) {
  return FormulaParser(text, signatures).parse();
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

const ConnectiveSignature& require_signature(std::string_view symbol,
                                             std::span<const ConnectiveSignature> signatures) {
  for (const ConnectiveSignature& sig : signatures) {
    if (sig.symbol == symbol) return sig;
  }
  throw SpecError("unknown connective symbol '" + std::string(symbol) + "'");
}

constexpr int kAtomPrecedence = 1 << 20;

// Precedence for parenthesization as a child of an infix connective.
// Atoms and prefix applications never need parentheses there.
int formula_precedence(const Formula& f, std::span<const ConnectiveSignature> signatures) {
  if (f.is_atom()) return kAtomPrecedence;
  const ConnectiveSignature& sig = require_signature(f.symbol(), signatures);
  return sig.arity == 1 ? kAtomPrecedence : sig.precedence;
}

bool is_infix_application(const Formula& f, std::span<const ConnectiveSignature> signatures) {
  return !f.is_atom() && require_signature(f.symbol(), signatures).arity == 2;
}

bool is_token_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// True when `tail` may be appended to `token` without the lexer munching a
// longer token across the boundary.
bool safe_to_concatenate(const std::string& token, const std::string& tail,
                         std::span<const ConnectiveSignature> signatures) {
  if (tail.empty()) return true;
  if (is_token_char(token.back()) && is_token_char(tail.front())) return false;
  auto extends = [&](std::string_view other) {
    return other.size() > token.size() && other.substr(0, token.size()) == token &&
           other[token.size()] == tail.front();
  };
  for (const ConnectiveSignature& sig : signatures) {
    if (extends(sig.token)) return false;
  }
  for (const BiconditionalMacro& macro : biconditional_macros()) {
    if (extends(macro.token)) return false;
  }
  return true;
}

std::string render(const Formula& f, std::span<const ConnectiveSignature> signatures) {
  if (f.is_atom()) return f.atom_name();
  const ConnectiveSignature& sig = require_signature(f.symbol(), signatures);
  if (static_cast<int>(f.args().size()) != sig.arity) {
    throw SpecError("connective '" + f.symbol() + "' applied to " +
                    std::to_string(f.args().size()) + " argument(s), arity is " +
                    std::to_string(sig.arity));
  }
  if (sig.arity == 1) {
    std::string operand = render(f.args()[0], signatures);
    if (is_infix_application(f.args()[0], signatures)) return sig.token + "(" + operand + ")";
    if (safe_to_concatenate(sig.token, operand, signatures)) return sig.token + operand;
    return sig.token + " " + operand;
  }
  const Formula& lhs = f.args()[0];
  const Formula& rhs = f.args()[1];
  std::string left = render(lhs, signatures);
  std::string right = render(rhs, signatures);
  if (formula_precedence(lhs, signatures) < sig.precedence) left = "(" + left + ")";
  if (formula_precedence(rhs, signatures) <= sig.precedence) right = "(" + right + ")";
  return left + " " + sig.token + " " + right;
}

}  // namespace

std::string render_formula(const Formula& f, std::span<const ConnectiveSignature> signatures) {
  return render(f, signatures);
}

}  // namespace dunn
