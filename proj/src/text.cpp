#include "monolat/text.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <optional>

namespace monolat {

sign_structure::sign_structure(std::vector<sign> signs) : signs_(std::move(signs)) {
  check_dimension(static_cast<int>(signs_.size()));
}

sign_structure sign_structure::all_positive(int p) {
  check_dimension(p);
  return sign_structure(std::vector<sign>(p, sign::positive));
}

sign_structure sign_structure::parse(std::string_view text, int p) {
  std::vector<sign> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '+')
      out.push_back(sign::positive);
    else if (c == '-')
      out.push_back(sign::negative);
    else if (c != ',' && !std::isspace(static_cast<unsigned char>(c)))
      throw parse_error(error_code::syntax_error, i, "sign must be '+' or '-'");
  }
  if (static_cast<int>(out.size()) != p)
    throw error(error_code::dimension_mismatch,
                "sign structure has " + std::to_string(out.size()) + " entries, expected " +
                    std::to_string(p));
  return sign_structure(std::move(out));
}

bool sign_structure::all_positive() const noexcept {
  for (auto s : signs_)
    if (s != sign::positive) return false;
  return true;
}

std::string sign_structure::to_string() const {
  std::string out;
  for (auto s : signs_) out += static_cast<char>(s);
  return out;
}

namespace {

struct literal {
  int variable;
  bool negated;
  std::size_t position;
};

using raw_clause = std::vector<literal>;

class cursor {
 public:
  explicit cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int number() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("index too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a variable index");
    return static_cast<int>(value);
  }
  std::size_t position() {
    skip_space();
    return pos_;
  }
  [[noreturn]] void fail(const std::string& what) {
    if (pos_ >= text_.size()) throw parse_error(error_code::syntax_error, pos_, what + ", got end of input");
    throw parse_error(error_code::syntax_error, pos_,
                      what + ", got '" + std::string(1, text_[pos_]) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Body of one clause after its opening brace, through the closing brace.
raw_clause parse_clause_body(cursor& in) {
  if (in.peek() == '}') throw parse_error(error_code::empty_clause, in.position(), "empty clause");
  raw_clause out;
  do {
    const std::size_t at = in.position();
    const bool negated = in.accept('-');
    out.push_back({in.number(), negated, at});
  } while (in.accept(','));
  in.expect('}');
  return out;
}

std::vector<raw_clause> parse_sets(cursor& in) {
  std::vector<raw_clause> clauses;
  in.expect('{');
  const bool outer = in.peek() == '{';
  if (outer) {
    do {
      in.expect('{');
      clauses.push_back(parse_clause_body(in));
    } while (in.accept(','));
    in.expect('}');
  } else {
    clauses.push_back(parse_clause_body(in));
    while (in.accept(',')) {
      in.expect('{');
      clauses.push_back(parse_clause_body(in));
    }
  }
  if (!in.at_end()) in.fail("unexpected trailing input");
  return clauses;
}

struct node {
  enum kind_t { var, neg, conj, disj } kind;
  std::size_t position;
  int variable = 0;
  std::vector<std::unique_ptr<node>> children;
};

std::unique_ptr<node> make_node(node::kind_t kind, std::size_t position) {
  auto n = std::make_unique<node>();
  n->kind = kind;
  n->position = position;
  return n;
}

class expr_parser {
 public:
  explicit expr_parser(cursor& in) : in_(in) {}

  std::unique_ptr<node> parse() {
    auto root = disjunction();
    if (!in_.at_end()) in_.fail("unexpected trailing input");
    return root;
  }

 private:
  std::unique_ptr<node> disjunction() {
    auto first = conjunction();
    if (in_.peek() != '|') return first;
    auto out = make_node(node::disj, first->position);
    out->children.push_back(std::move(first));
    while (in_.accept('|')) out->children.push_back(conjunction());
    return out;
  }

  std::unique_ptr<node> conjunction() {
    auto first = unary();
    if (in_.peek() != '&') return first;
    auto out = make_node(node::conj, first->position);
    out->children.push_back(std::move(first));
    while (in_.accept('&')) out->children.push_back(unary());
    return out;
  }

  std::unique_ptr<node> unary() {
    const std::size_t at = in_.position();
    if (in_.accept('!')) {
      auto out = make_node(node::neg, at);
      out->children.push_back(unary());
      return out;
    }
    if (in_.accept('(')) {
      auto inner = disjunction();
      in_.expect(')');
      return inner;
    }
    if (in_.accept('x') || in_.accept('X')) {
      auto out = make_node(node::var, at);
      out->variable = in_.number();
      return out;
    }
    in_.fail("expected a literal such as x1, '!' or '('");
  }

  cursor& in_;
};

void collect_literals(const node& n, raw_clause& out) {
  switch (n.kind) {
    case node::var:
      out.push_back({n.variable, false, n.position});
      return;
    case node::neg:
      if (n.children[0]->kind != node::var)
        throw parse_error(error_code::not_dnf, n.position, "negation applies only to a variable");
      out.push_back({n.children[0]->variable, true, n.position});
      return;
    case node::conj:
      for (const auto& c : n.children) collect_literals(*c, out);
      return;
    case node::disj:
      throw parse_error(error_code::not_dnf, n.position,
                        "expression is not a disjunction of conjunctions");
  }
}

void collect_clauses(const node& n, std::vector<raw_clause>& out) {
  if (n.kind == node::disj) {
    for (const auto& c : n.children) collect_clauses(*c, out);
    return;
  }
  out.emplace_back();
  collect_literals(n, out.back());
}

parsed_function build(const std::vector<raw_clause>& clauses, int p) {
  check_dimension(p);
  std::vector<std::optional<sign>> signs(p);
  std::vector<mask_t> masks;
  for (const auto& c : clauses) {
    mask_t m = 0;
    for (const auto& lit : c) {
      if (lit.variable < 1 || lit.variable > p)
        throw parse_error(error_code::index_out_of_range, lit.position,
                          "variable " + std::to_string(lit.variable) + " outside 1.." +
                              std::to_string(p));
      const sign s = lit.negated ? sign::negative : sign::positive;
      auto& seen = signs[lit.variable - 1];
      if (seen && *seen != s)
        throw parse_error(error_code::mixed_sign, lit.position,
                          "variable " + std::to_string(lit.variable) +
                              " occurs both positively and negatively");
      seen = s;
      if (m & bit_of(lit.variable))
        throw parse_error(error_code::syntax_error, lit.position,
                          "variable " + std::to_string(lit.variable) + " repeated within a clause");
      m |= bit_of(lit.variable);
    }
    masks.push_back(m);
  }
  auto function = function_rep::from_masks(std::move(masks), p);
  std::vector<sign> resolved;
  for (const auto& s : signs) resolved.push_back(s.value_or(sign::positive));
  return {std::move(function), sign_structure(std::move(resolved))};
}

}  // namespace

parsed_function parse_function(std::string_view text, int p) {
  check_dimension(p);
  cursor in(text);
  if (in.at_end()) throw parse_error(error_code::syntax_error, 0, "empty function text");
  if (in.peek() == '{') return build(parse_sets(in), p);
  expr_parser parser(in);
  const auto root = parser.parse();
  std::vector<raw_clause> clauses;
  collect_clauses(*root, clauses);
  return build(clauses, p);
}

text_style parse_text_style(std::string_view name) {
  if (name == "sets") return text_style::sets;
  if (name == "expr") return text_style::expr;
  throw error(error_code::invalid_argument, "style must be 'sets' or 'expr'");
}

std::string render_function(const function_rep& f, const sign_structure& signs, text_style style) {
  if (signs.size() != f.dimension())
    throw error(error_code::dimension_mismatch,
                "sign structure of length " + std::to_string(signs.size()) +
                    " for a function of dimension " + std::to_string(f.dimension()));
  std::string out;
  for (mask_t m : f.masks()) {
    if (!out.empty()) out += style == text_style::sets ? "," : " | ";
    if (style == text_style::sets) out += '{';
    bool first = true;
    for (int i : indices_of(m)) {
      if (!first) out += style == text_style::sets ? "," : " & ";
      first = false;
      const bool negative = signs[i] == sign::negative;
      if (style == text_style::sets)
        out += (negative ? "-" : "") + std::to_string(i);
      else
        out += (negative ? "!x" : "x") + std::to_string(i);
    }
    if (style == text_style::sets) out += '}';
  }
  return out;
}

}  // namespace monolat
