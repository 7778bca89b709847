#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mst/errors.hpp"

namespace mst {

// Abstract syntax of the query DSL. `number` appears both as the literal `0`
// for the empty multiset and as the integer arguments of nat/iota/graph and
// sep weights; which reading applies is decided by the slot it occupies.
struct Expr {
  enum class Kind { empty, braces, var, call, number };

  Kind kind = Kind::empty;
  std::string name;                                  // var / call
  std::vector<Expr> args;                            // braces children / call args
  std::uint64_t value = 0;                           // number literal
  std::vector<std::pair<Expr, std::uint64_t>> rules; // sep family rules
  std::size_t offset = 0;
};

struct Command {
  enum class Kind {
    blank,       // empty line or comment
    let,
    eq,
    aeq,
    count_eq,
    count_mem,
    aut,
    ext,
    is_op,
    is_fun,
    is_zero,
    is_succ,
    canon,
    enumerate,
    selfcheck,
    load,
    save,
    help,
    bare_expr,
  };

  Kind kind = Kind::blank;
  std::string name;  // let binder, selfcheck suite filter, or file path
  std::vector<Expr> args;
  std::size_t rank = 0;
  std::size_t breadth = 0;
};

namespace detail {

struct Token {
  enum class Kind {
    lbrace,
    rbrace,
    lparen,
    rparen,
    comma,
    colon,
    equals,
    ident,
    number,
    end,
  };
  Kind kind;
  std::string text;
  std::uint64_t number = 0;
  std::size_t offset = 0;
};

inline const char* token_name(Token::Kind k) {
  switch (k) {
    case Token::Kind::lbrace: return "'{'";
    case Token::Kind::rbrace: return "'}'";
    case Token::Kind::lparen: return "'('";
    case Token::Kind::rparen: return "')'";
    case Token::Kind::comma: return "','";
    case Token::Kind::colon: return "':'";
    case Token::Kind::equals: return "'='";
    case Token::Kind::ident: return "identifier";
    case Token::Kind::number: return "integer";
    case Token::Kind::end: return "end of line";
  }
  return "?";
}

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

// Whitespace-insensitive between tokens; `#` starts a comment. `∅` lexes as
// the number 0 (the two spellings of the empty multiset coincide here).
inline std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '#') break;
    const std::size_t at = i;
    switch (c) {
      case '{': out.push_back({Token::Kind::lbrace, "{", 0, at}); ++i; continue;
      case '}': out.push_back({Token::Kind::rbrace, "}", 0, at}); ++i; continue;
      case '(': out.push_back({Token::Kind::lparen, "(", 0, at}); ++i; continue;
      case ')': out.push_back({Token::Kind::rparen, ")", 0, at}); ++i; continue;
      case ',': out.push_back({Token::Kind::comma, ",", 0, at}); ++i; continue;
      case ':': out.push_back({Token::Kind::colon, ":", 0, at}); ++i; continue;
      case '=': out.push_back({Token::Kind::equals, "=", 0, at}); ++i; continue;
      default: break;
    }
    if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < s.size() &&
        static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x85) {
      out.push_back({Token::Kind::number, "0", 0, at});
      i += 3;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      std::string text;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        const std::uint64_t d = static_cast<std::uint64_t>(s[i] - '0');
        if (v > (UINT64_MAX - d) / 10)
          throw ParseError(at, "integer literal too large", "a smaller integer");
        v = v * 10 + d;
        text += s[i];
        ++i;
      }
      out.push_back({Token::Kind::number, std::move(text), v, at});
      continue;
    }
    if (ident_start(c)) {
      std::string text;
      while (i < s.size() && ident_char(s[i])) {
        text += s[i];
        ++i;
      }
      out.push_back({Token::Kind::ident, std::move(text), 0, at});
      continue;
    }
    throw ParseError(at, std::string("unexpected character '") + c + "'",
                     "'{', '0', '∅', an integer or an identifier");
  }
  out.push_back({Token::Kind::end, "", 0, s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& line) : line_(line), toks_(lex(line)) {}

  Command parse_command() {
    if (peek().kind == Token::Kind::end) return Command{};
    if (peek().kind == Token::Kind::ident) {
      const std::string& kw = peek().text;
      if (kw == "let") return parse_let();
      if (kw == "eq") return fixed_arity(Command::Kind::eq, 2);
      if (kw == "aeq") return fixed_arity(Command::Kind::aeq, 2);
      if (kw == "count-eq") return fixed_arity(Command::Kind::count_eq, 2);
      if (kw == "count-mem") return fixed_arity(Command::Kind::count_mem, 2);
      if (kw == "aut") return fixed_arity(Command::Kind::aut, 1);
      if (kw == "ext") return fixed_arity(Command::Kind::ext, 2);
      if (kw == "is-op") return fixed_arity(Command::Kind::is_op, 3);
      if (kw == "is-fun") return fixed_arity(Command::Kind::is_fun, 3);
      if (kw == "is-zero") return fixed_arity(Command::Kind::is_zero, 1);
      if (kw == "is-succ") return fixed_arity(Command::Kind::is_succ, 2);
      if (kw == "canon") return fixed_arity(Command::Kind::canon, 1);
      if (kw == "enum") return parse_enum();
      if (kw == "selfcheck") return parse_selfcheck();
      if (kw == "help") {
        advance();
        expect_end();
        Command c;
        c.kind = Command::Kind::help;
        return c;
      }
    }
    Command c;
    c.kind = Command::Kind::bare_expr;
    c.args.push_back(parse_expr());
    expect_end();
    return c;
  }

  Expr parse_whole_expr() {
    Expr e = parse_expr();
    expect_end();
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }

  const Token& expect(Token::Kind k, const std::string& expected) {
    if (peek().kind != k)
      throw ParseError(peek().offset,
                       "unexpected " + std::string(token_name(peek().kind)) +
                           (peek().text.empty() ? "" : " '" + peek().text + "'"),
                       expected);
    return advance();
  }

  void expect_end() { expect(Token::Kind::end, "end of line"); }

  Command parse_let() {
    advance();
    Command c;
    c.kind = Command::Kind::let;
    c.name = expect(Token::Kind::ident, "a variable name").text;
    expect(Token::Kind::equals, "'='");
    c.args.push_back(parse_expr());
    expect_end();
    return c;
  }

  Command fixed_arity(Command::Kind kind, std::size_t n) {
    advance();
    Command c;
    c.kind = kind;
    for (std::size_t i = 0; i < n; ++i) c.args.push_back(parse_expr());
    expect_end();
    return c;
  }

  Command parse_enum() {
    advance();
    Command c;
    c.kind = Command::Kind::enumerate;
    expect_keyword("rank");
    expect(Token::Kind::equals, "'='");
    c.rank = static_cast<std::size_t>(
        expect(Token::Kind::number, "an integer").number);
    expect_keyword("breadth");
    expect(Token::Kind::equals, "'='");
    c.breadth = static_cast<std::size_t>(
        expect(Token::Kind::number, "an integer").number);
    expect_end();
    return c;
  }

  Command parse_selfcheck() {
    advance();
    Command c;
    c.kind = Command::Kind::selfcheck;
    if (peek().kind == Token::Kind::ident) c.name = advance().text;
    expect_end();
    return c;
  }

  Command parse_path(Command::Kind kind) {
    const Token& kw = advance();
    Command c;
    c.kind = kind;
    std::size_t from = kw.offset + kw.text.size();
    while (from < line_.size() &&
           (line_[from] == ' ' || line_[from] == '\t'))
      ++from;
    std::size_t to = line_.size();
    while (to > from && (line_[to - 1] == ' ' || line_[to - 1] == '\t' ||
                         line_[to - 1] == '\r' || line_[to - 1] == '\n'))
      --to;
    if (from >= to)
      throw ParseError(from, "missing file path", "a file path");
    c.name = line_.substr(from, to - from);
    pos_ = toks_.size() - 1;  // the remainder was consumed as a raw path
    return c;
  }

  void expect_keyword(const std::string& kw) {
    const Token& t = expect(Token::Kind::ident, "'" + kw + "'");
    if (t.text != kw)
      throw ParseError(t.offset, "unexpected identifier '" + t.text + "'",
                       "'" + kw + "'");
  }

  // expr := 0 | INT | '{' [expr, ...] '}' | IDENT | IDENT '(' args ')'
  Expr parse_expr() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::number: {
        advance();
        Expr e;
        e.kind = Expr::Kind::number;
        e.value = t.number;
        e.offset = t.offset;
        return e;
      }
      case Token::Kind::lbrace:
        return parse_braces();
      case Token::Kind::ident: {
        const Token id = advance();
        if (peek().kind == Token::Kind::lparen) return parse_call(id);
        Expr e;
        e.kind = Expr::Kind::var;
        e.name = id.text;
        e.offset = id.offset;
        return e;
      }
      default:
        throw ParseError(t.offset,
                         "unexpected " + std::string(token_name(t.kind)) +
                             (t.text.empty() ? "" : " '" + t.text + "'"),
                         "'0', '{', an integer, a variable or an operation");
    }
  }

  Expr parse_braces() {
    const Token& open = advance();
    Expr e;
    e.kind = Expr::Kind::braces;
    e.offset = open.offset;
    if (peek().kind == Token::Kind::rbrace) {
      advance();
      e.kind = Expr::Kind::empty;  // `{}` is the empty multiset
      return e;
    }
    for (;;) {
      e.args.push_back(parse_expr());
      if (peek().kind == Token::Kind::comma) {
        advance();
        continue;
      }
      expect(Token::Kind::rbrace, "',' or '}'");
      break;
    }
    return e;
  }

  Expr parse_call(const Token& id) {
    static const char* const kOps[] = {"sing", "pair", "opair", "kpair",
                                       "union", "prod", "exp",  "sep",
                                       "urep", "nat",  "iota",  "graph"};
    bool known = false;
    for (const char* op : kOps) known = known || id.text == op;
    if (!known)
      throw ParseError(id.offset, "unknown operation '" + id.text + "'",
                       "one of sing, pair, opair, kpair, union, prod, exp, "
                       "sep, urep, nat, iota, graph");

    Expr e;
    e.kind = Expr::Kind::call;
    e.name = id.text;
    e.offset = id.offset;
    advance();  // '('
    if (peek().kind != Token::Kind::rparen) {
      for (;;) {
        Expr arg = parse_expr();
        if (peek().kind == Token::Kind::colon) {
          const Token& colon = advance();
          if (e.name != "sep")
            throw ParseError(colon.offset,
                             "weight rules are only valid in sep(...)",
                             "',' or ')'");
          const Token& w = expect(Token::Kind::number, "an integer weight");
          e.rules.emplace_back(std::move(arg), w.number);
        } else {
          if (!e.rules.empty())
            throw ParseError(arg.offset, "plain argument after weight rules",
                             "a 'pattern : weight' rule");
          e.args.push_back(std::move(arg));
        }
        if (peek().kind == Token::Kind::comma) {
          advance();
          continue;
        }
        expect(Token::Kind::rparen, "',' or ')'");
        break;
      }
    } else {
      advance();
    }
    validate_call(e, id.offset);
    return e;
  }

  void validate_call(const Expr& e, std::size_t at) {
    auto need = [&](std::size_t n) {
      if (e.args.size() != n)
        throw ParseError(at, e.name + " takes " + std::to_string(n) +
                                 " argument" + (n == 1 ? "" : "s") + ", got " +
                                 std::to_string(e.args.size()),
                         std::to_string(n) + " arguments");
    };
    auto need_number = [&](const Expr& a, const char* what) {
      if (a.kind != Expr::Kind::number)
        throw ParseError(a.offset, std::string(e.name) + ": " + what +
                                       " must be an integer literal",
                         "an integer");
    };
    if (e.name == "sing" || e.name == "aut") need(1);
    else if (e.name == "pair" || e.name == "opair" || e.name == "kpair" ||
             e.name == "union" || e.name == "prod" || e.name == "exp")
      need(2);
    else if (e.name == "nat" || e.name == "iota") {
      need(1);
      need_number(e.args[0], "the argument");
    } else if (e.name == "graph") {
      if (e.args.size() < 2)
        throw ParseError(at, "graph takes a domain, a codomain and index "
                             "arguments",
                         "at least 2 arguments");
      for (std::size_t i = 2; i < e.args.size(); ++i)
        need_number(e.args[i], "an index argument");
    } else if (e.name == "urep") {
      if (e.args.empty())
        throw ParseError(at, "urep takes a base and one member per child",
                         "at least 1 argument");
    } else if (e.name == "sep") {
      if (e.args.size() != 1)
        throw ParseError(at,
                         "sep takes one multiset followed by weight rules",
                         "sep(x, pattern : weight, ...)");
    }
  }

  const std::string& line_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses one input line into a command. Blank lines and `#` comments yield a
// blank command.
inline Command parse_command(const std::string& line) {
  return detail::Parser(line).parse_command();
}

inline Expr parse_expr(const std::string& text) {
  return detail::Parser(text).parse_whole_expr();
}

}  // namespace mst
