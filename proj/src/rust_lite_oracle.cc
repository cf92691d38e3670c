// Copyright 2026 The Mutforge Project Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mutforge/rust_lite_oracle.h"

#include <array>
#include <cctype>
#include <string>

#include "mutforge/errors.h"
#include "mutforge/text_util.h"

namespace mutforge {
namespace {

enum class TokenKind { kIdent, kInt, kString, kChar, kLifetime, kPunct, kEof };

struct Token {
  TokenKind kind = TokenKind::kEof;
  std::string_view text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Internal failure signal; converted to ParseError or "no" at the API.
struct SyntaxFailure {
  std::size_t offset;
  std::string message;
};

constexpr std::array<std::string_view, 16> kLongPunct = {
    "..=", "::", "=>", "->", "==", "!=", "<=", ">=",
    "&&",  "||", "+=", "-=", "*=", "/=", "%=", ".."};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      SkipTrivia();
      if (pos_ >= text_.size()) {
        tokens.push_back({TokenKind::kEof, {}, pos_, pos_});
        return tokens;
      }
      tokens.push_back(Next());
    }
  }

 private:
  void SkipTrivia() {
    while (pos_ < text_.size()) {
      if (IsSpace(text_[pos_])) {
        ++pos_;
      } else if (text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          ++pos_;
        }
      } else if (text_.substr(pos_, 2) == "/*") {
        std::size_t start = pos_;
        int depth = 0;
        do {
          if (text_.substr(pos_, 2) == "/*") {
            ++depth;
            pos_ += 2;
          } else if (text_.substr(pos_, 2) == "*/") {
            --depth;
            pos_ += 2;
          } else if (pos_ >= text_.size()) {
            throw SyntaxFailure{start, "unterminated block comment"};
          } else {
            ++pos_;
          }
        } while (depth > 0);
      } else {
        return;
      }
    }
  }

  Token Make(TokenKind kind, std::size_t begin) {
    return {kind, text_.substr(begin, pos_ - begin), begin, pos_};
  }

  void QuotedBody(char quote, std::size_t begin) {
    while (true) {
      if (pos_ >= text_.size()) {
        throw SyntaxFailure{begin, "unterminated literal"};
      }
      char c = text_[pos_++];
      if (c == '\\') {
        ++pos_;
      } else if (c == quote) {
        return;
      }
    }
  }

  Token Next() {
    const std::size_t begin = pos_;
    const char c = text_[pos_];
    // Raw and byte strings.
    if ((c == 'r' || c == 'b') && pos_ + 1 < text_.size()) {
      std::size_t p = pos_ + 1;
      if (c == 'b' && text_[p] == 'r') {
        ++p;
      }
      if (c == 'b' && (text_[p] == '"' || text_[p] == '\'') && p == pos_ + 1) {
        pos_ = p + 1;
        QuotedBody(text_[p], begin);
        return Make(text_[p] == '"' ? TokenKind::kString : TokenKind::kChar, begin);
      }
      std::size_t hashes = 0;
      while (p < text_.size() && text_[p] == '#') {
        ++hashes;
        ++p;
      }
      if (p < text_.size() && text_[p] == '"' && (text_[pos_] == 'r' || p > pos_ + 1)) {
        std::string close = "\"" + std::string(hashes, '#');
        std::size_t end = text_.find(close, p + 1);
        if (end == std::string_view::npos) {
          throw SyntaxFailure{begin, "unterminated raw string"};
        }
        pos_ = end + close.size();
        return Make(TokenKind::kString, begin);
      }
    }
    if (IsIdentStart(c)) {
      while (pos_ < text_.size() && IsIdentChar(text_[pos_])) {
        ++pos_;
      }
      return Make(TokenKind::kIdent, begin);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && IsIdentChar(text_[pos_])) {
        ++pos_;
      }
      if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < text_.size() && IsIdentChar(text_[pos_])) {
          ++pos_;
        }
      }
      return Make(TokenKind::kInt, begin);
    }
    if (c == '"') {
      ++pos_;
      QuotedBody('"', begin);
      return Make(TokenKind::kString, begin);
    }
    if (c == '\'') {
      // 'x', '\n' or a lifetime 'a.
      if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '\\') {
        ++pos_;
        QuotedBody('\'', begin);
        return Make(TokenKind::kChar, begin);
      }
      if (pos_ + 2 < text_.size() && text_[pos_ + 2] == '\'') {
        pos_ += 3;
        return Make(TokenKind::kChar, begin);
      }
      ++pos_;
      while (pos_ < text_.size() && IsIdentChar(text_[pos_])) {
        ++pos_;
      }
      if (pos_ == begin + 1) {
        throw SyntaxFailure{begin, "stray quote"};
      }
      return Make(TokenKind::kLifetime, begin);
    }
    for (std::string_view punct : kLongPunct) {
      if (text_.substr(pos_, punct.size()) == punct) {
        pos_ += punct.size();
        return Make(TokenKind::kPunct, begin);
      }
    }
    if (std::string_view("+-*/%<>=!&|^()[]{},;:.?#@$~").find(c) ==
        std::string_view::npos) {
      throw SyntaxFailure{begin, std::string("unexpected character '") + c + "'"};
    }
    ++pos_;
    return Make(TokenKind::kPunct, begin);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool IsKeyword(std::string_view word) {
  static constexpr std::array<std::string_view, 28> kKeywords = {
      "as",    "break", "const", "continue", "else",   "enum",   "fn",
      "for",   "if",    "impl",  "in",       "let",    "loop",   "match",
      "mod",   "move",  "mut",   "pub",      "ref",    "return", "static",
      "struct", "type", "unsafe", "use",     "where",  "while",  "dyn"};
  for (std::string_view keyword : kKeywords) {
    if (word == keyword) {
      return true;
    }
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).Run()) {}

  void File() {
    int node = Open("file");
    while (!AtEof()) {
      Item();
    }
    Close(node);
  }

  void ExprUnit() {
    Expr();
    Expect(TokenKind::kEof);
  }

  // Statements up to end of input; fails on let and items.
  void StmtsUnit() {
    Stmts(/*units_only=*/true);
    Expect(TokenKind::kEof);
  }

  std::vector<NodeSpan> TakeNodes() { return std::move(nodes_); }

 private:
  // ---- token helpers ----

  const Token& Peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool AtEof() const { return Peek().kind == TokenKind::kEof; }
  bool Is(std::string_view text, std::size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return (t.kind == TokenKind::kPunct || t.kind == TokenKind::kIdent) &&
           t.text == text;
  }
  bool IsIdentToken(std::size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == TokenKind::kIdent && !IsKeyword(t.text);
  }
  const Token& Advance() {
    const Token& t = tokens_[pos_];
    last_end_ = t.end;
    if (t.kind != TokenKind::kEof) {
      ++pos_;
    }
    return t;
  }
  bool Accept(std::string_view text) {
    if (Is(text)) {
      Advance();
      return true;
    }
    return false;
  }
  [[noreturn]] void Error(const std::string& expected) const {
    const Token& t = Peek();
    std::string found = t.kind == TokenKind::kEof
                            ? std::string("end of input")
                            : "'" + std::string(t.text) + "'";
    throw SyntaxFailure{t.begin, "expected " + expected + ", found " + found};
  }
  void Expect(std::string_view text) {
    if (!Accept(text)) {
      Error("'" + std::string(text) + "'");
    }
  }
  void Expect(TokenKind kind) {
    if (Peek().kind != kind) {
      Error(kind == TokenKind::kEof ? "end of input" : "token");
    }
    Advance();
  }
  void ExpectIdent() {
    if (!IsIdentToken() && !Is("self") && !Is("Self") && !Is("crate") &&
        !Is("super")) {
      Error("identifier");
    }
    Advance();
  }

  // ---- node bookkeeping ----

  int Open(const char* kind) {
    int parent = stack_.empty() ? -1 : stack_.back();
    nodes_.push_back({Peek().begin, Peek().begin, kind, parent});
    stack_.push_back(static_cast<int>(nodes_.size()) - 1);
    return stack_.back();
  }
  // Opens a node that starts at |child| and adopts it.
  int OpenAround(int child, const char* kind) {
    nodes_.push_back({nodes_[child].begin, nodes_[child].begin, kind,
                      nodes_[child].parent});
    int node = static_cast<int>(nodes_.size()) - 1;
    nodes_[child].parent = node;
    stack_.push_back(node);
    return node;
  }
  void Close(int node) {
    nodes_[node].end = std::max(last_end_, nodes_[node].begin);
    stack_.pop_back();
  }

  // Skips a balanced (), [], {} or <> group starting at the current token.
  void SkipGroup() {
    const std::string_view open = Peek().text;
    const std::string_view close = open == "(" ? ")"
                                   : open == "[" ? "]"
                                   : open == "{" ? "}"
                                                 : ">";
    int depth = 0;
    do {
      if (AtEof()) {
        Error("'" + std::string(close) + "'");
      }
      if (Is(open)) {
        ++depth;
      } else if (Is(close)) {
        --depth;
      }
      Advance();
    } while (depth > 0);
  }

  // ---- items ----

  bool AtItemStart() const {
    return Is("#") || Is("fn") || Is("use") || Is("mod") || Is("const") ||
           Is("static") || Is("struct") || Is("enum") || Is("impl") ||
           Is("type") || Is("pub") || (Is("unsafe") && Is("fn", 1));
  }

  void Item() {
    int node = Open("item");
    while (Is("#")) {
      Advance();
      Accept("!");
      if (!Is("[")) {
        Error("'['");
      }
      SkipGroup();
    }
    if (Accept("pub") && Is("(")) {
      SkipGroup();
    }
    if (Is("const") && Is("fn", 1)) {
      Advance();
    }
    Accept("unsafe");
    if (Accept("fn")) {
      ExpectIdent();
      if (Is("<")) {
        SkipGroup();
      }
      Expect("(");
      while (!Is(")")) {
        Param();
        if (!Accept(",")) {
          break;
        }
      }
      Expect(")");
      if (Accept("->")) {
        Type();
      }
      if (Is("where")) {
        while (!Is("{") && !AtEof()) {
          Advance();
        }
      }
      if (!Accept(";")) {
        Block();
      }
    } else if (Accept("use")) {
      while (!Is(";") && !AtEof()) {
        if (Is("{")) {
          SkipGroup();
        } else {
          Advance();
        }
      }
      Expect(";");
    } else if (Accept("mod")) {
      ExpectIdent();
      if (Accept("{")) {
        while (!Is("}")) {
          if (AtEof()) {
            Error("'}'");
          }
          Item();
        }
        Expect("}");
      } else {
        Expect(";");
      }
    } else if (Accept("const") || Accept("static")) {
      Accept("mut");
      ExpectIdent();
      Expect(":");
      Type();
      if (Accept("=")) {
        Expr();
      }
      Expect(";");
    } else if (Accept("struct") || Accept("enum")) {
      ExpectIdent();
      if (Is("<")) {
        SkipGroup();
      }
      if (Is("(")) {
        SkipGroup();
        Expect(";");
      } else if (Is("{")) {
        SkipGroup();
      } else {
        Expect(";");
      }
    } else if (Accept("impl")) {
      if (Is("<")) {
        SkipGroup();
      }
      Type();
      if (Accept("for")) {
        Type();
      }
      Expect("{");
      while (!Is("}")) {
        if (AtEof()) {
          Error("'}'");
        }
        Item();
      }
      Expect("}");
    } else if (Accept("type")) {
      ExpectIdent();
      Expect("=");
      Type();
      Expect(";");
    } else {
      Error("item");
    }
    Close(node);
  }

  void Param() {
    if (Is("&") && (Is("self", 1) || (Is("mut", 1) && Is("self", 2)))) {
      Advance();
      Accept("mut");
      Advance();
      return;
    }
    if (Is("self") || (Is("mut") && Is("self", 1))) {
      Accept("mut");
      Advance();
      return;
    }
    Pattern();
    Expect(":");
    Type();
  }

  void Type() {
    int node = Open("type");
    if (Accept("&") || Accept("&&")) {
      if (Peek().kind == TokenKind::kLifetime) {
        Advance();
      }
      Accept("mut");
      Type();
    } else if (Is("(")) {
      Advance();
      while (!Is(")")) {
        Type();
        if (!Accept(",")) {
          break;
        }
      }
      Expect(")");
    } else if (Accept("[")) {
      Type();
      if (Accept(";")) {
        Expr();
      }
      Expect("]");
    } else if (Accept("_") || Accept("!")) {
    } else if (Accept("fn")) {
      if (!Is("(")) {
        Error("'('");
      }
      SkipGroup();
      if (Accept("->")) {
        Type();
      }
    } else {
      Accept("impl");
      Accept("dyn");
      TypePath();
      while (Accept("+")) {
        if (Peek().kind == TokenKind::kLifetime) {
          Advance();
        } else {
          TypePath();
        }
      }
    }
    Close(node);
  }

  void TypePath() {
    Accept("::");
    do {
      ExpectIdent();
      if (Is("<")) {
        SkipGroup();
      }
    } while (Accept("::"));
  }

  // ---- statements ----

  static bool StartsBlockLike(const Parser& p) {
    return p.Is("{") || p.Is("if") || p.Is("match") || p.Is("while") ||
           p.Is("loop") || p.Is("for") || (p.Is("unsafe") && p.Is("{", 1));
  }

  int Block() {
    int node = Open("block");
    Expect("{");
    Stmts(/*units_only=*/false);
    Expect("}");
    Close(node);
    return node;
  }

  void Stmts(bool units_only) {
    while (!Is("}") && !AtEof()) {
      if (Accept(";")) {
        continue;
      }
      if (Is("let")) {
        if (units_only) {
          Error("statement without 'let'");
        }
        int node = Open("stmt");
        Advance();
        Pattern();
        if (Accept(":")) {
          Type();
        }
        if (Accept("=")) {
          Expr();
          if (Is("else")) {
            Advance();
            Block();
          }
        }
        Expect(";");
        Close(node);
        continue;
      }
      if (AtItemStart()) {
        if (units_only) {
          Error("statement");
        }
        Item();
        continue;
      }
      int node = Open("stmt");
      if (StartsBlockLike(*this)) {
        int primary = Primary();
        if (Is(".") || Is("?")) {
          // A method call on a block-like expression continues it.
          PostfixFrom(primary);
        }
        Accept(";");
      } else {
        Expr();
        if (!Accept(";") && !Is("}") && !AtEof()) {
          Error("';'");
        }
      }
      Close(node);
    }
  }

  // ---- expressions ----

  void Expr() {
    int lhs = BinaryExpr(0);
    if (Is("=") || Is("+=") || Is("-=") || Is("*=") || Is("/=") || Is("%=")) {
      int node = OpenAround(lhs, "expr");
      Advance();
      Expr();
      Close(node);
    }
  }

  static int Precedence(const Parser& p) {
    const Token& t = p.Peek();
    if (t.kind != TokenKind::kPunct && !(t.kind == TokenKind::kIdent && t.text == "as")) {
      return -1;
    }
    const std::string_view op = t.text;
    if (op == "..") return 0;
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" ||
        op == ">=") {
      return 3;
    }
    if (op == "|") return 4;
    if (op == "^") return 5;
    if (op == "&") return 6;
    if (op == "+" || op == "-") return 7;
    if (op == "*" || op == "/" || op == "%") return 8;
    if (op == "as") return 9;
    return -1;
  }

  // Precedence climbing; returns the node index of the parsed expression.
  int BinaryExpr(int min_prec) {
    int lhs = Unary();
    while (true) {
      int prec = Precedence(*this);
      if (prec < min_prec || prec < 0) {
        return lhs;
      }
      int node = OpenAround(lhs, "expr");
      bool cast = Is("as");
      Advance();
      if (cast) {
        Type();
      } else {
        BinaryExpr(prec + 1);
      }
      Close(node);
      lhs = node;
    }
  }

  int Unary() {
    if (Is("-") || Is("!") || Is("*") || Is("&") || Is("&&")) {
      int node = Open("expr");
      Advance();
      Accept("mut");
      Unary();
      Close(node);
      return node;
    }
    int primary = Primary();
    return PostfixFrom(primary);
  }

  int PostfixFrom(int expr) {
    while (true) {
      if (Is("(")) {
        int node = OpenAround(expr, "expr");
        Args(")");
        Close(node);
        expr = node;
      } else if (Is(".")) {
        int node = OpenAround(expr, "expr");
        Advance();
        if (Peek().kind == TokenKind::kInt) {
          Advance();
        } else {
          ExpectIdent();
          if (Accept("::")) {
            if (!Is("<")) {
              Error("'<'");
            }
            SkipGroup();
          }
          if (Is("(")) {
            Args(")");
          }
        }
        Close(node);
        expr = node;
      } else if (Is("[")) {
        int node = OpenAround(expr, "expr");
        Advance();
        Expr();
        Expect("]");
        Close(node);
        expr = node;
      } else if (Is("?")) {
        int node = OpenAround(expr, "expr");
        Advance();
        Close(node);
        expr = node;
      } else {
        return expr;
      }
    }
  }

  void Args(std::string_view close) {
    Advance();
    while (!Is(close)) {
      Expr();
      if (!Accept(",")) {
        break;
      }
    }
    Expect(close);
  }

  bool StartsExpr() const {
    const Token& t = Peek();
    if (t.kind == TokenKind::kEof) {
      return false;
    }
    if (t.kind != TokenKind::kPunct) {
      return t.kind != TokenKind::kIdent || !IsKeyword(t.text) || Is("if") ||
             Is("match") || Is("loop") || Is("while") || Is("for") ||
             Is("return") || Is("break") || Is("continue") || Is("move") ||
             Is("unsafe");
    }
    return Is("(") || Is("[") || Is("{") || Is("-") || Is("!") || Is("*") ||
           Is("&") || Is("&&") || Is("|") || Is("||") || Is("::");
  }

  int Primary() {
    const Token& t = Peek();
    if (t.kind == TokenKind::kInt || t.kind == TokenKind::kString ||
        t.kind == TokenKind::kChar) {
      int node = Open("expr");
      Advance();
      Close(node);
      return node;
    }
    if (Is("{")) {
      return Block();
    }
    if (Is("unsafe") && Is("{", 1)) {
      int node = Open("expr");
      Advance();
      Block();
      Close(node);
      return node;
    }
    if (Is("(")) {
      int node = Open("expr");
      Args(")");
      Close(node);
      return node;
    }
    if (Is("[")) {
      int node = Open("expr");
      Advance();
      if (!Is("]")) {
        Expr();
        if (Accept(";")) {
          Expr();
        } else {
          while (Accept(",") && !Is("]")) {
            Expr();
          }
        }
      }
      Expect("]");
      Close(node);
      return node;
    }
    if (Is("if")) {
      return If();
    }
    if (Is("match")) {
      int node = Open("match");
      Advance();
      Expr();
      Expect("{");
      while (!Is("}")) {
        if (AtEof()) {
          Error("'}'");
        }
        Arm();
      }
      Expect("}");
      Close(node);
      return node;
    }
    if (Is("while")) {
      int node = Open("expr");
      Advance();
      if (Accept("let")) {
        Pattern();
        Expect("=");
      }
      Expr();
      Block();
      Close(node);
      return node;
    }
    if (Is("loop")) {
      int node = Open("expr");
      Advance();
      Block();
      Close(node);
      return node;
    }
    if (Is("for")) {
      int node = Open("expr");
      Advance();
      Pattern();
      Expect("in");
      Expr();
      Block();
      Close(node);
      return node;
    }
    if (Is("return") || Is("break") || Is("continue")) {
      int node = Open("expr");
      bool takes_value = !Is("continue");
      Advance();
      if (takes_value && StartsExpr()) {
        Expr();
      }
      Close(node);
      return node;
    }
    if (Is("move") || Is("|") || Is("||")) {
      int node = Open("expr");
      Accept("move");
      if (!Accept("||")) {
        Expect("|");
        while (!Is("|")) {
          Pattern();
          if (Accept(":")) {
            Type();
          }
          if (!Accept(",")) {
            break;
          }
        }
        Expect("|");
      }
      if (Accept("->")) {
        Type();
        Block();
      } else {
        Expr();
      }
      Close(node);
      return node;
    }
    if (IsIdentToken() || Is("self") || Is("Self") || Is("crate") ||
        Is("super") || Is("::")) {
      int node = Open("expr");
      Accept("::");
      ExpectIdent();
      while (Accept("::")) {
        if (Is("<")) {
          SkipGroup();
        } else {
          ExpectIdent();
        }
      }
      if (Is("!") && (Is("(", 1) || Is("[", 1) || Is("{", 1))) {
        Advance();
        SkipGroup();
      }
      Close(node);
      return node;
    }
    Error("expression");
  }

  int If() {
    int node = Open("expr");
    Expect("if");
    if (Accept("let")) {
      Pattern();
      Expect("=");
    }
    Expr();
    Block();
    if (Accept("else")) {
      if (Is("if")) {
        If();
      } else {
        Block();
      }
    }
    Close(node);
    return node;
  }

  void Arm() {
    int node = Open("arm");
    int pattern = Open("pattern");
    Accept("|");
    PatternNoAlt();
    while (Accept("|")) {
      PatternNoAlt();
    }
    Close(pattern);
    if (Is("if")) {
      Advance();
      int guard = Open("guard");
      Expr();
      Close(guard);
    }
    Expect("=>");
    if (StartsBlockLike(*this)) {
      int body = Primary();
      if (Is(".") || Is("?")) {
        PostfixFrom(body);
      }
      Accept(",");
    } else {
      Expr();
      if (!Accept(",") && !Is("}")) {
        Error("',' or '}'");
      }
    }
    Close(node);
  }

  // ---- patterns ----

  void Pattern() {
    int node = Open("pattern");
    PatternNoAlt();
    Close(node);
  }

  void PatternNoAlt() {
    if (Accept("_") || Accept("..")) {
      return;
    }
    if (Accept("&") || Accept("&&")) {
      Accept("mut");
      PatternNoAlt();
      return;
    }
    if (Is("(") || Is("[")) {
      std::string_view close = Is("(") ? ")" : "]";
      Advance();
      while (!Is(close)) {
        PatternNoAlt();
        if (!Accept(",")) {
          break;
        }
      }
      Expect(close);
      return;
    }
    if (Accept("-")) {
      if (Peek().kind != TokenKind::kInt) {
        Error("number");
      }
    }
    const Token& t = Peek();
    if (t.kind == TokenKind::kInt || t.kind == TokenKind::kString ||
        t.kind == TokenKind::kChar) {
      Advance();
      if (Accept("..=") || Accept("..")) {
        Accept("-");
        Advance();
      }
      return;
    }
    Accept("ref");
    Accept("mut");
    Accept("::");
    ExpectIdent();
    while (Accept("::")) {
      ExpectIdent();
    }
    if (Accept("@")) {
      PatternNoAlt();
    } else if (Is("(")) {
      Advance();
      while (!Is(")")) {
        PatternNoAlt();
        if (!Accept(",")) {
          break;
        }
      }
      Expect(")");
    } else if (Is("{")) {
      SkipGroup();
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_end_ = 0;
  std::vector<NodeSpan> nodes_;
  std::vector<int> stack_;
};

}  // namespace

bool RustLiteOracle::Handles(std::string_view path) const {
  return EndsWith(path, ".rs");
}

bool RustLiteOracle::ParseFile(std::string_view text) const {
  try {
    Parser(text).File();
    return true;
  } catch (const SyntaxFailure&) {
    return false;
  }
}

std::vector<NodeSpan> RustLiteOracle::NodeSpans(std::string_view text) const {
  try {
    Parser parser(text);
    parser.File();
    return parser.TakeNodes();
  } catch (const SyntaxFailure& failure) {
    std::size_t line = 1 + CountNewlines(text.substr(0, failure.offset));
    Fail(ErrorKind::kParseError,
         "line " + std::to_string(line) + ": " + failure.message);
  }
}

std::optional<UnitCategory> RustLiteOracle::ParseUnit(std::string_view text) const {
  try {
    Parser(text).ExprUnit();
    return UnitCategory::kExpr;
  } catch (const SyntaxFailure&) {
  }
  try {
    Parser(text).StmtsUnit();
    return UnitCategory::kStmts;
  } catch (const SyntaxFailure&) {
  }
  return std::nullopt;
}

}  // namespace mutforge
