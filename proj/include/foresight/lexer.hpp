#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "foresight/diagnostics.hpp"

namespace foresight::lang {

enum class TokKind {
  Ident,   // identifier or keyword (keywords resolved by the parser)
  QVar,    // ?name
  Number,  // numeric literal
  Prime,   // ' (next-step marker on cpf heads)
  Punct,   // single-character punctuation
  End,
};

struct Token {
  TokKind kind = TokKind::End;
  std::string text;   // identifier text or punctuation character
  double num = 0.0;   // value for Number
  SourcePos pos;

  bool is_punct(char c) const {
    return kind == TokKind::Punct && text.size() == 1 && text[0] == c;
  }
  bool is_ident(std::string_view s) const {
    return kind == TokKind::Ident && text == s;
  }
};

// Tokenizer for the modelling language.  Notable quirk: '-' continues an
// identifier when it is directly surrounded by identifier characters, so
// names like `obj-loc` and section keywords like `non-fluents` lex as one
// token.  Binary minus therefore needs whitespace (`a - b`), which matches
// how the shipped domain files are written.
class Lexer {
 public:
  Lexer(std::string_view src, std::string file)
      : src_(src), file_(std::move(file)) {}

  std::vector<Token> run(std::vector<Diagnostic>& diags) {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      Token t;
      t.pos = pos();
      if (at_end()) {
        t.kind = TokKind::End;
        out.push_back(t);
        break;
      }
      const char c = peek();
      if (is_ident_start(c)) {
        t.kind = TokKind::Ident;
        t.text = lex_name();
      } else if (c == '?') {
        get();
        if (!is_ident_start(peek())) {
          diags.push_back(error(t.pos, "expected a name after '?'"));
          continue;
        }
        t.kind = TokKind::QVar;
        t.text = "?" + lex_name();
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
        t.kind = TokKind::Number;
        t.num = lex_number(t.text, diags, t.pos);
      } else if (c == '\'') {
        get();
        t.kind = TokKind::Prime;
        t.text = "'";
      } else if (is_punct(c)) {
        get();
        t.kind = TokKind::Punct;
        t.text = std::string(1, c);
      } else {
        get();
        diags.push_back(error(t.pos, std::string("unexpected character '") + c + "'"));
        continue;
      }
      out.push_back(std::move(t));
    }
    return out;
  }

 private:
  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_punct(char c) {
    return std::string_view("{}()[];:,=&|~+-*").find(c) != std::string_view::npos;
  }

  std::string lex_name() {
    std::string s;
    s += get();
    while (!at_end()) {
      const char c = peek();
      if (is_ident_char(c)) {
        s += get();
      } else if (c == '-' && is_ident_char(peek(1))) {
        // Hyphen glues only when an identifier is already in progress and
        // another identifier character follows: `obj-loc` is one name,
        // `a - b` and `a -b` are both subtractions.
        s += get();
      } else {
        break;
      }
    }
    return s;
  }

  double lex_number(std::string& text, std::vector<Diagnostic>& diags,
                    SourcePos start) {
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                         peek() == '.')) {
      text += get();
    }
    // Exponent form (1e-3) — accepted for completeness.
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      std::size_t save = i_;
      std::string tail;
      tail += get();
      if (!at_end() && (peek() == '+' || peek() == '-')) tail += get();
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
          tail += get();
        text += tail;
      } else {
        i_ = save;  // not an exponent; leave 'e...' for the next token
      }
    }
    try {
      return std::stod(text);
    } catch (...) {
      diags.push_back(error(start, "malformed number '" + text + "'"));
      return 0.0;
    }
  }

  void skip_trivia() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        get();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  Diagnostic error(SourcePos p, std::string msg) const {
    return Diagnostic{Severity::Error, file_, p, "SyntaxError", std::move(msg)};
  }

  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
  }
  char get() {
    const char c = src_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  SourcePos pos() const { return SourcePos{line_, col_}; }

  std::string_view src_;
  std::string file_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace foresight::lang
