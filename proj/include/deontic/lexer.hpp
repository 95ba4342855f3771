#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

namespace deontic::detail {

enum class Tok {
  End,
  IriRef,      // <...>, text holds the IRI
  PName,       // prefix:local, text holds prefix, aux holds local
  BlankLabel,  // _:label, text holds label
  Var,         // ?name, text holds name
  String,      // text holds unescaped lexical form
  Word,        // bare identifier such as a, PREFIX, CONSTRUCT, @prefix
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Dot,
  Semicolon,
  Comma,
  Eq,
  Neq,
  AndAnd,
  OrOr,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::string aux;
  std::size_t line = 1, column = 1;
};

inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         static_cast<unsigned char>(c) >= 0x80;
}

// Shared tokenizer for Turtle documents and rule bodies.
// Error reporting is delegated to the caller through the Fail callback type.
template <class Fail>
class Lexer {
 public:
  Lexer(std::string_view src, Fail fail) : src_(src), fail_(fail) {}

  const Token& peek() {
    if (!has_peek_) {
      peeked_ = scan();
      has_peek_ = true;
    }
    return peeked_;
  }

  Token next() {
    if (has_peek_) {
      has_peek_ = false;
      return peeked_;
    }
    return scan();
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  char cur() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char at(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }
  bool done() const { return pos_ >= src_.size(); }

  void advance() {
    if (done()) return;
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    for (;;) {
      while (!done() && std::isspace(static_cast<unsigned char>(cur()))) advance();
      if (cur() == '#') {
        while (!done() && cur() != '\n') advance();
        continue;
      }
      return;
    }
  }

  std::string local_name() {
    std::string out;
    while (!done()) {
      char c = cur();
      if (is_name_char(c)) {
        out.push_back(c);
        advance();
      } else if (c == '.' && !out.empty() && is_name_char(at(1))) {
        out.push_back(c);
        advance();
      } else {
        break;
      }
    }
    return out;
  }

  Token scan() {
    skip_ws();
    Token t;
    t.line = line_;
    t.column = col_;
    if (done()) return t;
    char c = cur();
    auto single = [&](Tok k) {
      advance();
      t.kind = k;
      return t;
    };
    switch (c) {
      case '{': return single(Tok::LBrace);
      case '}': return single(Tok::RBrace);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '.': return single(Tok::Dot);
      case ';': return single(Tok::Semicolon);
      case ',': return single(Tok::Comma);
      case '=': return single(Tok::Eq);
      default: break;
    }
    if (c == '!' && at(1) == '=') {
      advance();
      return single(Tok::Neq);
    }
    if (c == '&' && at(1) == '&') {
      advance();
      return single(Tok::AndAnd);
    }
    if (c == '|' && at(1) == '|') {
      advance();
      return single(Tok::OrOr);
    }
    if (c == '<') {
      advance();
      while (!done() && cur() != '>') {
        if (std::isspace(static_cast<unsigned char>(cur()))) fail_("whitespace inside IRI", line_, col_);
        t.text.push_back(cur());
        advance();
      }
      if (done()) fail_("unterminated IRI", t.line, t.column);
      advance();
      t.kind = Tok::IriRef;
      return t;
    }
    if (c == '"' || c == '\'') return string_token(t, c);
    if ((c == '?' || c == '$') && is_name_char(at(1))) {
      advance();
      t.kind = Tok::Var;
      while (!done() && is_name_char(cur())) {
        t.text.push_back(cur());
        advance();
      }
      return t;
    }
    if (c == '_' && at(1) == ':') {
      advance();
      advance();
      t.kind = Tok::BlankLabel;
      t.text = local_name();
      if (t.text.empty()) fail_("empty blank node label", t.line, t.column);
      return t;
    }
    if (c == ':') {
      advance();
      t.kind = Tok::PName;
      t.aux = local_name();
      return t;
    }
    if (c == '@' || is_name_char(c)) {
      std::string word;
      if (c == '@') {
        word.push_back(c);
        advance();
      }
      while (!done() && is_name_char(cur())) {
        word.push_back(cur());
        advance();
      }
      if (cur() == ':' && word.front() != '@') {
        advance();
        t.kind = Tok::PName;
        t.text = word;
        t.aux = local_name();
        return t;
      }
      t.kind = Tok::Word;
      t.text = word;
      return t;
    }
    fail_(std::string("unexpected character '") + c + "'", line_, col_);
    return t;
  }

  Token string_token(Token& t, char q) {
    t.kind = Tok::String;
    bool is_long = at(1) == q && at(2) == q;
    if (is_long) {
      advance();
      advance();
      advance();
      // Long strings keep their content verbatim, escapes included.
      for (;;) {
        if (done()) fail_("unterminated long string", t.line, t.column);
        if (cur() == q && at(1) == q && at(2) == q) {
          // A run of more than three quotes ends with the last three.
          while (at(3) == q) {
            t.text.push_back(q);
            advance();
          }
          advance();
          advance();
          advance();
          return t;
        }
        t.text.push_back(cur());
        advance();
      }
    }
    advance();
    for (;;) {
      if (done() || cur() == '\n') fail_("unterminated string", t.line, t.column);
      char c = cur();
      if (c == q) {
        advance();
        return t;
      }
      if (c == '\\') {
        advance();
        char e = cur();
        switch (e) {
          case 'n': t.text.push_back('\n'); break;
          case 't': t.text.push_back('\t'); break;
          case 'r': t.text.push_back('\r'); break;
          case 'b': t.text.push_back('\b'); break;
          case 'f': t.text.push_back('\f'); break;
          case '"': t.text.push_back('"'); break;
          case '\'': t.text.push_back('\''); break;
          case '\\': t.text.push_back('\\'); break;
          default: fail_(std::string("unsupported escape \\") + e, line_, col_);
        }
        advance();
        continue;
      }
      t.text.push_back(c);
      advance();
    }
  }

  std::string_view src_;
  Fail fail_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  Token peeked_;
  bool has_peek_ = false;
};

}  // namespace deontic::detail
