#include "lsb/lexer.hpp"

#include <cctype>
#include <cstring>

namespace lsb {

namespace {

std::string format(const std::string& source, const SourcePos& p, const std::string& msg, const std::string& st) {
  std::string s = source + ":" + std::to_string(p.line) + ":" + std::to_string(p.col) + ": " + msg;
  if (!st.empty()) s += " in `" + st + "`";
  return s;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

const char* kPunct = "{}[](),;:=+-*/^\\<>";

}  // namespace

ParseError::ParseError(Kind k, std::string src, SourcePos p, std::string msg, std::string st)
    : std::runtime_error(format(src, p, msg, st)),
      kind(k),
      source(std::move(src)),
      pos(p),
      message(std::move(msg)),
      statement(std::move(st)) {}

TokenStream::TokenStream(std::string text, std::string source) : text_(std::move(text)), source_(std::move(source)) {
  SourcePos p;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (text_[i] == '\n') {
        ++p.line;
        p.col = 1;
      } else {
        ++p.col;
      }
    }
    p.offset = i;
  };
  while (i < text_.size()) {
    char c = text_[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text_.size() && text_[i] != '\n') advance(1);
      continue;
    }
    Token t{Tok::Punct, "", p};
    if (ident_start(c)) {
      size_t j = i;
      while (j < text_.size() && ident_char(text_[j])) ++j;
      t.kind = Tok::Ident;
      t.text = text_.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      t.kind = Tok::Number;
      t.text = text_.substr(i, j - i);
      if (j < text_.size() && text_[j] == 'i' && (j + 1 >= text_.size() || !ident_char(text_[j + 1]))) {
        t.kind = Tok::Imag;
        advance(j - i + 1);
      } else if (j < text_.size() && ident_start(text_[j])) {
        fail(ParseError::Kind::Lexical, p, "malformed number '" + text_.substr(i, j - i + 1) + "'");
      } else {
        advance(j - i);
      }
    } else if (c == '"') {
      size_t j = i + 1;
      std::string s;
      while (j < text_.size() && text_[j] != '"' && text_[j] != '\n') s += text_[j++];
      if (j >= text_.size() || text_[j] != '"') fail(ParseError::Kind::Lexical, p, "unterminated string");
      t.kind = Tok::String;
      t.text = s;
      advance(j - i + 1);
    } else if (std::strchr(kPunct, c)) {
      t.text = std::string(1, c);
      advance(1);
    } else {
      fail(ParseError::Kind::Lexical, p, std::string("unexpected character '") + c + "'");
    }
    t.end = i;
    toks_.push_back(std::move(t));
  }
  toks_.push_back({Tok::End, "", p, i});
}

const Token& TokenStream::peek(int ahead) const {
  size_t k = std::min(at_ + ahead, toks_.size() - 1);
  return toks_[k];
}

Token TokenStream::next() {
  Token t = peek();
  if (at_ < toks_.size() - 1) ++at_;
  return t;
}

bool TokenStream::is_punct(const char* p, int ahead) const {
  auto& t = peek(ahead);
  return t.kind == Tok::Punct && t.text == p;
}

bool TokenStream::is_ident(const char* word, int ahead) const {
  auto& t = peek(ahead);
  return t.kind == Tok::Ident && t.text == word;
}

bool TokenStream::accept_punct(const char* p) {
  if (!is_punct(p)) return false;
  next();
  return true;
}

bool TokenStream::accept_ident(const char* word) {
  if (!is_ident(word)) return false;
  next();
  return true;
}

namespace {
std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::String: return "string \"" + t.text + "\"";
    case Tok::Imag: return "'" + t.text + "i'";
    default: return "'" + t.text + "'";
  }
}
}  // namespace

Token TokenStream::expect_punct(const char* p, const char* context) {
  if (!is_punct(p)) syntax_error(std::string("expected '") + p + "' " + context + ", found " + describe(peek()));
  return next();
}

Token TokenStream::expect_ident(const char* context) {
  if (peek().kind != Tok::Ident) syntax_error(std::string("expected identifier ") + context + ", found " + describe(peek()));
  return next();
}

void TokenStream::expect_keyword(const char* word, const char* context) {
  if (!is_ident(word)) syntax_error(std::string("expected '") + word + "' " + context + ", found " + describe(peek()));
  next();
}

std::string TokenStream::expect_string(const char* context) {
  if (peek().kind != Tok::String) syntax_error(std::string("expected string ") + context + ", found " + describe(peek()));
  return next().text;
}

void TokenStream::fail(ParseError::Kind k, const SourcePos& pos, const std::string& msg, const std::string& st) const {
  throw ParseError(k, source_, pos, msg, st);
}

void TokenStream::syntax_error(const std::string& msg) const { fail(ParseError::Kind::Syntax, peek().pos, msg); }

std::string TokenStream::slice(size_t from, size_t to) const {
  std::string out;
  bool space = false;
  for (size_t i = from; i < to && i < text_.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text_[i]))) {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += text_[i];
  }
  return out;
}

}  // namespace lsb
