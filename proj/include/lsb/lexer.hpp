#ifndef LSB_LEXER_HPP
#define LSB_LEXER_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace lsb {

struct SourcePos {
  int line = 1, col = 1;
  size_t offset = 0;
};

struct ParseError : std::runtime_error {
  enum class Kind { Lexical, Syntax, Semantic };
  ParseError(Kind k, std::string source, SourcePos p, std::string msg, std::string statement = "");
  Kind kind;
  std::string source;
  SourcePos pos;
  std::string message;
  std::string statement;  // offending statement text, for semantic errors
};

enum class Tok { Ident, Number, Imag, String, Punct, End };

struct Token {
  Tok kind;
  std::string text;  // Imag: the digits before the trailing i; String: unquoted
  SourcePos pos;
  size_t end = 0;  // offset one past the token
};

// Whole-input tokenizer with one-token lookahead helpers. `#` starts a comment.
class TokenStream {
 public:
  TokenStream(std::string text, std::string source = "<input>");

  const Token& peek(int ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == Tok::End; }

  bool is_punct(const char* p, int ahead = 0) const;
  bool is_ident(const char* word, int ahead = 0) const;
  bool accept_punct(const char* p);
  bool accept_ident(const char* word);
  Token expect_punct(const char* p, const char* context);
  Token expect_ident(const char* context);
  void expect_keyword(const char* word, const char* context);
  std::string expect_string(const char* context);

  [[noreturn]] void fail(ParseError::Kind k, const SourcePos& pos, const std::string& msg,
                         const std::string& statement = "") const;
  [[noreturn]] void syntax_error(const std::string& msg) const;

  // source text between two offsets, whitespace collapsed
  std::string slice(size_t from, size_t to) const;
  const std::string& source() const { return source_; }

 private:
  std::string text_, source_;
  std::vector<Token> toks_;
  size_t at_ = 0;
};

}  // namespace lsb

#endif
