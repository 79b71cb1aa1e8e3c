#include "expr_parser.hpp"

#include <cctype>

namespace realmot::detail {

void parse_error(std::size_t pos, const std::string& what) {
  fail(Errc::Parse, "parse error at position " + std::to_string(pos) + ": " + what);
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Integer num(std::string(s.substr(i, j - i)));
      t.kind = Token::Num;
      t.num = Rational(num);
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Token::Ident;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else if (c == '[') {
      std::size_t j = s.find(']', i);
      if (j == std::string_view::npos) parse_error(i, "unterminated '['");
      std::string name(s.substr(i + 1, j - i - 1));
      std::size_t a = name.find_first_not_of(" \t"), b = name.find_last_not_of(" \t");
      if (a == std::string::npos) parse_error(i, "empty generator name");
      t.kind = Token::Bracket;
      t.text = name.substr(a, b - a + 1);
      i = j + 1;
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      t.kind = Token::Op;
      t.op = c;
      t.text = std::string(1, c);
      ++i;
    } else {
      parse_error(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::End;
  end.pos = s.size();
  end.text = "<end>";
  out.push_back(end);
  return out;
}

}  // namespace realmot::detail
