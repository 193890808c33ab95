#include "gcdtn/types.hpp"

#include <cctype>

namespace gcdtn {

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("sign without digits");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw std::invalid_argument("invalid integer literal: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

BigInt parse_positive_bigint(std::string_view text) {
  BigInt v = parse_bigint(text);
  if (v < 1)
    throw std::invalid_argument("expected a positive integer, got '" + std::string(text) + "'");
  return v;
}

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_bigint(text));
  }
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  return make_rational(num, den);
}

std::vector<BigInt> parse_vector(std::string_view text) {
  std::vector<BigInt> out;
  std::size_t i = 0;
  const auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    out.push_back(parse_positive_bigint(text.substr(i, j - i)));
    i = j;
  }
  if (out.empty()) throw std::invalid_argument("empty vector");
  return out;
}

}  // namespace gcdtn
