#include "shapekit/parse.hpp"

#include <cctype>

#include "shapekit/error.hpp"

namespace shapekit {

namespace {

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, why, {{"input", std::string(text)}});
}

}  // namespace

std::pair<std::string, std::vector<std::string>> split_call(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto open = s.find('(');
  if (open == std::string::npos || open == 0 || s.back() != ')') bad(text, "expected NAME(args)");
  std::string head = s.substr(0, open);
  std::string body = s.substr(open + 1, s.size() - open - 2);
  std::vector<std::string> args;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    args.push_back(body.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  for (const auto& a : args)
    if (a.empty()) bad(text, "empty argument");
  return {head, args};
}

Domain4D parse_domain(std::string_view text) {
  auto [head, args] = split_call(text);
  std::vector<Rational> v;
  for (const auto& a : args) v.push_back(parse_rational(a));
  auto arity = [&](std::size_t n) {
    if (v.size() != n) bad(text, head + " takes " + std::to_string(n) + " argument(s)");
  };
  if (head == "E") {
    arity(2);
    return Domain4D::ellipsoid(v[0], v[1]);
  }
  if (head == "P") {
    arity(2);
    return Domain4D::polydisk(v[0], v[1]);
  }
  if (head == "B") {
    arity(1);
    return Domain4D::ball(v[0]);
  }
  if (head == "Z") {
    arity(1);
    return Domain4D::cylinder(v[0]);
  }
  bad(text, "unknown domain kind '" + head + "'");
}

Ellipsoid parse_ellipsoid(std::string_view text) {
  auto [head, args] = split_call(text);
  if (head != "E" || args.size() != 2) bad(text, "expected E(a,b)");
  return Ellipsoid(PerturbedRational::parse(args[0]), PerturbedRational::parse(args[1]));
}

}  // namespace shapekit
