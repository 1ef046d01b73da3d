#include "zzq/label.hpp"

#include <array>
#include <cctype>
#include <string_view>
#include <utility>

#include "zzq/error.hpp"

namespace zzq {

const char* const kLabelGrammar =
    "L(i) | P(i) | I(i) | M(i,j) | N(i,j) | W(i,j) | S(i,j) | Delta(i) | Nabla(i) | T(i)";

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kNames{{
    {Family::L, "L"},
    {Family::P, "P"},
    {Family::I, "I"},
    {Family::M, "M"},
    {Family::N, "N"},
    {Family::W, "W"},
    {Family::S, "S"},
    {Family::Delta, "Delta"},
    {Family::Nabla, "Nabla"},
    {Family::T, "T"},
}};

std::string_view family_name(Family f) {
  for (auto [fam, name] : kNames)
    if (fam == f) return name;
  return "?";
}

[[noreturn]] void bad(const std::string& text, const std::string& why) {
  throw InvalidLabel("malformed label '" + text + "' (" + why + "); expected " + kLabelGrammar);
}

}  // namespace

bool Label::two_indices() const noexcept {
  return family == Family::M || family == Family::N || family == Family::W || family == Family::S;
}

std::string Label::str() const {
  std::string s(family_name(family));
  s += '(' + std::to_string(i);
  if (two_indices()) s += ',' + std::to_string(j);
  s += ')';
  return s;
}

Label parse_label(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.empty() || text.back() != ')') bad(text, "missing parentheses");
  const std::string_view head(text.data(), open);
  Label label;
  bool found = false;
  for (auto [fam, name] : kNames)
    if (head == name) {
      label.family = fam;
      found = true;
    }
  if (!found) bad(text, "unknown family");

  const std::string body = text.substr(open + 1, text.size() - open - 2);
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.size() > 6) bad(text, "bad index");
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad(text, "bad index");
    return std::stoi(s);
  };
  const auto comma = body.find(',');
  if (label.two_indices()) {
    if (comma == std::string::npos) bad(text, "two indices required");
    label.i = parse_int(body.substr(0, comma));
    label.j = parse_int(body.substr(comma + 1));
  } else {
    if (comma != std::string::npos) bad(text, "one index required");
    label.i = parse_int(body);
  }
  return label;
}

void validate_label(const Algebra& algebra, const Label& label) {
  const int n = algebra.vertex_count();
  auto fail = [&](const std::string& why) {
    throw InvalidLabel(label.str() + " is not a module over " + algebra.descriptor() + ": " + why);
  };
  if (label.i < 1 || label.i > n) fail("index out of range 1.." + std::to_string(n));
  switch (label.family) {
    case Family::L:
    case Family::P:
    case Family::I:
      return;
    case Family::M:
    case Family::W:
    case Family::N:
    case Family::S: {
      if (!algebra.is_type_a()) fail("string modules are defined for type A quotients only");
      if (label.j <= label.i || label.j > n) fail("need i < j <= n");
      const bool same_parity = (label.j - label.i) % 2 == 0;
      const bool wants_same = label.family == Family::M || label.family == Family::W;
      if (same_parity != wants_same) fail(wants_same ? "need i = j mod 2" : "need i != j mod 2");
      return;
    }
    case Family::Delta:
    case Family::Nabla:
    case Family::T:
      if (!algebra.is_type_a()) fail("standard/costandard/tilting modules need kind A, B or C");
      return;
  }
}

std::string display_name(const Algebra& algebra, const Label& label) {
  if (algebra.kind() == AlgebraKind::B && label.j == label.i + 1) {
    if (label.family == Family::N) return Label::delta(label.j).str();
    if (label.family == Family::S) return Label::nabla(label.j).str();
  }
  return label.str();
}

}  // namespace zzq
