// Copyright 2026 The cliffatlas Authors
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


#include "cliffatlas/gates.hpp"

#include <cctype>
#include <map>

namespace cliffatlas::gates {

namespace {

using C = Cyclotomic;

C z(long n, long k) { return C::root_of_unity(n, k); }
C frac(long a, long b) { return C(Rational(a, b)); }

GateMatrix rows(std::initializer_list<std::initializer_list<C>> r) {
  std::vector<std::vector<C>> v;
  for (const auto& row : r) v.emplace_back(row);
  return GateMatrix::from_rows(v);
}

std::map<std::string, GateMatrix, std::less<>> build_constants() {
  const C i = z(4, 1);
  const C zero;
  const C one(1);
  const C inv_sqrt2 = C::sqrt_named(2) * frac(1, 2);
  const C w8 = z(8, -1);  // zeta_8^*

  std::map<std::string, GateMatrix, std::less<>> g;
  g["I"] = GateMatrix::identity(2);
  g["X"] = -i * rows({{zero, one}, {one, zero}});
  g["Y"] = -i * rows({{zero, -i}, {i, zero}});
  g["Z"] = -i * rows({{one, zero}, {zero, -one}});
  g["S"] = w8 * rows({{one, zero}, {zero, i}});
  g["H"] = (-i * inv_sqrt2) * rows({{one, one}, {one, -one}});
  g["F"] = (w8 * inv_sqrt2) * rows({{one, -i}, {one, i}});

  g["BELL"] = (z(8, 3) * inv_sqrt2) * rows({{one, i, zero, zero},
                                            {zero, zero, i, one},
                                            {zero, zero, i, -one},
                                            {one, -i, zero, zero}});
  g["SWAP"] = w8 * GateMatrix::permutation({0, 2, 1, 3});
  g["iII"] = i * GateMatrix::identity(4);
  g["CNOT12"] = w8 * GateMatrix::permutation({0, 1, 3, 2});
  g["CNOT"] = g["CNOT12"];
  g["CNOT21"] = w8 * GateMatrix::permutation({0, 3, 2, 1});
  g["DCNOT"] = rows({{one, zero, zero, zero},
                     {zero, zero, zero, one},
                     {zero, one, zero, zero},
                     {zero, zero, one, zero}});
  g["CZ"] = w8 * GateMatrix::diagonal({one, one, one, -one});
  g["K"] = inv_sqrt2 * rows({{one, zero, -i, zero},
                             {zero, -i, zero, -one},
                             {-i, zero, one, zero},
                             {zero, one, zero, i}});
  g["A"] = rows({{zero, zero, -one, zero},
                 {zero, -i, zero, zero},
                 {one, zero, zero, zero},
                 {zero, zero, zero, i}});

  const C phi = (one + C::sqrt_named(5)) * frac(1, 2);
  const C phi_inv = phi - one;
  g["PHI"] = frac(1, 2) * rows({{phi + i * phi_inv, one}, {-one, phi - i * phi_inv}});

  const C r3 = C::sqrt_named(3);
  const C rm3 = C::sqrt_named(-3);
  const C z3 = z(3, 1), z3c = z(3, 2);
  g["U1"] = rm3.inverse() * rows({{rm3, zero, zero, zero},
                                  {zero, one, one, one},
                                  {zero, one, z3, z3c},
                                  {zero, one, z3c, z3}});
  g["U2"] = rows({{zero, zero, one, zero},
                  {zero, -one, zero, zero},
                  {one, zero, zero, zero},
                  {zero, zero, zero, one}});

  const C rm7 = C::sqrt_named(-7);
  const C s = (one + rm7) * frac(1, 2);
  const C sb = s.conj();
  g["V1"] = rows({{one, zero, zero, zero},
                  {zero, zero, zero, z(7, -1)},
                  {zero, z(7, 5), zero, zero},
                  {zero, zero, z(7, 3), zero}});
  g["V2"] = rm7.inverse() * rows({{sb * sb, one, one, one},
                                  {one, s, sb, sb},
                                  {one, sb, s, sb},
                                  {one, sb, sb, s}});

  const C r2 = C::sqrt_named(2);
  const C half = frac(1, 2);
  g["W1"] = r3.inverse() * rows({{one, zero, zero, r2},
                                 {zero, -one, r2, zero},
                                 {zero, r2, one, zero},
                                 {r2, zero, zero, -one}});
  g["W2"] = rows({{r3 * half, half, zero, zero},
                  {half, -(r3 * half), zero, zero},
                  {zero, zero, zero, one},
                  {zero, zero, one, zero}});
  g["W3"] = GateMatrix::diagonal({one, one, z3, z3c});
  return g;
}

const std::map<std::string, GateMatrix, std::less<>>& constants() {
  static const auto table = build_constants();
  return table;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

long to_long(std::string_view s) { return std::stol(std::string(s)); }

// Matches one single-qubit gate name at the start of `s`; returns its length.
std::size_t single_prefix(std::string_view s) {
  if (s.rfind("PHI", 0) == 0) return 3;
  if (s.rfind("Φ", 0) == 0) return std::string_view("Φ").size();
  if (s.rfind("Ph", 0) == 0) {
    std::size_t k = 2;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    return k > 2 ? k : 0;
  }
  if (!s.empty() && std::string_view("IXYZSHF").find(s[0]) != std::string_view::npos) {
    return 1;
  }
  return 0;
}

GateMatrix single(std::string_view name) {
  if (name == "Φ") return constants().find("PHI")->second;
  if (name.rfind("Ph", 0) == 0 && all_digits(name.substr(2))) {
    return ph(to_long(name.substr(2)));
  }
  auto it = constants().find(name);
  if (it == constants().end() || it->second.dim() != 2) {
    throw std::out_of_range("unknown gate '" + std::string(name) + "'");
  }
  return it->second;
}

}  // namespace

GateMatrix constant(std::string_view name) {
  auto it = constants().find(name);
  if (it != constants().end()) return it->second;
  if (name == "Φ") return constants().find("PHI")->second;
  if (name.rfind("Ph", 0) == 0 && all_digits(name.substr(2))) {
    return ph(to_long(name.substr(2)));
  }
  std::size_t first = single_prefix(name);
  if (first > 0 && first < name.size()) {
    std::string_view rest = name.substr(first);
    if (single_prefix(rest) == rest.size()) {
      return kron(single(name.substr(0, first)), single(rest));
    }
  }
  throw std::out_of_range("unknown gate '" + std::string(name) + "'");
}

std::vector<std::string> constant_names() {
  std::vector<std::string> out;
  for (const auto& [name, m] : constants()) out.push_back(name);
  return out;
}

GateMatrix ph(long m) {
  if (m < 1) throw std::domain_error("ph: m must be positive");
  return GateMatrix::diagonal({z(2 * m, -1), z(2 * m, 1)});
}

std::vector<GateMatrix> bd(long m) { return {ph(m), constant("X")}; }

std::vector<GateMatrix> q(int r) {
  if (r < 1 || r > 30) throw std::domain_error("q: r out of range");
  return bd(1L << r);
}

namespace {

enum class Tok { Name, Int, LParen, RParen, Dot, Kron, Caret, Dagger, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
      if (p_ >= s_.size()) break;
      std::size_t start = p_;
      if (match("⊗")) {
        out.push_back({Tok::Kron, "⊗", start});
      } else if (match("·") || match("*")) {
        out.push_back({Tok::Dot, "·", start});
      } else if (match("†")) {
        out.push_back({Tok::Dagger, "†", start});
      } else if (match("(")) {
        out.push_back({Tok::LParen, "(", start});
      } else if (match(")")) {
        out.push_back({Tok::RParen, ")", start});
      } else if (match("^")) {
        out.push_back({Tok::Caret, "^", start});
        if (s_.substr(p_, 3) == "dag") {
          p_ += 3;
          out.back().kind = Tok::Dagger;
        }
      } else if (s_[p_] == '-' || std::isdigit(static_cast<unsigned char>(s_[p_]))) {
        ++p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        std::string text(s_.substr(start, p_ - start));
        if (text == "-") throw ParseError("dangling '-'", start);
        out.push_back({Tok::Int, text, start});
      } else if (is_name_char()) {
        while (p_ < s_.size() && is_name_char()) {
          if (!match("Φ")) ++p_;
        }
        std::string text(s_.substr(start, p_ - start));
        out.push_back({text == "x" ? Tok::Kron : Tok::Name, text, start});
      } else {
        throw ParseError("unexpected character '" + std::string(1, s_[p_]) + "'", start);
      }
    }
    out.push_back({Tok::End, "", s_.size()});
    return out;
  }

 private:
  bool match(std::string_view lit) {
    if (s_.substr(p_, lit.size()) == lit) {
      p_ += lit.size();
      return true;
    }
    return false;
  }
  bool is_name_char() const {
    unsigned char c = static_cast<unsigned char>(s_[p_]);
    return std::isalnum(c) || c == '_' || s_.substr(p_, 2) == "Φ";
  }

  std::string_view s_;
  std::size_t p_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  GateMatrix parse() {
    GateMatrix m = expr();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return m;
  }

 private:
  const Token& peek() const { return t_[i_]; }
  const Token& next() { return t_[i_++]; }

  GateMatrix expr() {
    GateMatrix m = term();
    while (peek().kind == Tok::Dot) {
      std::size_t pos = next().pos;
      GateMatrix rhs = term();
      if (rhs.dim() != m.dim()) throw ParseError("dimension mismatch in product", pos);
      m = m * rhs;
    }
    return m;
  }

  GateMatrix term() {
    GateMatrix m = factor();
    while (peek().kind == Tok::Kron) {
      next();
      m = kron(m, factor());
    }
    return m;
  }

  GateMatrix factor() {
    GateMatrix m = atom();
    while (true) {
      if (peek().kind == Tok::Dagger) {
        next();
        m = m.adjoint();
      } else if (peek().kind == Tok::Caret) {
        next();
        const Token& e = next();
        if (e.kind != Tok::Int) throw ParseError("expected exponent", e.pos);
        m = m.pow(std::stol(e.text));
      } else {
        return m;
      }
    }
  }

  GateMatrix atom() {
    const Token& tok = next();
    if (tok.kind == Tok::LParen) {
      GateMatrix m = expr();
      const Token& close = next();
      if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.pos);
      return m;
    }
    if (tok.kind == Tok::Name) {
      try {
        return constant(tok.text);
      } catch (const std::out_of_range&) {
        throw ParseError("unknown gate '" + tok.text + "'", tok.pos);
      }
    }
    throw ParseError(tok.kind == Tok::End ? "unexpected end of expression"
                                          : "unexpected '" + tok.text + "'",
                     tok.pos);
  }

  std::vector<Token> t_;
  std::size_t i_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GateMatrix evaluate(std::string_view expr) { return Parser(Lexer(expr).run()).parse(); }

std::optional<std::vector<GateMatrix>> single_qubit_group(std::string_view name) {
  name = trim(name);
  if (name == "I") return std::vector<GateMatrix>{constant("I")};
  if (name == "P1") return std::vector<GateMatrix>{constant("X"), constant("Z")};
  if (name == "C1") return std::vector<GateMatrix>{constant("S"), constant("H")};
  if (name == "C1'") return std::vector<GateMatrix>{constant("Z"), constant("F")};
  if (name == "2I") return std::vector<GateMatrix>{constant("Z"), constant("PHI")};
  if (name.rfind("BD", 0) == 0 && all_digits(name.substr(2))) return bd(to_long(name.substr(2)));
  if (name.size() > 3 && name.rfind("Q(", 0) == 0 && name.back() == ')' &&
      all_digits(name.substr(2, name.size() - 3))) {
    return q(static_cast<int>(to_long(name.substr(2, name.size() - 3))));
  }
  if (name.rfind("Q", 0) == 0 && all_digits(name.substr(1))) {
    return q(static_cast<int>(to_long(name.substr(1))));
  }
  return std::nullopt;
}

std::vector<GateMatrix> pauli2() {
  return {constant("XI"), constant("ZI"), constant("IX"), constant("IZ")};
}

std::vector<GateMatrix> pauli2_phased() {
  auto g = pauli2();
  g.push_back(constant("iII"));
  return g;
}

std::vector<GateMatrix> expand(std::string_view item) {
  std::string_view s = trim(item);
  if (s == "P2") return pauli2();
  for (std::string_view sep : {std::string_view("⊗"), std::string_view(" x ")}) {
    auto at = s.find(sep);
    if (at == std::string_view::npos) continue;
    auto left = single_qubit_group(s.substr(0, at));
    auto right = single_qubit_group(s.substr(at + sep.size()));
    if (!left || !right) continue;
    const GateMatrix id = GateMatrix::identity(2);
    std::vector<GateMatrix> out;
    for (const auto& g : *left) out.push_back(kron(g, id));
    for (const auto& g : *right) out.push_back(kron(id, g));
    return out;
  }
  if (auto one = single_qubit_group(s)) return *one;
  return {evaluate(s)};
}

}  // namespace cliffatlas::gates
