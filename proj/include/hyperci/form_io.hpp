// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0
//
// Text and JSON round-tripping for forms.
//
// Text grammar, whitespace-insensitive between tokens:
//   form   := ['-'] term (('+'|'-') term)*
//   term   := integer | integer '*' powers | powers
//   powers := power ('*' power)*
//   power  := 'x' index ['^' exponent]
// Every term must have the same total degree; coefficients must lie in
// [0, p). The canonical serialization lists nonzero terms in descending
// grevlex order joined by " + ", omits unit coefficients except on the
// constant monomial, and omits exponent 1.

#pragma once

#include <cctype>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperci/form.hpp"
#include "hyperci/monomial.hpp"

namespace hyperci {

class FormParseError : public std::runtime_error {
 public:
  FormParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class FormScanner {
 public:
  FormScanner(const std::string& text, int n, const PrimeField& field)
      : text_(text), n_(n), field_(field) {}

  Form parse(const Limits& limits) {
    skip_ws();
    if (pos_ >= text_.size()) throw FormParseError("empty input", pos_);
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    std::vector<std::pair<std::vector<int>, std::uint32_t>> terms;
    int degree = -1;
    for (;;) {
      auto [exps, coeff] = parse_term();
      int deg = 0;
      for (int e : exps) deg += e;
      if (degree < 0) {
        degree = deg;
      } else if (deg != degree) {
        throw FormParseError("inhomogeneous input: term of degree " + std::to_string(deg) +
                                 " in a form of degree " + std::to_string(degree),
                             pos_);
      }
      terms.emplace_back(std::move(exps), negative ? field_.neg(coeff) : coeff);
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = peek();
      if (c == '+') {
        negative = false;
      } else if (c == '-') {
        negative = true;
      } else {
        throw FormParseError(std::string("unexpected character '") + c + "'", pos_);
      }
      ++pos_;
      skip_ws();
    }
    Form out(n_, degree, field_, limits);
    for (auto& [exps, coeff] : terms) {
      std::size_t r = grevlex_rank(exps);
      out.set_coeff(r, field_.add(out.coeff(r), coeff));
    }
    return out;
  }

 private:
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::uint64_t parse_integer(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw FormParseError(std::string("expected ") + what, pos_);
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > 0xffffffffffffull) {
        throw FormParseError(std::string(what) + " out of range", pos_);
      }
      ++pos_;
    }
    return v;
  }

  // power := 'x' index ['^' exponent]; adds into exps.
  void parse_power(std::vector<int>& exps) {
    skip_ws();
    if (pos_ >= text_.size() || peek() != 'x') {
      throw FormParseError("expected variable", pos_);
    }
    ++pos_;
    std::size_t at = pos_;
    std::uint64_t idx = parse_integer("variable index");
    if (idx > static_cast<std::uint64_t>(n_)) {
      throw FormParseError("variable index " + std::to_string(idx) + " exceeds n = " +
                               std::to_string(n_),
                           at);
    }
    int e = 1;
    skip_ws();
    if (pos_ < text_.size() && peek() == '^') {
      ++pos_;
      std::uint64_t raw = parse_integer("exponent");
      if (raw > 1000000) throw FormParseError("exponent out of range", pos_);
      e = static_cast<int>(raw);
    }
    exps[static_cast<std::size_t>(idx)] += e;
  }

  std::pair<std::vector<int>, std::uint32_t> parse_term() {
    skip_ws();
    if (pos_ >= text_.size()) throw FormParseError("expected term", pos_);
    std::vector<int> exps(static_cast<std::size_t>(n_) + 1, 0);
    std::uint32_t coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t at = pos_;
      std::uint64_t raw = parse_integer("coefficient");
      if (raw >= field_.modulus()) {
        throw FormParseError("coefficient " + std::to_string(raw) +
                                 " not reduced modulo " + std::to_string(field_.modulus()),
                             at);
      }
      coeff = static_cast<std::uint32_t>(raw);
      saw_coeff = true;
      skip_ws();
      if (pos_ >= text_.size() || peek() != '*') {
        return {std::move(exps), coeff};  // constant term
      }
      ++pos_;
    }
    parse_power(exps);
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        parse_power(exps);
      } else {
        break;
      }
    }
    (void)saw_coeff;
    return {std::move(exps), coeff};
  }

  const std::string& text_;
  int n_;
  const PrimeField& field_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Form parse_form(const std::string& text, int n, const PrimeField& field,
                       const Limits& limits = default_limits()) {
  if (n < 0) throw std::invalid_argument("parse_form: negative variable index bound");
  detail::FormScanner scanner(text, n, field);
  return scanner.parse(limits);
}

inline std::string serialize_form(const Form& f) {
  const auto mons = enumerate_monomials(f.n(), f.degree());
  std::string out;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const std::uint32_t c = f.coeff(i);
    if (!c) continue;
    if (!out.empty()) out += " + ";
    bool constant = true;
    for (int e : mons[i].exponents)
      if (e) constant = false;
    std::string factors;
    for (int j = 0; j <= f.n(); ++j) {
      int e = mons[i].exponents[j];
      if (!e) continue;
      if (!factors.empty()) factors += '*';
      factors += 'x';
      factors += std::to_string(j);
      if (e > 1) {
        factors += '^';
        factors += std::to_string(e);
      }
    }
    if (c != 1 || constant) {
      out += std::to_string(c);
      if (!factors.empty()) out += '*';
    }
    out += factors;
  }
  if (out.empty()) out = "0";
  return out;
}

inline nlohmann::ordered_json form_to_json(const Form& f) {
  const auto mons = enumerate_monomials(f.n(), f.degree());
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const std::uint32_t c = f.coeff(i);
    if (!c) continue;
    terms.push_back({{"coeff", c}, {"exps", mons[i].exponents}});
  }
  return nlohmann::ordered_json{
      {"n", f.n()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

inline Form form_from_json(const nlohmann::json& j, const PrimeField& field,
                           const Limits& limits = default_limits()) {
  if (!j.is_object() || !j.contains("n") || !j.contains("degree") || !j.contains("terms")) {
    throw std::invalid_argument("form_from_json: expected object with n, degree, terms");
  }
  const int n = j.at("n").get<int>();
  const int degree = j.at("degree").get<int>();
  Form out(n, degree, field, limits);
  for (const auto& t : j.at("terms")) {
    const auto exps = t.at("exps").get<std::vector<int>>();
    Monomial m{exps};
    if (static_cast<int>(exps.size()) != n + 1 || m.degree() != degree) {
      throw std::invalid_argument("form_from_json: term does not match (n, degree)");
    }
    const std::int64_t raw = t.at("coeff").get<std::int64_t>();
    if (raw < 0 || raw >= static_cast<std::int64_t>(field.modulus())) {
      throw std::invalid_argument("form_from_json: coefficient not reduced modulo p");
    }
    std::size_t r = monomial_index(m, n);
    out.set_coeff(r, field.add(out.coeff(r), static_cast<std::uint32_t>(raw)));
  }
  return out;
}

}  // namespace hyperci
