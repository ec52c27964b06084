#pragma once

// Reference systems written out by hand, plus a small parser for rows such as
// "lambda1 + 2 lambda7 <= y1 - y3 + 1".

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "embform/formulation.hpp"
#include "embform/polyhedra.hpp"

namespace golden {

using embform::LinearRow;
using embform::LinearSystem;
using embform::Rational;

// Adds sign * (expression) into coeffs/constant.
inline void parse_side(std::string_view s, const LinearSystem& sys, int sign, embform::RatVector& coeffs,
                       Rational& constant) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  int term_sign = 1;
  while (true) {
    skip();
    if (i >= s.size()) return;
    if (s[i] == '+' || s[i] == '-') {
      term_sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    std::string num;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) num += s[i++];
    skip();
    std::string name;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) name += s[i++];
    const Rational c = (num.empty() ? Rational(1) : Rational::parse(num)) * Rational(sign * term_sign);
    if (name.empty()) {
      if (num.empty()) throw std::invalid_argument("bad term in: " + std::string(s));
      constant += c;
    } else {
      const auto j = sys.var_index(name);
      if (!j) throw std::invalid_argument("unknown variable " + name);
      coeffs[*j] += c;
    }
    term_sign = 1;
  }
}

/// Adds "lhs <= rhs", "lhs >= rhs" or "lhs = rhs" to the system.
inline void add(LinearSystem& sys, std::string_view text) {
  std::string_view op;
  std::size_t pos;
  if ((pos = text.find("<=")) != std::string_view::npos) op = "<=";
  else if ((pos = text.find(">=")) != std::string_view::npos) op = ">=";
  else if ((pos = text.find('=')) != std::string_view::npos) op = "=";
  else throw std::invalid_argument("no relation in: " + std::string(text));
  embform::RatVector coeffs(sys.num_vars());
  Rational constant;
  // lhs - rhs (op) 0
  parse_side(text.substr(0, pos), sys, 1, coeffs, constant);
  parse_side(text.substr(pos + op.size()), sys, -1, coeffs, constant);
  if (op == ">=") {
    for (auto& c : coeffs) c = -c;
    constant = -constant;
  }
  if (op == "=") sys.add_equation(coeffs, -constant);
  else sys.add_inequality(coeffs, -constant);
}

inline LinearSystem system(std::vector<std::string> names, const std::vector<std::string>& rows) {
  LinearSystem sys(std::move(names));
  for (const auto& r : rows) add(sys, r);
  return sys;
}

inline std::vector<std::string> names(std::size_t lambdas, std::size_t ys) {
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= lambdas; ++j) out.push_back("lambda" + std::to_string(j));
  for (std::size_t i = 1; i <= ys; ++i) out.push_back("y" + std::to_string(i));
  return out;
}

/// Incremental formulation for four segments with unary codes.
inline LinearSystem unary4() {
  return system(names(5, 4), {
                                 "lambda1 + lambda2 + lambda3 + lambda4 + lambda5 = 1",
                                 "y1 + y2 + y3 + y4 = 1",
                                 "lambda1 >= 0",
                                 "lambda5 >= 0",
                                 "lambda1 <= y1",
                                 "y1 <= lambda1 + lambda2",
                                 "lambda1 + lambda2 <= y1 + y2",
                                 "y1 + y2 <= lambda1 + lambda2 + lambda3",
                                 "lambda1 + lambda2 + lambda3 <= y1 + y2 + y3",
                                 "y1 + y2 + y3 <= lambda1 + lambda2 + lambda3 + lambda4",
                             });
}

/// Logarithmic formulation for four segments; its codes are (01, 11, 10, 00).
inline LinearSystem log4() {
  return system(names(5, 2), {
                                 "lambda1 + lambda2 + lambda3 + lambda4 + lambda5 = 1",
                                 "lambda1 >= 0",
                                 "lambda2 >= 0",
                                 "lambda3 >= 0",
                                 "lambda4 >= 0",
                                 "lambda5 >= 0",
                                 "lambda1 + lambda5 <= 1 - y1",
                                 "lambda3 <= y1",
                                 "lambda4 + lambda5 <= 1 - y2",
                                 "lambda1 + lambda2 <= y2",
                             });
}

/// The nine-segment example with codes 0111 0100 0000 0101 0001 1000 1101 1011 1111.
inline LinearSystem nine() {
  std::vector<std::string> rows{
      "lambda1 + lambda2 + lambda3 + lambda4 + lambda5 + lambda6 + lambda7 + lambda8 + lambda9 + lambda10 = 1",
      "lambda5 + lambda6 + lambda7 + lambda8 + lambda9 + lambda10 <= y1 - y3 + y4",
      "lambda4 + lambda5 + lambda6 + 2 lambda7 + 2 lambda8 + lambda9 + lambda10 >= y1 - y3 + y4",
      "lambda1 + lambda5 + lambda6 + lambda7 + 2 lambda8 + 2 lambda9 + 2 lambda10 <= y1 + y4",
      "lambda1 + lambda2 + lambda4 + lambda5 + lambda6 + 2 lambda7 + 2 lambda8 + 2 lambda9 + 2 lambda10 >= y1 + y4",
      "-lambda1 - lambda2 - lambda3 + lambda6 + lambda7 + lambda8 <= y1 - y2 - y3 + y4",
      "-lambda1 - lambda2 + lambda5 + lambda6 + lambda7 + lambda8 + lambda9 >= y1 - y2 - y3 + y4",
      "lambda7 + lambda8 + lambda9 + lambda10 <= y1",
      "lambda6 + lambda7 + lambda8 + lambda9 + lambda10 >= y1",
      "lambda1 + lambda9 + lambda10 <= y3",
      "lambda1 + lambda2 + lambda8 + lambda9 + lambda10 >= y3",
  };
  for (int j = 1; j <= 10; ++j)
    if (j != 6) rows.push_back("lambda" + std::to_string(j) + " >= 0");
  return system(names(10, 4), rows);
}

inline std::vector<std::vector<std::uint8_t>> nine_codes() {
  return {{0, 1, 1, 1}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 0, 1},
          {1, 0, 0, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 1, 1}};
}

/// Logarithmic union-jack formulation on the 3x3 grid.
inline LinearSystem union_jack2() {
  std::vector<std::string> n;
  for (int u = 1; u <= 3; ++u)
    for (int v = 1; v <= 3; ++v) n.push_back("lambda_" + std::to_string(u) + "_" + std::to_string(v));
  n.insert(n.end(), {"y1", "y2", "y3"});
  std::vector<std::string> rows{
      "lambda_2_1 + lambda_2_3 <= 1 - y1",
      "lambda_1_2 + lambda_3_2 <= y1",
      "lambda_1_1 + lambda_2_1 + lambda_3_1 <= 1 - y2",
      "lambda_1_3 + lambda_2_3 + lambda_3_3 <= y2",
      "lambda_1_1 + lambda_1_2 + lambda_1_3 <= 1 - y3",
      "lambda_3_1 + lambda_3_2 + lambda_3_3 <= y3",
      "lambda_1_1 + lambda_1_2 + lambda_1_3 + lambda_2_1 + lambda_2_2 + lambda_2_3 + lambda_3_1 + lambda_3_2 + "
      "lambda_3_3 = 1",
  };
  for (int u = 1; u <= 3; ++u)
    for (int v = 1; v <= 3; ++v) rows.push_back("lambda_" + std::to_string(u) + "_" + std::to_string(v) + " >= 0");
  return system(n, rows);
}

/// Replaces variable j by (1 - x_j).
inline LinearSystem complement(const LinearSystem& s, std::size_t j) {
  LinearSystem out(s.var_names());
  auto flip = [&](LinearRow r) {
    r.rhs -= r.coeffs[j];
    r.coeffs[j] = -r.coeffs[j];
    return r;
  };
  for (const auto& r : s.equations()) out.add_equation(flip(r));
  for (const auto& r : s.inequalities()) out.add_inequality(flip(r));
  return out;
}

/// Facet sets of the two systems agree, each row taken modulo the equations.
/// Both sides are minimized first, so implied rows in a hand-written system
/// do not matter.
inline bool equivalent(const LinearSystem& a, const LinearSystem& b) {
  if (a.var_names() != b.var_names()) return false;
  auto facets = [](const LinearSystem& s) {
    const auto h = embform::minimize_hrep(embform::to_hrep(s));
    return embform::canonicalize(h.equations, h.inequalities, h.dim);
  };
  return facets(a) == facets(b);
}

/// The system has no implied rows and no hidden equations.
inline bool irredundant(const LinearSystem& s) {
  const auto h = embform::minimize_hrep(embform::to_hrep(s));
  return h.inequalities.size() == s.inequalities().size() && h.equations.size() == s.equations().size();
}

}  // namespace golden
