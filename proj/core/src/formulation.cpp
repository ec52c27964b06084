#include "embform/formulation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "embform/error.hpp"
#include "embform/linalg.hpp"

namespace embform {

namespace {

std::size_t support_size(const RatVector& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); }));
}

LinearRow primitive_row(const LinearRow& row) {
  RatVector all = row.coeffs;
  all.push_back(row.rhs);
  RatVector p = primitive_positive(all);
  LinearRow out;
  out.rhs = p.back();
  p.pop_back();
  out.coeffs = std::move(p);
  return out;
}

}  // namespace

// LinearSystem ------------------------------------------------------------

LinearSystem::LinearSystem(std::vector<std::string> var_names) : names_(std::move(var_names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidArgument("empty variable name");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> LinearSystem::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void LinearSystem::add_equation(RatVector coeffs, Rational rhs) {
  if (coeffs.size() != num_vars()) throw InvalidArgument("equation has wrong number of coefficients");
  equations_.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::add_inequality(RatVector coeffs, Rational rhs) {
  if (coeffs.size() != num_vars()) throw InvalidArgument("inequality has wrong number of coefficients");
  inequalities_.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::add_lower_bound(std::size_t j, const Rational& value) {
  RatVector c(num_vars());
  c.at(j) = -1;
  add_inequality(std::move(c), -value);
}

void LinearSystem::add_upper_bound(std::size_t j, const Rational& value) {
  RatVector c(num_vars());
  c.at(j) = 1;
  add_inequality(std::move(c), value);
}

bool LinearSystem::is_bound(std::size_t i) const { return support_size(inequalities_.at(i).coeffs) == 1; }

std::vector<bool> LinearSystem::bound_flags() const {
  std::vector<bool> flags(inequalities_.size());
  for (std::size_t i = 0; i < flags.size(); ++i) flags[i] = is_bound(i);
  return flags;
}

std::size_t LinearSystem::num_bounds() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < inequalities_.size(); ++i) c += is_bound(i);
  return c;
}

LinearSystem LinearSystem::with_appended_variables(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = names_;
  names.insert(names.end(), extra.begin(), extra.end());
  LinearSystem out(std::move(names));
  auto widen = [&](LinearRow r) {
    r.coeffs.resize(out.num_vars());
    return r;
  };
  for (const auto& e : equations_) out.add_equation(widen(e));
  for (const auto& e : inequalities_) out.add_inequality(widen(e));
  return out;
}

// Formulation -------------------------------------------------------------

void Formulation::validate() const {
  std::set<std::string> seen;
  for (const auto& v : integer_vars) {
    if (!system.var_index(v)) throw InvalidArgument("integer variable '" + v + "' is not a system variable");
    if (!seen.insert(v).second) throw InvalidArgument("integer variable '" + v + "' listed twice");
  }
}

std::vector<std::size_t> Formulation::integer_indices() const {
  std::vector<std::size_t> idx;
  for (const auto& v : integer_vars) idx.push_back(*system.var_index(v));
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<std::size_t> Formulation::continuous_indices() const {
  const auto ints = integer_indices();
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < system.num_vars(); ++j)
    if (!std::binary_search(ints.begin(), ints.end(), j)) idx.push_back(j);
  return idx;
}

// EquationSpace -----------------------------------------------------------

EquationSpace::EquationSpace(const std::vector<LinearRow>& equations, std::size_t num_vars) : num_vars_(num_vars) {
  RatMatrix aug(num_vars + 1);
  for (const auto& e : equations) {
    if (e.coeffs.size() != num_vars) throw InvalidArgument("equation has wrong number of coefficients");
    RatVector row = e.coeffs;
    row.push_back(e.rhs);
    aug.add_row(std::move(row));
  }
  std::vector<std::size_t> piv;
  const RatMatrix r = rref(aug, &piv);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    if (piv[i] == num_vars) {
      consistent_ = false;
      continue;
    }
    reduced_.push_back(primitive_row({RatVector(r[i].begin(), r[i].end() - 1), r[i].back()}));
  }
  // Gram-Schmidt on the coefficient parts, carrying the right-hand sides along.
  for (const auto& e : reduced_) {
    LinearRow w = e;
    for (std::size_t q = 0; q < ortho_.size(); ++q) {
      const Rational f = dot(w.coeffs, ortho_[q].coeffs) / ortho_norms_[q];
      if (f.is_zero()) continue;
      w.coeffs = w.coeffs - f * ortho_[q].coeffs;
      w.rhs -= f * ortho_[q].rhs;
    }
    ortho_norms_.push_back(dot(w.coeffs, w.coeffs));
    ortho_.push_back(std::move(w));
  }
}

LinearRow EquationSpace::project(const LinearRow& row) const {
  if (row.coeffs.size() != num_vars_) throw InvalidArgument("row has wrong number of coefficients");
  LinearRow p = row;
  for (std::size_t q = 0; q < ortho_.size(); ++q) {
    const Rational f = dot(row.coeffs, ortho_[q].coeffs) / ortho_norms_[q];
    if (f.is_zero()) continue;
    p.coeffs = p.coeffs - f * ortho_[q].coeffs;
    p.rhs -= f * ortho_[q].rhs;
  }
  return p;
}

LinearRow EquationSpace::canonical(const LinearRow& row) const {
  LinearRow p = project(row);
  if (is_zero(p.coeffs)) {
    p.rhs = p.rhs.sign();
    return p;
  }
  return primitive_row(p);
}

std::optional<std::size_t> EquationSpace::bound_variable(const LinearRow& row) const {
  const LinearRow p = project(row);
  if (is_zero(p.coeffs)) return std::nullopt;
  for (std::size_t j = 0; j < num_vars_; ++j) {
    const LinearRow e = project({unit_vector(num_vars_, j), 0});
    if (is_zero(e.coeffs)) continue;
    // p.coeffs must be a nonzero multiple of e.coeffs.
    std::optional<Rational> ratio;
    bool parallel = true;
    for (std::size_t i = 0; i < num_vars_ && parallel; ++i) {
      if (e.coeffs[i].is_zero()) {
        parallel = p.coeffs[i].is_zero();
      } else if (!ratio) {
        ratio = p.coeffs[i] / e.coeffs[i];
        parallel = !ratio->is_zero();
      } else {
        parallel = p.coeffs[i] == *ratio * e.coeffs[i];
      }
    }
    if (parallel && ratio) return j;
  }
  return std::nullopt;
}

LinearRow EquationSpace::as_bound(const LinearRow& row, std::size_t j) const {
  const LinearRow p = project(row);
  const LinearRow e = project({unit_vector(num_vars_, j), 0});
  std::size_t i = 0;
  while (e.coeffs[i].is_zero()) ++i;
  const Rational t = p.coeffs[i] / e.coeffs[i];
  // (s e_j, c) projects to (s p_j, s pi_j + c); match (p / |t|).
  const Rational s = t.sign();
  LinearRow out{unit_vector(num_vars_, j), 0};
  out.coeffs[j] = s;
  out.rhs = p.rhs / t.abs() - s * e.rhs;
  return out;
}

LinearRow EquationSpace::sparsify(const LinearRow& row) const {
  LinearRow cur = project(row);
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& eq : reduced_) {
      std::size_t best = support_size(cur.coeffs);
      std::optional<Rational> best_t;
      for (std::size_t j = 0; j < num_vars_; ++j) {
        if (eq.coeffs[j].is_zero() || cur.coeffs[j].is_zero()) continue;
        const Rational t = -cur.coeffs[j] / eq.coeffs[j];
        const std::size_t s = support_size(cur.coeffs + t * eq.coeffs);
        if (s < best) {
          best = s;
          best_t = t;
        }
      }
      if (best_t) {
        cur.coeffs = cur.coeffs + *best_t * eq.coeffs;
        cur.rhs += *best_t * eq.rhs;
        improved = true;
      }
    }
  }
  return primitive_row(cur);
}

// Canonical systems -------------------------------------------------------

CanonicalSystem canonicalize(const std::vector<LinearRow>& equations, const std::vector<LinearRow>& inequalities,
                             std::size_t num_vars) {
  const EquationSpace space(equations, num_vars);
  CanonicalSystem c;
  c.equations = space.reduced();
  if (!space.consistent()) c.equations.push_back({RatVector(num_vars), 1});
  for (const auto& row : inequalities) {
    LinearRow r = space.canonical(row);
    if (is_zero(r.coeffs) && r.rhs.sign() >= 0) continue;
    c.inequalities.push_back(std::move(r));
  }
  std::sort(c.inequalities.begin(), c.inequalities.end());
  c.inequalities.erase(std::unique(c.inequalities.begin(), c.inequalities.end()), c.inequalities.end());
  return c;
}

CanonicalSystem canonicalize(const LinearSystem& system) {
  return canonicalize(system.equations(), system.inequalities(), system.num_vars());
}

std::string to_string(const LinearRow& row, const std::vector<std::string>& names, const char* relation) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
    const Rational& c = row.coeffs[j];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    const Rational a = c.abs();
    if (a != Rational(1)) os << a << " ";
    os << (j < names.size() ? names[j] : "x" + std::to_string(j + 1));
    first = false;
  }
  if (first) os << "0";
  os << " " << relation << " " << row.rhs;
  return os.str();
}

}  // namespace embform
