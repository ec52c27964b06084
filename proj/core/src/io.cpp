#include "embform/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "embform/error.hpp"
#include "json.hpp"

namespace embform {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> tokens(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

/// Exact decimal text when the denominator has no prime factors besides 2 and 5.
std::optional<std::string> decimal_string(const Rational& r) {
  if (r.is_integer()) return r.str();
  mpz_class den = r.denominator();
  std::size_t twos = 0, fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den != 1) return std::nullopt;
  const std::size_t digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = abs(r.numerator()) * scale / r.denominator();
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (r.sign() < 0 ? "-" : "") + s;
}

mpz_class lcm_of_denominators(const LinearRow& row) {
  mpz_class l = row.rhs.denominator();
  for (const auto& c : row.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  return l;
}

std::string lp_terms(const RatVector& coeffs, const std::vector<std::string>& names) {
  std::string out;
  std::size_t on_line = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto& c = coeffs[j];
    if (c.is_zero()) continue;
    if (on_line == 8) {
      out += "\n  ";
      on_line = 0;
    }
    const bool first = out.empty();
    out += c.sign() < 0 ? (first ? "- " : " - ") : (first ? "" : " + ");
    const Rational a = c.abs();
    if (a != Rational(1)) out += a.str() + " ";
    out += names[j];
    ++on_line;
  }
  return out.empty() ? "0 " + names.front() : out;
}

json row_to_json(const LinearRow& row, const std::vector<std::string>& names) {
  json coeffs = json::object();
  for (std::size_t j = 0; j < row.coeffs.size(); ++j)
    if (!row.coeffs[j].is_zero()) coeffs[names[j]] = row.coeffs[j].str();
  return {{"coeffs", coeffs}, {"rhs", row.rhs.str()}};
}

Rational rational_field(const json& j, const std::string& what) {
  if (j.is_string()) return parse_number(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError(what + ": expected a rational string");
}

LinearRow row_from_json(const json& j, const LinearSystem& s, const std::string& what) {
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("rhs") || !j["coeffs"].is_object())
    throw ParseError(what + ": expected {\"coeffs\": {...}, \"rhs\": ...}");
  LinearRow row{RatVector(s.num_vars()), rational_field(j["rhs"], what)};
  for (const auto& [name, value] : j["coeffs"].items()) {
    const auto idx = s.var_index(name);
    if (!idx) throw ParseError(what + ": unknown variable '" + name + "'");
    row.coeffs[*idx] = rational_field(value, what);
  }
  return row;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
    std::string msg = e.what();
    if (const auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, line);
  }
}

template <class T>
T get_field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + ": missing field '" + key + "'");
  try {
    return j[key].get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string(what) + ": field '" + key + "' has the wrong type");
  }
}

std::string join_vector(const RatVector& v) {
  std::string out;
  for (const auto& x : v) out += " " + x.str();
  return out;
}

}  // namespace

Rational parse_number(std::string_view text) {
  const std::string t = trim(text);
  const auto dot = t.find('.');
  if (dot == std::string::npos) return Rational::parse(t);
  std::string digits = t.substr(0, dot) + t.substr(dot + 1);
  const std::size_t frac = t.size() - dot - 1;
  if (frac == 0 || digits.empty() || digits == "-" || digits == "+") throw ParseError("malformed number '" + t + "'");
  Rational r = Rational::parse(digits);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac);
  return r / Rational(scale);
}

ExportedModel export_lp(const Formulation& f) {
  f.validate();
  const auto& s = f.system;
  const auto& names = s.var_names();
  ExportedModel out;
  out.format = ModelFormat::lp;
  std::ostringstream lp;
  lp << "\\ " << f.name << "\n";
  lp << "Minimize\n obj: 0 " << names.front() << "\n";
  lp << "Subject To\n";

  std::vector<std::optional<Rational>> lower(s.num_vars()), upper(s.num_vars());
  std::vector<bool> as_bound(s.inequalities().size(), false);
  for (std::size_t i = 0; i < s.inequalities().size(); ++i) {
    if (!s.is_bound(i)) continue;
    const auto& row = s.inequalities()[i];
    const auto j = static_cast<std::size_t>(
        std::find_if(row.coeffs.begin(), row.coeffs.end(), [](const Rational& c) { return !c.is_zero(); }) -
        row.coeffs.begin());
    const Rational value = row.rhs / row.coeffs[j];
    if (!decimal_string(value)) continue;
    auto& slot = row.coeffs[j].sign() > 0 ? upper[j] : lower[j];
    if (slot) continue;
    slot = value;
    as_bound[i] = true;
  }

  auto emit = [&](const LinearRow& row, const std::string& label, const char* rel) {
    const mpz_class scale = lcm_of_denominators(row);
    RatVector c = row.coeffs;
    for (auto& x : c) x *= Rational(scale);
    const Rational rhs = row.rhs * Rational(scale);
    out.row_scales.emplace_back(scale);
    lp << " " << label << ": " << lp_terms(c, names) << " " << rel << " " << rhs.str() << "\n";
  };
  for (std::size_t i = 0; i < s.equations().size(); ++i) emit(s.equations()[i], "e" + std::to_string(i + 1), "=");
  std::size_t c = 0;
  for (std::size_t i = 0; i < s.inequalities().size(); ++i)
    if (!as_bound[i]) emit(s.inequalities()[i], "c" + std::to_string(++c), "<=");

  lp << "Bounds\n";
  for (std::size_t j = 0; j < s.num_vars(); ++j) {
    if (lower[j] && upper[j])
      lp << " " << *decimal_string(*lower[j]) << " <= " << names[j] << " <= " << *decimal_string(*upper[j]) << "\n";
    else if (lower[j])
      lp << " " << names[j] << " >= " << *decimal_string(*lower[j]) << "\n";
    else if (upper[j])
      lp << " -inf <= " << names[j] << " <= " << *decimal_string(*upper[j]) << "\n";
    else
      lp << " " << names[j] << " free\n";
  }
  if (!f.integer_vars.empty()) {
    lp << "Generals\n";
    for (auto j : f.integer_indices()) lp << " " << names[j] << "\n";
  }
  lp << "End\n";
  out.content = lp.str();
  return out;
}

ExportedModel export_json(const Formulation& f) {
  f.validate();
  const auto& names = f.system.var_names();
  json j;
  j["name"] = f.name;
  j["ideal"] = f.ideal;
  j["variables"] = names;
  j["integer"] = f.integer_vars;
  j["equations"] = json::array();
  for (const auto& r : f.system.equations()) j["equations"].push_back(row_to_json(r, names));
  j["inequalities"] = json::array();
  for (const auto& r : f.system.inequalities()) j["inequalities"].push_back(row_to_json(r, names));
  return {ModelFormat::json, j.dump(2) + "\n", {}};
}

Formulation import_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("formulation: expected a JSON object");
  auto names = get_field<std::vector<std::string>>(j, "variables", "formulation");
  Formulation f;
  try {
    f.system = LinearSystem(std::move(names));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("formulation: ") + e.what());
  }
  f.name = j.value("name", std::string{});
  f.ideal = j.value("ideal", true);
  if (j.contains("integer")) f.integer_vars = get_field<std::vector<std::string>>(j, "integer", "formulation");
  const std::set<std::string> unique(f.integer_vars.begin(), f.integer_vars.end());
  if (unique.size() != f.integer_vars.size()) throw ParseError("formulation: duplicate integer variable");
  for (const char* key : {"equations", "inequalities"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_array()) throw ParseError(std::string("formulation: '") + key + "' must be an array");
    std::size_t i = 0;
    for (const auto& r : j[key]) {
      const std::string what = std::string(key) + "[" + std::to_string(i++) + "]";
      if (key[0] == 'e')
        f.system.add_equation(row_from_json(r, f.system, what));
      else
        f.system.add_inequality(row_from_json(r, f.system, what));
    }
  }
  try {
    f.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("formulation: ") + e.what());
  }
  return f;
}

std::string encoding_to_json(const Encoding& h) {
  json j;
  j["n"] = h.size();
  j["k"] = h.bit_width();
  j["vectors"] = json::array();
  for (std::size_t i = 0; i < h.size(); ++i) j["vectors"].push_back(h.code(i));
  return j.dump() + "\n";
}

Encoding encoding_from_json(std::string_view text) {
  const json j = parse_json(text);
  const auto vectors = get_field<std::vector<std::vector<int>>>(j, "vectors", "encoding");
  if (vectors.empty()) throw ParseError("encoding: no vectors");
  const auto k = j.contains("k") ? get_field<std::size_t>(j, "k", "encoding") : vectors.front().size();
  if (j.contains("n") && get_field<std::size_t>(j, "n", "encoding") != vectors.size())
    throw ParseError("encoding: 'n' does not match the number of vectors");
  std::vector<Encoding::Code> codes;
  for (const auto& v : vectors) {
    if (v.size() != k) throw ParseError("encoding: every vector needs " + std::to_string(k) + " entries");
    Encoding::Code c;
    for (int x : v) {
      if (x != 0 && x != 1) throw ParseError("encoding: entries must be 0 or 1");
      c.push_back(static_cast<std::uint8_t>(x));
    }
    codes.push_back(std::move(c));
  }
  return Encoding(std::move(codes), k);
}

std::string triangulation_to_json(const GridTriangulation& t) {
  json j;
  j["m"] = t.m;
  j["triangles"] = json::array();
  for (const auto& tri : t.triangles) {
    json pts = json::array();
    for (const auto& p : tri) pts.push_back({p.first, p.second});
    j["triangles"].push_back(pts);
  }
  return j.dump() + "\n";
}

GridTriangulation triangulation_from_json(std::string_view text) {
  const json j = parse_json(text);
  GridTriangulation t;
  t.m = get_field<std::size_t>(j, "m", "triangulation");
  const auto tris = get_field<std::vector<std::vector<std::vector<int>>>>(j, "triangles", "triangulation");
  for (const auto& tri : tris) {
    if (tri.size() != 3) throw ParseError("triangulation: every triangle needs three points");
    Triangle out;
    for (std::size_t q = 0; q < 3; ++q) {
      if (tri[q].size() != 2) throw ParseError("triangulation: points are [u, v] pairs");
      out[q] = {tri[q][0], tri[q][1]};
      const int side = static_cast<int>(t.m) + 1;
      if (out[q].first < 1 || out[q].second < 1 || out[q].first > side || out[q].second > side)
        throw ParseError("triangulation: point outside the grid");
    }
    t.triangles.push_back(out);
  }
  try {
    t.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return t;
}

PwlFunction pwl_from_csv(const GridTriangulation& t, std::string_view text) {
  PwlFunction f{t, RatVector(t.num_points())};
  std::vector<bool> seen(t.num_points(), false);
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::string l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    const auto cells = split(l, ',');
    if (cells.size() != 3) throw ParseError("expected u,v,value", line_no);
    if (line_no == 1 && cells[0] == "u") continue;
    int u = 0, v = 0;
    try {
      u = std::stoi(cells[0]);
      v = std::stoi(cells[1]);
    } catch (const std::exception&) {
      throw ParseError("grid coordinates must be integers", line_no);
    }
    const int side = static_cast<int>(t.m) + 1;
    if (u < 1 || v < 1 || u > side || v > side) throw ParseError("grid point outside [1, m+1]^2", line_no);
    const auto idx = t.point_index({u, v});
    if (seen[idx]) throw ParseError("grid point given twice", line_no);
    seen[idx] = true;
    try {
      f.values[idx] = parse_number(cells[2]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw ParseError("missing values for some grid points");
  return f;
}

PolyFile parse_polyfile(std::string_view text) {
  PolyFile pf;
  bool have_dim = false, have_v = false, have_h = false;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "dim") {
      if (tok.size() != 2 || have_dim) throw ParseError("expected a single 'dim D' line", line_no);
      try {
        pf.dim = std::stoul(tok[1]);
      } catch (const std::exception&) {
        throw ParseError("bad dimension", line_no);
      }
      if (pf.dim == 0) throw ParseError("dimension must be positive", line_no);
      pf.hrep.dim = pf.dim;
      have_dim = true;
      continue;
    }
    if (!have_dim) throw ParseError("'dim D' must come first", line_no);
    const std::string& kind = tok[0];
    if (kind != "V" && kind != "R" && kind != "E" && kind != "I") throw ParseError("unknown line type '" + kind + "'", line_no);
    std::vector<std::string> nums(tok.begin() + 1, tok.end());
    if (kind == "E" || kind == "I") {
      const std::string rel = kind == "E" ? "=" : "<=";
      if (nums.size() != pf.dim + 2 || nums[pf.dim] != rel)
        throw ParseError("expected " + std::to_string(pf.dim) + " coefficients, '" + rel + "' and a right-hand side", line_no);
      nums.erase(nums.begin() + static_cast<std::ptrdiff_t>(pf.dim));
    } else if (nums.size() != pf.dim) {
      throw ParseError("expected " + std::to_string(pf.dim) + " coordinates after '" + kind + "'", line_no);
    }
    RatVector v;
    try {
      for (const auto& x : nums) v.push_back(parse_number(x));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (kind == "V" || kind == "R") {
      have_v = true;
      (kind == "V" ? pf.vrep.vertices : pf.vrep.rays).push_back(std::move(v));
    } else {
      have_h = true;
      Rational rhs = v.back();
      v.pop_back();
      (kind == "E" ? pf.hrep.equations : pf.hrep.inequalities).push_back({std::move(v), std::move(rhs)});
    }
    if (have_v && have_h) throw ParseError("a file holds either V/R or E/I lines, not both", line_no);
  }
  if (!have_dim) throw ParseError("missing 'dim D' line");
  pf.is_vrep = have_v;
  return pf;
}

std::string to_polyfile(const VRep& v, std::size_t dim) {
  std::string out = "dim " + std::to_string(dim) + "\n";
  for (const auto& p : v.vertices) out += "V" + join_vector(p) + "\n";
  for (const auto& r : v.rays) out += "R" + join_vector(r) + "\n";
  return out;
}

std::string to_polyfile(const HRep& h) {
  std::string out = "dim " + std::to_string(h.dim) + "\n";
  for (const auto& r : h.equations) out += "E" + join_vector(r.coeffs) + " = " + r.rhs.str() + "\n";
  for (const auto& r : h.inequalities) out += "I" + join_vector(r.coeffs) + " <= " + r.rhs.str() + "\n";
  return out;
}

std::string scan_to_csv(const ScanResult& r) {
  std::string out = "seed_or_id,size_G\n";
  for (const auto& s : r.samples) out += std::to_string(s.id) + "," + std::to_string(s.size_g) + "\n";
  return out;
}

std::string scan_summary_json(const ScanResult& r) {
  json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["count"] = r.samples.size();
  j["min"] = r.min;
  j["max"] = r.max;
  j["mean"] = r.mean;
  j["trivial_upper_bound"] = trivial_upper_bound(r.n, r.k);
  j["bin_width"] = 2;
  j["bins"] = json::array();
  for (const auto& b : r.bins) j["bins"].push_back({{"start", b.lo}, {"count", b.count}});
  return j.dump(2) + "\n";
}

std::string scan_histogram_dat(const ScanResult& r) {
  std::string out = "# bin_start count\n";
  for (const auto& b : r.bins) out += std::to_string(b.lo) + " " + std::to_string(b.count) + "\n";
  return out;
}

std::string size_report_json(const SizeReport& r) {
  json j = {{"size", r.size}, {"size_G", r.size_g}, {"size_B", r.size_b}, {"num_equations", r.num_equations},
            {"dim_H", r.dim_h}, {"k", r.k}, {"n", r.n}};
  return j.dump() + "\n";
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot open '" + p.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, std::string_view content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot open '" + p.string() + "' for writing");
  out << content;
  if (!out) throw IoError("write to '" + p.string() + "' failed");
}

}  // namespace embform
