#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "embform/encoding.hpp"
#include "embform/experiments.hpp"
#include "embform/formulation.hpp"
#include "embform/polyhedra.hpp"
#include "embform/pwl2d.hpp"

namespace embform {

enum class ModelFormat { lp, json, polyfile };

struct ExportedModel {
  ModelFormat format = ModelFormat::lp;
  std::string content;
  /// LP only: the positive factor each constraint row was multiplied by, in
  /// output order (equations, then the remaining inequalities).
  std::vector<Rational> row_scales;
};

/// CPLEX-style LP text with objective 0. Each row is multiplied by the LCM of
/// its denominators. Single-variable rows with a finite decimal bound go to
/// Bounds; variables without a lower bound are declared free (the format
/// otherwise defaults them to >= 0); integer variables are listed under
/// Generals.
ExportedModel export_lp(const Formulation& f);

/// Rationals are "p/q" strings and coefficient maps are sparse by name.
ExportedModel export_json(const Formulation& f);
/// Throws ParseError (with a line number when the JSON itself is malformed).
Formulation import_json(std::string_view text);

/// {"n": N, "k": K, "vectors": [[0, 1, 0], ...]}.
std::string encoding_to_json(const Encoding& h);
Encoding encoding_from_json(std::string_view text);

/// {"m": M, "triangles": [[[u,v],[u,v],[u,v]], ...]} in triangle index order.
std::string triangulation_to_json(const GridTriangulation& t);
GridTriangulation triangulation_from_json(std::string_view text);

/// Lines "u,v,value" (optional header). Values may be integers, p/q or finite
/// decimals; every grid point must be given exactly once.
PwlFunction pwl_from_csv(const GridTriangulation& t, std::string_view text);

/// Accepts "p", "p/q" and finite decimals such as "-1.25".
Rational parse_number(std::string_view text);

/// Plain-text polyhedron: "dim D", then lines "V x..", "R r..", "E a.. = b"
/// and "I a.. <= b", numbers written as p/q. '#' starts a comment. A file
/// holds either V/R or E/I lines.
struct PolyFile {
  std::size_t dim = 0;
  VRep vrep;
  HRep hrep;
  bool is_vrep = false;
};
PolyFile parse_polyfile(std::string_view text);
std::string to_polyfile(const VRep& v, std::size_t dim);
std::string to_polyfile(const HRep& h);

/// "seed_or_id,size_G" rows.
std::string scan_to_csv(const ScanResult& r);
/// n, k, count, min, max, mean, trivial upper bound and bins.
std::string scan_summary_json(const ScanResult& r);
/// Two columns "bin_start count" for gnuplot.
std::string scan_histogram_dat(const ScanResult& r);

std::string size_report_json(const SizeReport& r);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, std::string_view content);

}  // namespace embform
