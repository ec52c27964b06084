#include "cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "embform/error.hpp"
#include "embform/experiments.hpp"
#include "embform/io.hpp"
#include "embform/pwl2d.hpp"
#include "embform/sos2.hpp"
#include "embform/verify.hpp"
#include "json.hpp"

namespace embform::cli {

namespace {

std::string quoted(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

void error_line(std::ostream& err, const char* code, const std::string& message) {
  err << "error: code=" << code << " message=\"" << quoted(message) << "\"\n";
}

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse_error: return parse_error;
    case ErrorCode::budget_exceeded: return budget_exceeded;
    case ErrorCode::invalid_encoding: return invalid_encoding;
    case ErrorCode::verification_failed: return verification_failed;
    default: return other_error;
  }
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Encoding make_encoding(const std::string& spec, std::size_t n) {
  if (spec == "unary") return unary(n);
  if (spec == "gray") return gray(n);
  if (spec == "antigray") return antigray(n);
  if (spec.rfind("random:", 0) == 0) {
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(spec.substr(7));
    } catch (const std::exception&) {
      throw InvalidArgument("bad seed in '" + spec + "'");
    }
    return random_binary(n, seed);
  }
  if (spec.rfind("file:", 0) == 0) return encoding_from_json(read_file(spec.substr(5)));
  throw InvalidArgument("unknown encoding '" + spec + "' (unary|gray|antigray|random:SEED|file:PATH)");
}

Encoding encoding_from_spec(const std::string& spec, std::size_t n) {
  const Encoding h = [&] {
    try {
      return make_encoding(spec, n);
    } catch (const InvalidArgument& e) {
      throw InvalidEncoding(e.what());
    }
  }();
  if (h.size() != n)
    throw InvalidEncoding("encoding has " + std::to_string(h.size()) + " codes, expected " + std::to_string(n));
  return h;
}

GridTriangulation triangulation_from_spec(const std::string& spec, std::size_t m) {
  if (spec == "unionjack") return union_jack(m);
  if (spec == "modified") return modified_union_jack(m);
  if (spec == "k1") return k1(m);
  if (spec.rfind("file:", 0) == 0) {
    auto t = triangulation_from_json(read_file(spec.substr(5)));
    if (t.m != m) throw InvalidArgument("triangulation file has m = " + std::to_string(t.m));
    return t;
  }
  throw InvalidArgument("unknown triangulation '" + spec + "' (unionjack|modified|k1|file:PATH)");
}

/// LP unless the path ends in .json. With no path the model goes to `out`.
void emit_model(const Formulation& f, const std::string& path, std::ostream& out) {
  const std::string text = ends_with(path, ".json") ? export_json(f).content : export_lp(f).content;
  if (path.empty())
    out << text;
  else
    write_file(path, text);
}

std::vector<std::string> code_strings(const Encoding& h) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::string s;
    for (auto b : h.code(i)) s += b ? '1' : '0';
    out.push_back(s);
  }
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Embedding formulations for disjunctive constraints"};
  app.require_subcommand(1);

  // sos2
  auto* sos2 = app.add_subcommand("sos2", "SOS2 embedding formulations");
  sos2->require_subcommand(1);
  auto* sos2_build = sos2->add_subcommand("build", "Closed-form embedding formulation");
  std::size_t n = 0;
  std::string enc_spec, out_path;
  bool report = false;
  sos2_build->add_option("--n", n, "Number of segments")->required()->check(CLI::Range(1, 1 << 20));
  std::string enc_file;
  auto* enc_opt = sos2_build->add_option("--encoding", enc_spec, "unary|gray|antigray|random:SEED|file:PATH");
  auto* enc_file_opt = sos2_build->add_option("--encoding-file", enc_file, "Encoding JSON (same as file:PATH)");
  enc_opt->excludes(enc_file_opt);
  sos2_build->add_option("--out", out_path, "Output model (.lp or .json)");
  sos2_build->add_flag("--report", report, "Print the size report");

  auto* sos2_verify = sos2->add_subcommand("verify", "Check idealness and recover the encoding");
  std::string model_path;
  sos2_verify->add_option("path", model_path, "Formulation JSON")->required();

  // pwl
  auto* pwl = app.add_subcommand("pwl", "Piecewise linear functions of two variables");
  pwl->require_subcommand(1);
  auto* pwl_build = pwl->add_subcommand("build", "Embedding formulation by convex hull");
  std::string tri_spec = "unionjack", pwl_enc = "jack", values_path;
  std::size_t m = 0;
  pwl_build->add_option("--triangulation", tri_spec, "unionjack|modified|k1|file:PATH");
  pwl_build->add_option("--m", m, "Grid size")->required()->check(CLI::Range(1, 64));
  pwl_build->add_option("--encoding", pwl_enc, "jack|unary|gray|file:PATH");
  pwl_build->add_option("--values", values_path, "CSV of u,v,value");
  pwl_build->add_option("--out", out_path, "Output model (.lp or .json)");
  pwl_build->add_flag("--report", report, "Print the size report");

  // scan
  auto* scan = app.add_subcommand("scan", "size_G over binary encodings");
  std::size_t k = 0, samples = 1000;
  std::uint64_t seed = 1;
  bool exhaustive = false, long_run = false;
  unsigned threads = 0;
  std::string summary_path, histogram_path;
  scan->add_option("--k", k, "Bits")->required();
  auto* ex_flag = scan->add_flag("--exhaustive", exhaustive, "All (2^k)! encodings (k <= 3)");
  auto* samples_opt = scan->add_option("--samples", samples, "Number of random encodings");
  scan->add_option("--seed", seed, "First seed");
  scan->add_option("--out", out_path, "CSV output")->required();
  scan->add_option("--summary", summary_path, "Summary JSON output");
  scan->add_option("--histogram", histogram_path, "gnuplot histogram data");
  scan->add_flag("--long-run", long_run, "Allow k >= 5");
  scan->add_option("--threads", threads, "Worker threads (0 = all cores)");
  ex_flag->excludes(samples_opt);

  // hull
  auto* hull = app.add_subcommand("hull", "Convert between V- and H-representations");
  std::string vrep_path, hrep_path;
  auto* vopt = hull->add_option("--vrep", vrep_path, "Input points file");
  auto* hopt = hull->add_option("--hrep", hrep_path, "Input inequality file");
  vopt->excludes(hopt);
  hull->add_option("--out", out_path, "Output file")->required();

  // mmc
  auto* mmc = app.add_subcommand("mmc", "Exhaustive minimum embedding size for SOS2");
  std::size_t k_max = 0;
  mmc->add_option("--n", n, "Number of segments")->required();
  mmc->add_option("--kmax", k_max, "Largest bit width")->required();

  // antigray
  auto* anti = app.add_subcommand("antigray", "Compare anti-gray size_G with cube hyperplane counts");
  anti->add_option("--k", k, "Bits")->required()->check(CLI::Range(2, 6));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    error_line(err, "usage", e.what());
    return usage_error;
  }

  try {
    if (*sos2_build) {
      if (!enc_file.empty()) enc_spec = "file:" + enc_file;
      if (enc_spec.empty()) throw InvalidArgument("sos2 build: pass --encoding or --encoding-file");
      const auto h = encoding_from_spec(enc_spec, n);
      const auto b = build_sos2(h);
      if (report) out << size_report_json(b.report);
      if (!report || !out_path.empty()) emit_model(b.formulation, out_path, out);
    } else if (*sos2_verify) {
      const Formulation f = import_json(read_file(model_path));
      const auto cont = f.continuous_indices();
      if (cont.size() < 3) throw InvalidArgument("an SOS2 formulation needs at least three continuous variables");
      const auto options = HullOptions::from_environment();
      const auto bad = fractional_vertices(f, options);
      if (!bad.empty()) throw VerificationFailed("not ideal: relaxation vertex " + to_string(bad.front()));
      const auto rec = recover_encoding(f, sos2_family(cont.size() - 1), options);
      if (!rec.encoding) throw VerificationFailed("not a formulation of SOS2: " + rec.reason);
      nlohmann::json j = {{"ideal", true}, {"valid", true}, {"codes", code_strings(*rec.encoding)}};
      out << j.dump() << "\n";
    } else if (*pwl_build) {
      const auto t = triangulation_from_spec(tri_spec, m);
      const std::size_t count = t.triangles.size();
      const Encoding h = pwl_enc == "jack" ? jack_encoding(t) : encoding_from_spec(pwl_enc, count);
      const auto options = HullOptions::from_environment();
      Formulation f = embed_and_hull(t, h, options);
      const auto check = check_slices(f, h, pwl_family(t), options);
      if (!check.ok) throw VerificationFailed(check.message);
      if (report) {
        SizeReport r = count_facets(to_hrep(f.system));
        r.k = h.bit_width();
        r.n = count;
        r.dim_h = geometry(h).dim_h;
        out << size_report_json(r);
      }
      if (!values_path.empty()) f = graph_formulation(pwl_from_csv(t, read_file(values_path)), f);
      if (!report || !out_path.empty()) emit_model(f, out_path, out);
    } else if (*scan) {
      if (!exhaustive && samples_opt->count() == 0 && k > 3)
        throw InvalidArgument("scan: pass --exhaustive or --samples");
      ScanOptions o;
      o.mode = exhaustive ? ScanMode::exhaustive : ScanMode::sample;
      o.count = samples;
      o.seed = seed;
      o.long_run = long_run;
      o.threads = threads;
      const auto r = scan_binary_encodings(k, o);
      write_file(out_path, scan_to_csv(r));
      if (!summary_path.empty()) write_file(summary_path, scan_summary_json(r));
      if (!histogram_path.empty()) write_file(histogram_path, scan_histogram_dat(r));
      out << scan_summary_json(r);
    } else if (*hull) {
      if (vrep_path.empty() == hrep_path.empty()) throw InvalidArgument("hull: pass exactly one of --vrep, --hrep");
      const auto options = HullOptions::from_environment();
      const bool from_v = !vrep_path.empty();
      const PolyFile pf = parse_polyfile(read_file(from_v ? vrep_path : hrep_path));
      if (from_v) {
        if (!pf.is_vrep) throw ParseError("--vrep expects V/R lines");
        write_file(out_path, to_polyfile(vrep_to_hrep(pf.vrep, options)));
      } else {
        if (pf.is_vrep) throw ParseError("--hrep expects E/I lines");
        const auto v = hrep_to_vrep(pf.hrep, options);
        write_file(out_path, v ? to_polyfile(*v, pf.dim) : "dim " + std::to_string(pf.dim) + "\n# empty\n");
      }
    } else if (*mmc) {
      const auto r = exhaustive_mmc(n, k_max);
      nlohmann::json j = {{"n", r.n},           {"k_max", r.k_max},       {"encodings", r.encodings},
                          {"min_size_G", r.min_size_g}, {"min_size", r.min_size}};
      j["argmin_size_G"] = nlohmann::json::array();
      for (const auto& h : r.argmin_size_g) j["argmin_size_G"].push_back(code_strings(h));
      j["argmin_size"] = nlohmann::json::array();
      for (const auto& h : r.argmin_size) j["argmin_size"].push_back(code_strings(h));
      out << j.dump() << "\n";
    } else if (*anti) {
      const auto c = antigray_check(k);
      nlohmann::json j = {{"k", c.k},
                          {"size_G", c.size_g},
                          {"affine_hyperplanes", c.affine_hyperplanes},
                          {"equal", c.equal}};
      out << j.dump() << "\n";
    }
  } catch (const Error& e) {
    error_line(err, to_string(e.code()), e.what());
    return exit_for(e.code());
  } catch (const std::exception& e) {
    error_line(err, "internal", e.what());
    return other_error;
  }
  return ok;
}

}  // namespace embform::cli
