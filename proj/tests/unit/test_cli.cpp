#ifdef EMBFORM_HAVE_CLI
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "embform/io.hpp"
#include "embform/sos2.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "embform");
  std::ostringstream out, err;
  const int code = embform::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("embform_test_" + name)).string();
}

}  // namespace

TEST_CASE("command line exit codes") {
  using namespace embform::cli;
  CHECK(run({}).code == usage_error);
  CHECK(run({"sos2", "build"}).code == usage_error);

  auto r = run({"sos2", "build", "--n", "4", "--encoding", "gray", "--report"});
  CHECK(r.code == ok);
  CHECK(r.out.find("\"size_G\":4") != std::string::npos);

  r = run({"sos2", "build", "--n", "4", "--encoding", "bogus"});
  CHECK(r.code == invalid_encoding);
  CHECK(r.err.rfind("error: code=invalid_encoding message=\"", 0) == 0);

  embform::write_file(tmp("bad.json"), "{ not json");
  CHECK(run({"sos2", "verify", tmp("bad.json")}).code == parse_error);

  CHECK(run({"scan", "--k", "5", "--samples", "1", "--out", tmp("scan.csv")}).code == budget_exceeded);
  CHECK(run({"pwl", "build", "--m", "16", "--encoding", "unary"}).code == budget_exceeded);
}

TEST_CASE("command line round trip") {
  using namespace embform::cli;
  const auto path = tmp("gray8.json");
  CHECK(run({"sos2", "build", "--n", "8", "--encoding", "gray", "--out", path}).code == ok);
  auto r = run({"sos2", "verify", path});
  CHECK(r.code == ok);
  CHECK(r.out.find("\"ideal\":true") != std::string::npos);

  embform::write_file(tmp("tb.json"), embform::export_json(embform::textbook_cc(4)).content);
  CHECK(run({"sos2", "verify", tmp("tb.json")}).code == verification_failed);

  embform::write_file(tmp("pts.txt"), "dim 2\nV 0 0\nV 1 0\nV 0 1\n");
  CHECK(run({"hull", "--vrep", tmp("pts.txt"), "--out", tmp("h.txt")}).code == ok);
  CHECK(embform::parse_polyfile(embform::read_file(tmp("h.txt"))).hrep.inequalities.size() == 3);

  r = run({"mmc", "--n", "3", "--kmax", "2"});
  CHECK(r.code == ok);
  CHECK(r.out.find("\"min_size_G\":4") != std::string::npos);
}
#endif
