#include "dispatch.hpp"
#include "turnkit/turnkit.h"

#include <doctest.h>

#include <fstream>
#include <string>

using turnkit::cli::dispatch;
using turnkit::cli::Result;

namespace {

std::string data(const std::string& name) { return std::string(TURNKIT_DATA_DIR) + "/" + name + ".json"; }

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("sphere over S^4 in k1, k2 coordinates") {
  const Result r = dispatch({"sphere", "--k", "2", "--k1", "1", "--k2", "1"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "turning_type: NotTurnable"));
}

TEST_CASE("invalid rank exits 2") {
  CHECK(dispatch({"sphere", "--k", "0", "--a", "1", "--b", "0"}).exit_code == 2);
  CHECK(dispatch({"sphere", "--k", "0", "--k1", "1", "--k2", "1"}).exit_code == 2);
}

TEST_CASE("usage errors exit 2 with usage text") {
  const Result unknown = dispatch({"frobnicate"});
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.err, "Usage"));
  CHECK(dispatch({}).exit_code == 2);
  CHECK(dispatch({"sphere", "--a", "1", "--b", "0"}).exit_code == 2);
  CHECK(dispatch({"sphere", "--k", "two", "--a", "1", "--b", "0"}).exit_code == 2);
  CHECK(dispatch({"cw"}).exit_code == 2);
  CHECK(dispatch({"quat", "spin"}).exit_code == 2);
  CHECK(dispatch({"sphere", "--k", "2", "--a", "1", "--b", "0", "--format", "yaml"}).exit_code == 2);
  const Result help = dispatch({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(contains(help.out, "sphere"));
}

TEST_CASE("over-determined coordinates are rejected") {
  const Result r = dispatch({"sphere", "--k", "2", "--a", "1", "--b", "0", "--k1", "1", "--k2", "1"});
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "over-determined"));
  CHECK(dispatch({"sphere", "--k", "4", "--a", "1", "--b", "0", "--euler", "2", "--xi", "0"}).exit_code == 2);
  CHECK(dispatch({"sphere", "--k", "4", "--a", "1"}).exit_code == 2);
}

TEST_CASE("Moore space with stably trivial data exits 3") {
  const Result r = dispatch({"cw", "tc", data("moore_s7_2_cells"), "--k", "4", "--euler", "0", "--stably-trivial"});
  CHECK(r.exit_code == 3);
  CHECK(contains(r.out, "sufficiency: NecessaryOnly"));
  CHECK(contains(r.out, "holds: HoldsBoth"));
}

TEST_CASE("cw tc on the M_l models") {
  for (int l = 1; l <= 4; ++l) {
    const std::string e = std::to_string(2 * (l + 1));
    const Result r = dispatch({"cw", "tc", data("m" + std::to_string(l) + "_cells"), "--k", "4", "--euler", e, "--ck-mod4", "0"});
    CAPTURE(l);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, l % 2 == 1 ? "holds: HoldsBoth" : "holds: Fails"));
  }
}

TEST_CASE("cw argument errors") {
  CHECK(dispatch({"cw", "tc", "/nonexistent.json", "--k", "4", "--euler", "0", "--stably-trivial"}).exit_code == 2);
  CHECK(dispatch({"cw", "tc", data("s8_cells"), "--k", "4", "--euler", "x", "--stably-trivial"}).exit_code == 2);
  CHECK(dispatch({"cw", "tc", data("s8_cells"), "--k", "4", "--euler", "2", "--ck-mod4", "0,1"}).exit_code == 2);
  CHECK(dispatch({"cw", "tc", data("s8_cells"), "--k", "4", "--euler", "2", "--ck-mod4", "0", "--stably-trivial"})
            .exit_code == 2);
  CHECK(dispatch({"cw", "modify-euler", data("s8_cells"), "--k", "4", "--euler", "2", "--mod", "0-1"}).exit_code == 2);
  CHECK(dispatch({"cw", "thomas", data("moore_s7_2_cells"), "--k", "4", "--euler", "0", "--ck", "0"}).exit_code == 2);
}

TEST_CASE("cw commands produce their results") {
  const Result coh = dispatch({"cw", "cohomology", data("rp2_cells"), "--ring", "Z", "--format", "record"});
  CHECK(coh.exit_code == 0);
  CHECK(contains(coh.out, "\"group\":\"Z/2\""));
  const Result sq = dispatch({"cw", "sq2", data("cp2_9"), "--degree", "2"});
  CHECK(sq.exit_code == 0);
  CHECK(contains(sq.out, "image: (1)"));
  const Result mod = dispatch({"cw", "modify-euler", data("s8_cells"), "--k", "4", "--euler", "2", "--mod", "0:1",
                               "--mod", "0:-3", "--format", "record"});
  CHECK(mod.exit_code == 0);
  CHECK(contains(mod.out, "\"cocycle\":[-2]"));
  const Result th = dispatch({"cw", "thomas", data("cp3_cells"), "--k", "3", "--euler", "4", "--ck", "4"});
  CHECK(th.exit_code == 0);
  CHECK(contains(th.out, "holds: true"));
}

TEST_CASE("other subcommands") {
  CHECK(contains(dispatch({"s4", "--range", "1"}).out, "NotTurnable: 4"));
  CHECK(contains(dispatch({"groupoid", "--k", "2"}).out, "isomorphism_type: (Z/2)^2"));
  CHECK(contains(dispatch({"gauge", "--k", "2"}).out, "pi0_cardinality: 2"));
  CHECK(contains(dispatch({"samelson", "--k", "3"}).out, "vanishes: Zero"));
  CHECK(contains(dispatch({"relations", "--k", "4", "--bound", "2"}).out, "all_passed: true"));
  CHECK(contains(dispatch({"quat", "extract", "--k1", "-2", "--k2", "3"}).out, "matches: true"));
  CHECK(contains(dispatch({"quat", "commute", "--k1", "0", "--k2", "1"}).out, "pass: true"));
  CHECK(contains(dispatch({"quat", "kirchhoff"}).out, "passed: true"));
  CHECK(dispatch({"quat", "kirchhoff", "--resolution", "1"}).exit_code == 2);
  CHECK(dispatch({"groupoid", "--k", "1"}).exit_code == 2);
}

TEST_CASE("records parse back to an equal report and repeat byte for byte") {
  const std::vector<std::string> args = {"relations", "--k", "7", "--bound", "3", "--seed", "42", "--format", "record"};
  const Result a = dispatch(args), b = dispatch(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  tk_report* x = nullptr;
  tk_report* y = nullptr;
  REQUIRE(tk_report_parse(a.out.c_str(), &x) == TK_OK);
  REQUIRE(tk_report_parse(b.out.c_str(), &y) == TK_OK);
  CHECK(tk_report_equal(x, y));
  CHECK(std::string(tk_report_render(x, TK_FORMAT_RECORD)) + "\n" == a.out);
  tk_report_free(x);
  tk_report_free(y);
}

TEST_CASE("batch mode keeps input order and aggregates exit codes") {
  const std::string text =
      "# header\n"
      "sphere --k 2 --k1 1 --k2 1\n"
      "\n"
      "quat extract --k1 1 --k2 -1\n"
      "cw tc " + data("moore_s7_2_cells") + " --k 4 --euler 0 --stably-trivial\n"
      "sphere --k 6 --a 1 --b 0\n";
  const Result r = turnkit::cli::run_batch(text, {"--format", "record"}, 4);
  CHECK(r.exit_code == 3);
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t nl; (nl = r.out.find('\n', start)) != std::string::npos; start = nl + 1)
    lines.push_back(r.out.substr(start, nl - start));
  REQUIRE(lines.size() == 4);
  CHECK(contains(lines[0], "\"command\":\"sphere\""));
  CHECK(contains(lines[1], "\"command\":\"quat extract\""));
  CHECK(contains(lines[2], "\"command\":\"cw tc\""));
  CHECK(contains(lines[3], "\"k\":6"));
  CHECK(r.out == turnkit::cli::run_batch(text, {"--format", "record"}, 1).out);

  CHECK(turnkit::cli::run_batch(text + "sphere --k 0 --a 0 --b 0\n", {}, 2).exit_code == 2);
  CHECK(turnkit::cli::run_batch("sphere --k 2 --a 0 --b 0\n", {}, 2).exit_code == 0);
  CHECK(turnkit::cli::run_batch("--batch x\n", {}, 1).exit_code == 2);
}

TEST_CASE("batch file through the top-level flag") {
  const std::string path = "turnkit_batch_test.txt";
  {
    std::ofstream f(path);
    f << "samelson --k 4\nsamelson --k 5\n";
  }
  const Result r = dispatch({"--batch", path, "--format", "record"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"k\":4") < r.out.find("\"k\":5"));
  CHECK(dispatch({"--batch", path, "sphere", "--k", "2"}).exit_code == 2);
  CHECK(dispatch({"--batch", "/nonexistent/batch.txt"}).exit_code == 2);
  std::remove(path.c_str());
}
