#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using cliquemerge::cli::kExitError;
using cliquemerge::cli::kExitNegative;
using cliquemerge::cli::kExitOk;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cliquemerge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void write(const fs::path& p, const std::string& content) { std::ofstream(p, std::ios::binary) << content; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines_starting(const std::string& text, char c) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) n += !line.empty() && line[0] == c;
  return n;
}

}  // namespace

TEST_CASE("solve lists the maximal cliques of fig4a") {
  Run r = run({"solve", "--gen", "fig4a", "--algo", "paper", "--list-maximal"});
  CHECK(r.code == kExitOk);
  CHECK(count_lines_starting(r.out, '[') == 3);
  CHECK(r.out.find("[A,B,C,D,E]\n") != std::string::npos);
  CHECK(r.out.find("largest [A,B,C,D,E] size 5\n") != std::string::npos);

  Run bk = run({"solve", "--gen", "fig4a", "--algo", "bk", "--list-maximal"});
  CHECK(bk.code == kExitOk);
  CHECK(count_lines_starting(bk.out, '[') == 3);
  CHECK(bk.out.find("ops") == std::string::npos);
}

TEST_CASE("decision mode exit codes") {
  Run no = run({"solve", "--gen", "fig4a", "--algo", "paper", "--k", "6"});
  CHECK(no.code == kExitNegative);
  CHECK(no.out == "NO\n");

  Run yes = run({"solve", "--gen", "fig4a", "--k", "5"});
  CHECK(yes.code == kExitOk);
  CHECK(yes.out == "YES [A,B,C,D,E]\n");

  CHECK(run({"solve", "--gen", "fig4a", "--algo", "brute", "--k", "5"}).code == kExitOk);
  CHECK(run({"solve", "--gen", "fig4a", "--algo", "bk", "--k", "6"}).code == kExitNegative);

  Run js = run({"solve", "--gen", "fig3a", "--k", "4", "--format", "json"});
  auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["decision"]["found"] == true);
  CHECK(doc["decision"]["witness"] == nlohmann::json({0, 1, 2, 3}));
}

TEST_CASE("per-node output") {
  Run r = run({"solve", "--gen", "fig3a", "--per-node"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("C: [A,B,C,D] [C,E,F]\n") != std::string::npos);

  Run js = run({"solve", "--gen", "fig3a", "--per-node", "--format", "json"});
  auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["per_node"].size() == 6);
  CHECK(doc["clique_count"] == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == kExitError);
  CHECK(run({"solve"}).code == kExitError);
  CHECK(run({"solve", "--gen", "fig4a", "--k", "3", "--list-maximal"}).code == kExitError);
  CHECK(run({"solve", "--gen", "fig4a", "--algo", "bk", "--per-node"}).code == kExitError);
  CHECK(run({"solve", "--gen", "fig4a", "--input", "x.dimacs"}).code == kExitError);
  CHECK(run({"solve", "--gen", "fig4a", "--algo", "magic"}).code == kExitError);
  CHECK(run({"solve", "--gen", "wheel:n=4"}).code == kExitError);
  CHECK(run({"solve", "--gen", "fig4a", "--k", "0"}).code == kExitError);
  CHECK(run({"solve", "--input", "does-not-exist.dimacs"}).code == kExitError);
  CHECK(run({"solve", "--gen", "complete:n=30", "--algo", "brute"}).code == kExitError);
  CHECK(run({"frobnicate"}).code == kExitError);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("gen then solve from a file") {
  const fs::path dir = fs::temp_directory_path() / "cliquemerge_test_cli_gen";
  fs::create_directories(dir);
  const fs::path file = dir / "k3.dimacs";
  CHECK(run({"gen", "complete:n=3", "-o", file.string()}).code == kExitOk);
  CHECK(slurp(file) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");

  Run r = run({"solve", "--input", file.string(), "--list-maximal"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("[0,1,2]\n") != std::string::npos);

  Run stdout_gen = run({"gen", "complete:n=3"});
  CHECK(stdout_gen.out == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");

  write(dir / "bad.dimacs", "p edge 2 1\ne 1 3\n");
  Run bad = run({"solve", "--input", (dir / "bad.dimacs").string()});
  CHECK(bad.code == kExitError);
  CHECK(bad.err.find("line 2") != std::string::npos);

  write(dir / "short.dimacs", "p edge 3 2\ne 1 2\n");
  Run warn = run({"solve", "--input", (dir / "short.dimacs").string()});
  CHECK(warn.code == kExitOk);
  CHECK(warn.err.find("warning") != std::string::npos);
}

TEST_CASE("sat") {
  const fs::path dir = fs::temp_directory_path() / "cliquemerge_test_cli_sat";
  fs::create_directories(dir);
  const fs::path contradiction = dir / "contradiction.cnf";
  write(contradiction, "c x1 and not x1\np cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
  const fs::path easy = dir / "easy.cnf";
  write(easy, "p cnf 3 2\n1 2 3 0\n-1 2 3 0\n");

  Run unsat = run({"sat", "--cnf", contradiction.string(), "--solver", "oracle"});
  CHECK(unsat.code == kExitNegative);
  CHECK(unsat.out == "UNSAT\n");
  CHECK(run({"sat", "--cnf", contradiction.string()}).code == kExitNegative);

  Run sat = run({"sat", "--cnf", easy.string(), "--solver", "paper"});
  CHECK(sat.code == kExitOk);
  CHECK(sat.out == "SAT\n");

  CHECK(run({"sat", "--cnf", (dir / "missing.cnf").string()}).code == kExitError);
  CHECK(run({"sat", "--cnf", easy.string(), "--solver", "guess"}).code == kExitError);
}

TEST_CASE("scale") {
  Run r = run({"scale", "--family", "complete", "--sizes", "8,16,32"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("n,phase1_ops,phase2_ops,wall_time_ns\n8,336,", 0) == 0);
  CHECK(r.err.find("phase1_slope") != std::string::npos);

  Run two = run({"scale", "--family", "gnp", "--sizes", "8,16"});
  CHECK(two.code == kExitOk);
  CHECK(two.err.find("refused") != std::string::npos);

  CHECK(run({"scale", "--sizes", "16,8,32"}).code == kExitError);
  CHECK(run({"scale", "--family", "tree", "--sizes", "1,2,3"}).code == kExitError);
}

TEST_CASE("audit") {
  const fs::path dir = fs::temp_directory_path() / "cliquemerge_test_cli_audit";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path cfg = dir / "campaign.cfg";
  write(cfg, "fixtures = fig3a, fig4a\nmoon_moser = 2\n");
  const fs::path csv = dir / "out.csv";
  Run r = run({"audit", "--config", cfg.string(), "--csv", csv.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("instances 3\n") != std::string::npos);
  CHECK(r.out.find("soundness_violations 0\n") != std::string::npos);
  CHECK(fs::exists(csv));

  write(dir / "broken.cfg", "fixtures = fig3a\nnot a setting\n");
  Run bad = run({"audit", "--config", (dir / "broken.cfg").string()});
  CHECK(bad.code == kExitError);
  CHECK(bad.err.find("line 2") != std::string::npos);
}
