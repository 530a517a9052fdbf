#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(PMCSOLVE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_graph(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("pmcsolve_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const std::string kC4 = "p tw 4 4\n1 2\n2 3\n3 4\n4 1\n";
const std::string kC6 = "p tw 6 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n";

}  // namespace

TEST_CASE("solve") {
  std::string c4 = write_graph("c4.gr", kC4);
  Run r = cli("solve --problem forest --input " + c4);
  CHECK(r.code == 0);
  CHECK(r.out.find("\"value\":3") != std::string::npos);
  CHECK(r.out.rfind("{\"problem\":\"max-induced-forest\",\"n\":4,\"m\":4,\"value\":3,\"F\":", 0) == 0);

  Run k5 = cli("solve --problem independent-set --gen complete:n=5");
  CHECK(k5.code == 0);
  CHECK(k5.out.find("\"value\":1") != std::string::npos);

  std::string c6 = write_graph("c6.gr", kC6);
  Run conn = cli("solve --problem connected --terminals 1,4 --input " + c6 + " --mode min");
  CHECK(conn.code == 0);
  CHECK(conn.out.find("\"value\":4") != std::string::npos);
}

TEST_CASE("exit codes") {
  std::string bad = write_graph("bad.gr", "p tw 2 1\n1 3\n");
  CHECK(cli("solve --problem forest --input " + bad).code == 1);
  CHECK(cli("solve --problem forest").code == 1);
  CHECK(cli("solve --problem nonsense --gen path:n=3").code == 1);
  std::string c6 = write_graph("c6.gr", kC6);
  // a 2-colorable subgraph containing a triangle cannot exist
  std::string k3 = write_graph("k3.gr", "p tw 3 3\n1 2\n2 3\n3 1\n");
  CHECK(cli("solve --problem colorable --q 2 --annotate 1,2,3 --input " + k3).code == 2);
  CHECK(cli("solve --problem forest --gen gnp:n=40,p=0.5 --seed 1 --budget-pmcs 10000").code == 3);
}

TEST_CASE("byte-identical output without timing") {
  Run a = cli("solve --problem forest --gen gnp:n=14,p=0.3 --seed 5 --no-timing");
  Run b = cli("solve --problem forest --gen gnp:n=14,p=0.3 --seed 5 --no-timing");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("weights file and annotations") {
  std::string p3 = write_graph("p3.gr", "p tw 3 2\n1 2\n2 3\n");
  std::string w = write_graph("p3.w", "1 1\n2 5\n3 1\n");
  Run r = cli("solve --problem independent-set --weights-file " + w + " --input " + p3);
  CHECK(r.out.find("\"X\":[2]") != std::string::npos);
  Run ann = cli("solve --problem independent-set --annotate 1 --input " + p3);
  CHECK(ann.out.find("\"F\":[1,3]") != std::string::npos);
}

TEST_CASE("enumerate") {
  std::string p3 = write_graph("p3.gr", "p tw 3 2\n1 2\n2 3\n");
  Run pm = cli("enumerate --pmcs --input " + p3);
  CHECK(pm.out == "1 2\n2 3\n");
  std::string c4 = write_graph("c4.gr", kC4);
  CHECK(cli("enumerate --separators --input " + c4).out == "1 3\n2 4\n");
  Run stats = cli("enumerate --pmcs --stats --input " + c4);
  CHECK(stats.out.find("4 ≤ 25: ok") != std::string::npos);
  CHECK(cli("enumerate --pmcs --gen gnp:n=40,p=0.5 --seed 1 --budget-pmcs 10000").code == 3);
}

TEST_CASE("verify") {
  Run ok = cli("verify --instances 3 --max-n 7");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"agree\":false") == std::string::npos);
  CHECK(cli("verify --instances 2 --max-n 6 --inject-bug").code != 0);
  Run lemma = cli("verify --lemma terminal-tw --instances 5");
  CHECK(lemma.code == 0);
}

TEST_CASE("generate") {
  Run g = cli("generate --gen cycle:n=4");
  CHECK(g.out == "p tw 4 4\n1 2\n1 4\n2 3\n3 4\n");
}
