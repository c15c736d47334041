#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "f2sym/cli.hpp"
#include "f2sym/translate.hpp"

namespace fs = std::filesystem;
using namespace f2sym;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("f2sym_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name, std::ios::binary) << text;
    return (path / name).string();
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("default output path") {
  CHECK(default_output_path("dir/test.f") == "dir/test.m");
  CHECK(default_output_path("plain") == "plain.m");
}

TEST_CASE("golden translation through the command line") {
  TempDir dir;
  std::string in = dir.write("test.f", slurp(F2SYM_TEST_DATA "/golden_input.f"));
  Result r = cli({in});
  CHECK(r.code == 0);
  REQUIRE(fs::exists(dir.path / "test.m"));
  CHECK(normalize(slurp(dir.path / "test.m")) ==
        normalize(slurp(F2SYM_TEST_DATA "/golden_output.m")));
}

TEST_CASE("explicit output and idempotence") {
  TempDir dir;
  std::string in = dir.write("test.f", slurp(F2SYM_TEST_DATA "/golden_input.f"));
  std::string a = (dir.path / "a.m").string();
  std::string b = (dir.path / "b.m").string();
  CHECK(cli({in, "-o", a}).code == 0);
  CHECK(cli({in, "-o", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find('\r') == std::string::npos);
}

TEST_CASE("check only writes no file") {
  TempDir dir;
  std::string in = dir.write("test.f", slurp(F2SYM_TEST_DATA "/golden_input.f"));
  CHECK(cli({in, "--check"}).code == 0);
  CHECK(cli({in, "--check", "--eval"}).code == 0);
  CHECK(cli({in, "--check", "-o", (dir.path / "x.m").string()}).code == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir.path)) {
    (void)e;
    ++files;
  }
  CHECK(files == 1);
}

TEST_CASE("normalized output") {
  TempDir dir;
  std::string in = dir.write("t.f", "      x = 1\n      print *, 'a  b'\n      end\n");
  Result r = cli({in, "--check", "--normalize"});
  CHECK(r.code == 0);
  CHECK(r.out == "x=1;Print[\"a  b\"];\n");
}

TEST_CASE("eval streams the transcript") {
  TempDir dir;
  std::string in = dir.write("test.f", slurp(F2SYM_TEST_DATA "/golden_input.f"));
  Result r = cli({in, "--eval"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("6 OK messages should appear:\nOK-1\n", 0) == 0);
  CHECK(r.out.find("n - 3      = 0\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  TempDir dir;
  SUBCASE("goto") {
    std::string in = dir.write("g.f", "      x=1\n      goto 10\n10    continue\n      end\n");
    Result r = cli({in});
    CHECK(r.code == kExitUnsupported);
    CHECK(r.err.find("g.f:2:") != std::string::npos);
    CHECK_FALSE(fs::exists(dir.path / "g.m"));
  }
  SUBCASE("non-literal step") {
    std::string in = dir.write("s.f", "      do 10 x=0,n,k\n10    s=s+x\n      end\n");
    CHECK(cli({in}).code == kExitUnsupported);
  }
  SUBCASE("syntax") {
    std::string in = dir.write("p.f", "      x=(1\n      end\n");
    Result r = cli({in});
    CHECK(r.code == kExitSyntax);
    CHECK(r.err.find("p.f:1:") != std::string::npos);
  }
  SUBCASE("missing input") { CHECK(cli({(dir.path / "none.f").string()}).code == kExitIo); }
  SUBCASE("unwritable output") {
    std::string in = dir.write("w.f", "      x=1\n      end\n");
    CHECK(cli({in, "-o", (dir.path / "no" / "such" / "dir.m").string()}).code == kExitIo);
  }
  SUBCASE("evaluation") {
    std::string in = dir.write("e.f", "      x=1/0\n      end\n");
    Result r = cli({in, "--eval"});
    CHECK(r.code == kExitEval);
    CHECK(r.err.find("x=1/0") != std::string::npos);
  }
  SUBCASE("strict unbound") {
    std::string in = dir.write("test.f", slurp(F2SYM_TEST_DATA "/golden_input.f"));
    CHECK(cli({in, "--eval", "--strict-unbound"}).code == kExitEval);
  }
  SUBCASE("usage") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"a.f", "b.f"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
  }
}
