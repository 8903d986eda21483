// Integration driver for the command-line tool: runs each invocation
// twice, requires byte-identical output, the expected exit status, and
// the expected substrings. Takes the binary path as argv[1].

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

int g_failures = 0;
std::string g_binary;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_command(const std::string& args) {
  RunResult result;
  std::string command = g_binary + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void expect(const std::string& args, int expected_exit,
            const std::vector<std::string>& expected_snippets) {
  RunResult first = run_command(args);
  RunResult second = run_command(args);
  bool ok = true;
  std::string why;
  if (first.exit_code != expected_exit) {
    ok = false;
    why = "exit " + std::to_string(first.exit_code) + " wanted " + std::to_string(expected_exit);
  }
  if (first.output != second.output) {
    ok = false;
    why += (why.empty() ? "" : "; ") + std::string("output not deterministic");
  }
  for (const std::string& snippet : expected_snippets) {
    if (first.output.find(snippet) == std::string::npos) {
      ok = false;
      why += (why.empty() ? "" : "; ") + ("missing \"" + snippet + "\"");
    }
  }
  std::printf("%s: paleytool %s%s%s\n", ok ? "PASS" : "FAIL", args.c_str(),
              why.empty() ? "" : " -- ", why.c_str());
  if (!ok) {
    std::printf("---- output ----\n%s----------------\n", first.output.c_str());
    ++g_failures;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_driver <path-to-paleytool>\n");
    return 1;
  }
  g_binary = argv[1];

  expect("field info --p 13 --e 1", 0, {"p=13", "q=13", "modulus=1 0", "omega=2"});
  expect("field info --p 3 --e 2", 0, {"q=9", "modulus=1 0 1", "omega=4"});
  expect("field info --p 4 --e 1", 2, {"error"});

  expect("two-squares 13", 0, {"13 = 2^2 + 3^2"});
  expect("two-squares 13 --method gauss", 0, {"13 = 2^2 + 3^2"});
  expect("two-squares 97 --method jacobsthal", 0, {"97 = 4^2 + 9^2"});
  expect("two-squares 7", 2, {"error"});
  expect("two-squares 13 --method fancy", 2, {});

  expect("srg --p 13 --e 1", 0, {"v=13 k=6 lambda=2 mu=3"});
  expect("srg --p 3 --e 2", 0, {"v=9 k=4 lambda=1 mu=2"});
  expect("srg --p 7 --e 1", 2, {"error"});

  expect("build paley --p 5 --e 1 --format edges", 0, {"0 1\n0 4\n1 2\n2 3\n3 4\n"});
  expect("build paley --p 13 --e 1 --format dot", 0, {"graph {"});
  expect("build tournament --p 7 --e 1 --format matrix", 0, {"0110100"});
  expect("build genpaley --p 3 --e 2 --m 4 --format edges", 0, {"0 1"});
  expect("build genpaley --p 3 --e 2", 2, {"error"});
  expect("build peisert --p 7 --e 2 --format matrix", 0, {});
  expect("build peisert --p 5 --e 2", 2, {"error"});

  expect("hadamard build sylvester --k 3", 0, {"order 8", "++++++++"});
  expect("hadamard build paley1 --q 11", 0, {"order 12"});
  expect("hadamard build paley2 --q 5", 0, {"order 12"});
  expect("hadamard build paley3 --k 2", 0, {"order 4"});
  expect("hadamard build paley1 --q 13", 2, {"error"});
  expect("hadamard coverage --limit 200", 0,
         {"achievable: 4 8 12", "exceptions: 92 116 156 172 184 188"});
  expect("hadamard coverage --limit 12", 0, {"achievable: 4 8 12", "exceptions: \n"});

  expect("design build qr --q 7", 0, {"points 7 blocks 7"});
  expect("design build pg --k 4", 0, {"points 15 blocks 15"});
  expect("design build qr --q 13", 2, {"error"});

  expect("verify carlitz --p 5 --e 2", 0, {"PASS", "all claims verified"});
  expect("verify theorem41 --q 17", 0, {"PASS", "order 136"});
  expect("verify mcconnel --p 3 --e 2 --d 4", 0, {"PASS", "mqh disagrees"});
  expect("verify table1", 1, {"FAIL", "92 116 156 172 184 188"});
  expect("verify all --only design", 0, {"all claims verified"});
  expect("verify all --only bogus", 2, {"error"});
  expect("verify theorem41", 2, {"error"});

  expect("nonsense", 2, {});
  expect("--help", 0, {"Usage"});

  // file round trips through --out and the check/aut subcommands
  std::string dir = "cli_driver_tmp";
  std::string mk = "mkdir -p " + dir;
  if (std::system(mk.c_str()) != 0) {
    std::fprintf(stderr, "cannot create %s\n", dir.c_str());
    return 1;
  }
  expect("hadamard build paley1 --q 7 --out " + dir + "/h8.txt", 0, {});
  expect("hadamard check " + dir + "/h8.txt", 0, {"hadamard order=8"});
  expect("build paley --p 13 --e 1 --format matrix --out " + dir + "/p13.txt", 0, {});
  expect("aut graph " + dir + "/p13.txt", 0, {"order=78"});
  expect("build tournament --p 7 --e 1 --format matrix --out " + dir + "/t7.txt", 0, {});
  expect("aut tournament " + dir + "/t7.txt", 0, {"order=21"});
  expect("design build qr --q 7 --out " + dir + "/fano.txt", 0, {});
  expect("aut design " + dir + "/fano.txt", 0, {"order=168"});
  expect("aut graph " + dir + "/missing.txt", 2, {"error"});
  {
    std::ofstream bad(dir + "/bad.txt");
    bad << "order 2\n++\n++\n";
  }
  expect("hadamard check " + dir + "/bad.txt", 1, {"not hadamard"});
  {
    std::ofstream garbled(dir + "/garbled.txt");
    garbled << "+-\n-+\n";
  }
  expect("hadamard check " + dir + "/garbled.txt", 2, {"error"});
  {
    std::ofstream one(dir + "/one.txt");
    one << "0\n";
  }
  expect("aut graph " + dir + "/one.txt", 0, {"order=1"});

  if (g_failures == 0) {
    std::printf("cli driver: all invocations behaved\n");
  } else {
    std::printf("cli driver: %d failure(s)\n", g_failures);
  }
  return g_failures;
}
