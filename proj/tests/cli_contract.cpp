// Exit-code and determinism contract of the command-line tool.  Run with
// the binary path as the only argument.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

int run(const std::string& cmd) {
  int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void expect_exit(const std::string& cmd, int want) {
  int got = run(cmd);
  if (got != want) {
    std::cerr << "FAIL: '" << cmd << "' exited " << got << ", wanted " << want << "\n";
    ++failures;
  } else {
    std::cout << "ok: " << cmd << " -> " << got << "\n";
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_contract <path-to-binary>\n";
    return 2;
  }
  std::string bin = argv[1];
  std::string tmp = "/tmp/padic_ergo_cli_test";
  std::string null = " > /dev/null 2>&1";

  // verify: 0 when everything holds, 1 on criterion failure, 2 on parse error
  expect_exit(bin + " verify 'x + (x^2 | 5)' -n 16" + null, 0);
  expect_exit(bin + " verify 'x + x^2'" + null, 1);
  expect_exit(bin + " verify 'x' --require ergodic" + null, 1);
  expect_exit(bin + " verify 'x' --require mp" + null, 0);
  expect_exit(bin + " verify 'x + ('" + null, 2);
  expect_exit(bin + " verify 'x' --criteria nosuch" + null, 2);
  expect_exit(bin + " verify 'x >> 1'" + null, 1);

  // gen: deterministic bytes, refusal without --force
  expect_exit(bin + " gen --kind inversive -n 16 --bytes 1024 --seed 0 --out " + tmp + ".a" + null, 0);
  expect_exit(bin + " gen --kind inversive -n 16 --bytes 1024 --seed 0 --out " + tmp + ".b" + null, 0);
  std::string a = slurp(tmp + ".a"), b = slurp(tmp + ".b");
  if (a != b || a.size() != 1024) {
    std::cerr << "FAIL: generator output is not deterministic or mis-sized\n";
    ++failures;
  }
  expect_exit(bin + " gen --expr 'x + x^2' -n 8 --bytes 4" + null, 1);
  expect_exit(bin + " gen --expr 'x + x^2' -n 8 --bytes 4 --force" + null, 0);
  expect_exit(bin + " gen --expr '1+x+2*((g@(x+1))-(g@x))' --g 'x ^ (2*x+1)' -n 10 --bytes 16 --out " +
                  tmp + ".d" + null, 0);
  expect_exit(bin + " gen --kind inversive -n 8 --bytes 0 --out " + tmp + ".e" + null, 0);
  if (!slurp(tmp + ".e").empty()) {
    std::cerr << "FAIL: --bytes 0 should produce an empty stream\n";
    ++failures;
  }

  // stats: Q1 on the worked 16-bit word 1111111100000111 fails at k=3;
  // with the first bit in the low position the bytes are 0xff, 0xe0
  {
    std::ofstream f(tmp + ".bits", std::ios::binary);
    unsigned char bytes[2] = {0xff, 0xe0};
    f.write(reinterpret_cast<char*>(bytes), 2);
  }
  expect_exit(bin + " stats --q1 --file " + tmp + ".bits" + null, 1);

  // a full period of an ergodic 8-bit generator passes Q1
  expect_exit(bin + " gen --expr 'x + (x^2 | 5)' -n 8 --bytes 256 --out " + tmp + ".per" + null, 0);
  expect_exit(bin + " stats --q1 --file " + tmp + ".per" + null, 0);
  expect_exit(bin + " stats --kfull 8 --file " + tmp + ".per" + null, 0);

  // the counterexample word stream is not 2-full: words 0,2,3,1 = bits
  // 00 01 11 10 -> byte lsb-first 0b01111000 = 0x78
  {
    std::ofstream f(tmp + ".bad", std::ios::binary);
    unsigned char byte = 0x78;
    f.write(reinterpret_cast<char*>(&byte), 1);
  }
  expect_exit(bin + " stats --kfull 2 --file " + tmp + ".bad" + null, 1);

  // demos
  expect_exit(bin + " demo bernoulli -n 12" + null, 0);
  expect_exit(bin + " demo tent -n 8" + null, 0);
  expect_exit(bin + " demo halfper -n 6 --random" + null, 0);
  expect_exit(bin + " demo bench --kind exponential -n 32 --millis 50" + null, 0);
  expect_exit(bin + " demo nosuch" + null, 2);

  // verify twice: byte-identical stdout
  expect_exit(bin + " verify 'x + (x^2 | 5)' -n 12 > " + tmp + ".v1 2>/dev/null", 0);
  expect_exit(bin + " verify 'x + (x^2 | 5)' -n 12 > " + tmp + ".v2 2>/dev/null", 0);
  if (slurp(tmp + ".v1") != slurp(tmp + ".v2") || slurp(tmp + ".v1").empty()) {
    std::cerr << "FAIL: verify output is not deterministic\n";
    ++failures;
  }

  if (failures) {
    std::cerr << failures << " CLI contract failure(s)\n";
    return 1;
  }
  std::cout << "cli contract: all checks passed\n";
  return 0;
}
