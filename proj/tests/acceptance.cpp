#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include "kummerlab/claims.hpp"

using namespace kummer;

namespace {

struct Captured {
  std::string out;
  int status = -1;
};

Captured capture(const std::string& cmd) {
  Captured c;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  c.status = pclose(pipe);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  int failed = 0;
  const int only = argc > 2 ? std::stoi(argv[2]) : 0;
  const ClaimOptions opts;
  for (const auto& c : all_claims()) {
    if (c.criterion == 0 || (only && c.criterion != only)) continue;
    const ClaimOutcome o = run_claim(c, opts);
    if (!o.pass) ++failed;
    std::cout << "criterion " << c.criterion << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.statement << '\n';
    if (!o.pass) std::cout << "  " << (o.error.empty() ? o.detail.dump() : o.error) << '\n';
    std::cout.flush();
  }

  if (only && only != 12) return failed ? 1 : 0;
  bool deterministic = false;
  std::string note = "no CLI path given";
  if (argc > 1) {
    const std::string cmd = std::string("\"") + argv[1] + "\" reproduce --json";
    const Captured a = capture(cmd), b = capture(cmd);
    deterministic = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
    note = std::to_string(a.out.size()) + " bytes per run";
    if (a.status != 0 || b.status != 0) note += ", reproduce exited nonzero";
  }
  if (!deterministic) ++failed;
  std::cout << "criterion 12: " << (deterministic ? "PASS" : "FAIL")
            << "  two reproduce --json runs are byte-identical (" << note << ")\n";
  return failed ? 1 : 0;
}
