#include <iostream>
#include <string>
#include <vector>

#include "eqk/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const eqk::CommandResult res = eqk::run_command(args);
  if (res.help) {
    std::cout << *res.help;
    return 0;
  }
  std::cout << eqk::emit_report(res.report, res.format);
  for (const auto& d : res.report.diagnostics) std::cerr << "eqk: " << d << "\n";
  return res.status;
}
