#include <iostream>

#include "acceptance.hpp"

int main() {
  const auto results = qhall::cli::run_acceptance(&std::cerr);
  std::cout << qhall::cli::format_results(results);
  bool ok = results.size() == 13;
  for (const auto& r : results) ok &= r.pass;
  std::cout << (ok ? "all 13 criteria passed" : "acceptance FAILED") << "\n";
  return ok ? 0 : 1;
}
