#include <cstdio>

#include "qrep/acceptance.hpp"

int main() {
  const auto report = qrep::run_acceptance();
  std::fputs(qrep::format_text(report).c_str(), stdout);
  return report.all_passed() ? 0 : 1;
}
