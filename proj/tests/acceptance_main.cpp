// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include "tropmirror.h"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
  const char* suite = argc > 1 ? argv[1] : "all";
  std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20261019;
  char* report = nullptr;
  int passed = 0;
  tm_status s = tm_verify(suite, seed, 0, &report, &passed);
  if (s != TM_OK) {
    std::fprintf(stderr, "acceptance: %s\n", tm_last_error());
    return 1;
  }
  std::fputs(report, stdout);
  tm_string_free(report);
  return passed ? 0 : 1;
}
