// Command-line front end; subcommands: tau, check, hodge, strata.
#include <cstdio>

int main() {
  std::puts("covertau: not yet wired");
  return 2;
}
