// Batch front end; subcommands are filled in as the library lands.
#include <cstdio>

int main() {
  std::puts("cellring: not wired up yet");
  return 2;
}
