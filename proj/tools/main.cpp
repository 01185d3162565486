#include <cstdio>

int main() {
  std::puts("evifuse: command-line interface under construction");
  return 0;
}
