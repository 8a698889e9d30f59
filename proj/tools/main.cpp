#include <cstdio>
int main() { std::puts("fracpme: command-line surface not wired yet"); return 1; }
