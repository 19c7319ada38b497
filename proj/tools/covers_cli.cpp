#include <cstdio>
int main() { std::puts("covers: cli not wired yet"); return 2; }
