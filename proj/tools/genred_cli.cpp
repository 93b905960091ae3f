#include <cstdio>
int main() { std::puts("genred: cli under construction"); return 0; }
