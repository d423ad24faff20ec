#include <cstdio>
int main() { std::puts("flipiet cli placeholder"); return 1; }
