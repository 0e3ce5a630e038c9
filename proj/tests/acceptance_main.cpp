#include <cstdio>

// Placeholder: grows one criterion at a time as the library modules land.
int main() {
    std::puts("acceptance: no criteria registered yet");
    return 0;
}
