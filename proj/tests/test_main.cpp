#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <cstring>

#include "seed.hpp"

namespace {
std::uint64_t g_seed = 20240901;
}

std::uint64_t test_seed() { return g_seed; }

int main(int argc, char** argv) {
    if (const char* env = std::getenv("OVERQT_SEED"))
        g_seed = std::strtoull(env, nullptr, 10);
    for (int i = 1; i < argc; ++i)
        if (std::strncmp(argv[i], "--seed=", 7) == 0)
            g_seed = std::strtoull(argv[i] + 7, nullptr, 10);
    doctest::Context context;
    context.applyCommandLine(argc, argv);
    return context.run();
}
