#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include "cli.hpp"

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("THSPLINES_THREADS")) {
        const int n = std::atoi(threads);
        if (n > 0) omp_set_num_threads(n);
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    return thsplines::cli::run(args, std::cout, std::cerr);
}
