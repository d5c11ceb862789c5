#include "rperm/permutation.hpp"
#include "rperm/tree.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

using namespace rperm;

namespace {

template <typename F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<int, int>> cases = {{1, 9}, {2, 8}, {3, 7}};
    if (argc == 3) cases = {{std::atoi(argv[1]), std::atoi(argv[2])}};
    constexpr std::uint64_t cap = 100'000'000;

    std::printf("%-6s %2s %2s %12s %10s %10s %8s %s\n", "kernel", "r", "n", "count", "serial_s",
                "omp_s", "speedup", "match");
    for (const auto& [r, n] : cases) {
        const RSpec spec = RSpec::first_n(r, n);
        const std::string count = permutation_count(spec).str();

        DescentPolynomial a, b;
        double ts = seconds([&] { a = descent_polynomial_serial(spec, cap); });
        double tp = seconds([&] { b = descent_polynomial(spec, cap); });
        std::printf("%-6s %2d %2d %12s %10.3f %10.3f %8.2f %s\n", "perm", r, n, count.c_str(), ts,
                    tp, ts / tp, a == b ? "yes" : "NO");

        ts = seconds([&] { a = tree_descent_polynomial_serial(spec, cap); });
        tp = seconds([&] { b = tree_descent_polynomial(spec, cap); });
        std::printf("%-6s %2d %2d %12s %10.3f %10.3f %8.2f %s\n", "tree", r, n, count.c_str(), ts,
                    tp, ts / tp, a == b ? "yes" : "NO");
    }
    return 0;
}
