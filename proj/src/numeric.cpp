#include "rperm/numeric.hpp"

#include <stdexcept>

namespace rperm {

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

std::vector<std::vector<Int>> binomial_table(int n) {
    if (n < 0) throw std::invalid_argument("binomial_table of negative size");
    std::vector<std::vector<Int>> table(n + 1);
    for (int i = 0; i <= n; ++i) {
        table[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) table[i][j] = table[i - 1][j - 1] + table[i - 1][j];
    }
    return table;
}

}  // namespace rperm
