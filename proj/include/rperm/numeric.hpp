#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace rperm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);

// Pascal triangle rows 0..n; table[i][j] = C(i, j).
std::vector<std::vector<Int>> binomial_table(int n);

}  // namespace rperm
