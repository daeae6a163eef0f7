#include "bamin/saturation.hh"

#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace bamin {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    cpp_int r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Fraction of the t-subsets of the n×n grid that meet every row.
cpp_rational row_cover_fraction(std::size_t n, std::size_t t) {
    const std::size_t cells = n * n;
    if (t < n || t > cells) return 0;
    // C(x, n-1) for x in [0, cells]
    std::vector<cpp_int> choose_row(cells + 1);
    for (std::size_t x = 0; x <= cells; ++x) choose_row[x] = x + 1 >= n ? binomial(x, n - 1) : cpp_int(0);
    std::vector<cpp_int> choose_n(n + 1);
    for (std::size_t i = 0; i <= n; ++i) choose_n[i] = binomial(n, i);

    // C(m - n, t - n), stepped along m.
    const std::size_t r = t - n;
    cpp_int tail = binomial(0, r);
    cpp_int alpha = 0;
    for (std::size_t m = n; m <= cells; ++m) {
        if (m > n) {
            std::size_t j = m - n;  // tail = C(j - 1, r) -> C(j, r)
            if (j == r)
                tail = 1;
            else if (j > r)
                tail = tail * j / (j - r);
        }
        if (tail == 0) continue;
        cpp_int inner = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (i * n + 1 > m) break;
            const cpp_int& term = choose_row[m - i * n - 1];
            if (i % 2 == 0)
                inner += choose_n[i] * term;
            else
                inner -= choose_n[i] * term;
        }
        alpha += tail * inner;
    }
    return cpp_rational(alpha, binomial(cells, t));
}

}  // namespace

ExactFraction saturation_probability_count(std::size_t n, std::size_t symbols, std::size_t transitions) {
    cpp_rational per_symbol = n == 0 ? cpp_rational(0) : row_cover_fraction(n, transitions);
    cpp_rational u = 1;
    for (std::size_t s = 0; s < symbols; ++s) u *= per_symbol;
    ExactFraction f;
    f.numerator = boost::multiprecision::numerator(u).str();
    f.denominator = boost::multiprecision::denominator(u).str();
    using Big = boost::multiprecision::cpp_bin_float_50;
    Big value = Big(boost::multiprecision::numerator(u)) / Big(boost::multiprecision::denominator(u));
    f.value = value.convert_to<double>();
    return f;
}

ExactFraction saturation_probability(std::size_t n, std::size_t symbols, double td) {
    auto t = static_cast<std::size_t>(std::floor(double(n) * td + 0.5));
    return saturation_probability_count(n, symbols, t);
}

}  // namespace bamin
