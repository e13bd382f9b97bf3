#ifndef NCPAIR_COUNT_HPP
#define NCPAIR_COUNT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncpair {

/// Exact nonnegative enumeration result. Every count in the library is one
/// of these; nothing on the counting path touches floating point.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Count& c) { return c.str(); }

inline Count count_from_string(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty count literal");
    for (char ch : s)
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("count literal must be decimal digits: " + s);
    return Count(s);
}

/// binom(n, k) with binom(n, k) = 0 for k < 0 or k > n, and for n < 0.
inline Count binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Count result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: result is binom(n-k+i, i) here
    }
    return result;
}

/// Division that must be exact; a remainder is an internal error.
inline Count exact_div(const Count& num, const Count& den)
{
    if (den == 0)
        throw std::logic_error("exact_div: division by zero");
    Count q = num / den;
    if (q * den != num)
        throw std::logic_error("exact_div: non-exact division " + num.str() + " / " + den.str());
    return q;
}

/// Fuss-Catalan number C^{(n)}_r = binom((n+1) r, r) / (n r + 1).
inline Count fuss_catalan(std::int64_t n, std::int64_t r)
{
    if (n < 0 || r < 0)
        throw std::invalid_argument("fuss_catalan: negative argument");
    return exact_div(binomial((n + 1) * r, r), Count(n * r + 1));
}

}  // namespace ncpair

#endif  // NCPAIR_COUNT_HPP
