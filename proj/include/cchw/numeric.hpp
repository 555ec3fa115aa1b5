#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace cchw {

// All core arithmetic is exact rational; floating point appears only in the
// asymptotic-ratio evaluation, which uses a 50-digit binary float.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;

using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& a);
Vec negate(const Vec& a);
bool is_zero(const Vec& a);

std::string to_string(const Rat& r);
std::string to_string(const Vec& v);

BigInt binomial(unsigned n, unsigned k);

}  // namespace cchw
