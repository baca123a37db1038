#ifndef starcolor_bigint_hpp
#define starcolor_bigint_hpp

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace starcolor {

using BigInt = boost::multiprecision::cpp_int;

/// base^exp with 0^0 = 1.
inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

} // namespace starcolor

#endif // starcolor_bigint_hpp
