#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fgc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow3(int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

inline BigInt pow2(const BigInt& e) {
    // e can exceed machine range only for absurd inputs; guard anyway.
    if (e < 0 || e > 100000000) throw std::overflow_error("pow2 exponent out of range");
    return BigInt(1) << static_cast<unsigned>(e);
}

} // namespace fgc
