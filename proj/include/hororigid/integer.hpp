#pragma once

#include <concepts>
#include <cstdint>
#include <sstream>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace hororigid {

/// Default coordinate type: arbitrary width, so no overflow assumption is baked in.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

template <class T>
struct is_exact_integer : std::bool_constant<std::is_integral_v<T> && std::is_signed_v<T>> {};

template <>
struct is_exact_integer<Int> : std::true_type {};

template <class T>
concept ExactInteger = is_exact_integer<T>::value;

template <ExactInteger T>
std::string to_string(const T& v) {
    if constexpr (std::is_integral_v<T>) {
        return std::to_string(v);
    } else {
        return v.str();
    }
}

/// Narrowing with a range check; throws std::overflow_error.
template <ExactInteger T>
long long to_ll(const T& v) {
    if constexpr (std::is_integral_v<T>) {
        return static_cast<long long>(v);
    } else {
        if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
            throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
        return static_cast<long long>(v);
    }
}

} // namespace hororigid
