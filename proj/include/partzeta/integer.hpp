#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace partzeta {

// Expression templates off: values behave like plain arithmetic types.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

}  // namespace partzeta
