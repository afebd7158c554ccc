#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace syzcolor {

using BigInt = boost::multiprecision::cpp_int;

} // namespace syzcolor
