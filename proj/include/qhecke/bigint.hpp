#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qhecke {

using BigInt = boost::multiprecision::cpp_int;

}
