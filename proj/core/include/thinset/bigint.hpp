#ifndef THINSET_BIGINT_HPP
#define THINSET_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace thinset {

// All counting values are exact; several of them overflow 64 bits well
// inside the supported index range.
using BigInt = boost::multiprecision::cpp_int;

} // namespace thinset

#endif
