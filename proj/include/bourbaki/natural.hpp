#ifndef BOURBAKI_NATURAL_HPP
#define BOURBAKI_NATURAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bourbaki {

// Unbounded natural number. Every sign/link/occurrence count goes through
// this type; fixed-width arithmetic is never used for counts.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Natural& n) { return n.str(); }

} // namespace bourbaki

#endif // BOURBAKI_NATURAL_HPP
