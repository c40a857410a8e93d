#ifndef GGS_ERRORS_HPP
#define GGS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ggs {

// Bad input from a caller or the command line: wrong sizes, mismatched
// primes, constant tuples, unparsable text.
class usage_error : public std::runtime_error {
public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// A condition the underlying theory guarantees has been observed to fail.
// This is never a valid state; it signals a bug in the implementation.
class theorem_violation : public std::logic_error {
public:
  explicit theorem_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace ggs

#endif
