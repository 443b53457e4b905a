#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace udg
{
    /// Exact occurrence counts. Signed so inclusion-exclusion partial sums
    /// can go negative; every count the library returns is nonnegative.
    using BigCount = boost::multiprecision::cpp_int;

    enum class Mode
    {
        Sub,
        Ind
    };

    auto mode_name(Mode mode) -> const char *;
    auto parse_mode(const std::string & s) -> Mode;

    /// Malformed input: bad file, bad vertex id, violated precondition.
    class InputError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Well-formed request that cannot be carried out (e.g. a generator that
    /// gave up, a pattern too large for the separation machinery).
    class InfeasibleError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    auto binomial(unsigned n, unsigned k) -> BigCount;
}
