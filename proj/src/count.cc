#include <udg/count.hh>

namespace udg
{
    auto mode_name(Mode mode) -> const char *
    {
        return mode == Mode::Sub ? "sub" : "ind";
    }

    auto parse_mode(const std::string & s) -> Mode
    {
        if (s == "sub")
            return Mode::Sub;
        if (s == "ind")
            return Mode::Ind;
        throw InputError{"unknown mode '" + s + "', expected sub or ind"};
    }

    auto binomial(unsigned n, unsigned k) -> BigCount
    {
        if (k > n)
            return 0;
        if (k > n - k)
            k = n - k;
        BigCount result = 1;
        for (unsigned i = 1 ; i <= k ; ++i) {
            result *= n - k + i;
            result /= i;
        }
        return result;
    }
}
