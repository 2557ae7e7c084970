#ifndef CCR_KIND_HPP
#define CCR_KIND_HPP

#include <stdexcept>
#include <string>

namespace ccr
{

// The three CCR polynomials; the value is the weight of X.
enum class Kind
{
    U = 1,
    V = 2,
    W = 3
};

inline int kind_weight(Kind k)
{
    return static_cast<int>(k);
}

inline char kind_letter(Kind k)
{
    switch (k) {
    case Kind::U:
        return 'U';
    case Kind::V:
        return 'V';
    case Kind::W:
        return 'W';
    }
    return '?';
}

inline Kind parse_kind(const std::string &s)
{
    if (s == "U" || s == "u") {
        return Kind::U;
    }
    if (s == "V" || s == "v") {
        return Kind::V;
    }
    if (s == "W" || s == "w") {
        return Kind::W;
    }
    throw std::invalid_argument("unknown polynomial kind '" + s + "' (expected U, V or W)");
}

inline bool is_odd_prime(long n)
{
    if (n < 3 || n % 2 == 0) {
        return false;
    }
    for (long d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

inline void require_odd_prime(long ell)
{
    if (!is_odd_prime(ell)) {
        throw std::invalid_argument("ell must be an odd prime, got " + std::to_string(ell));
    }
}

} // namespace ccr

#endif
