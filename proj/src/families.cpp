#include <symlab/families.hpp>

#include <stdexcept>
#include <string>

namespace symlab::families {

namespace {

void require_friendship(long long n)
{
    if (n < 2)
        throw std::invalid_argument("friendship graph F_n needs n >= 2, got " + std::to_string(n));
}

} // namespace

long long friendship_D(long long n)
{
    require_friendship(n);
    long long j = 1;
    while (j * (j - 1) / 2 < n)
        ++j;
    return j;
}

long long k_of(long long j)
{
    if (j < 3)
        throw std::invalid_argument("k_j is defined for j >= 3");
    return (j * j - 3 * j + 2) / 2 + 1;
}

std::optional<long long> friendship_rho(long long n)
{
    const auto j = friendship_D(n);
    const auto i = n - k_of(j);
    if (i < 0 || i > j - 2)
        return std::nullopt;
    return i + 1;
}

long long friendship_det(long long n)
{
    require_friendship(n);
    return n;
}

long long gap(long long n)
{
    auto rho = friendship_rho(n);
    if (!rho)
        throw std::logic_error("friendship_rho out of range for n = " + std::to_string(n));
    const auto d = friendship_det(n) - *rho;
    return d < 0 ? -d : d;
}

FriendshipFacts friendship_facts(long long n)
{
    const auto j = friendship_D(n);
    const auto k = k_of(j);
    return {n, j, j, k, n - k, friendship_rho(n), friendship_det(n)};
}

long long corona_det(long long det_g, long long n, long long det_h)
{
    return det_g + n * det_h;
}

long long corona_det_k1(long long det_g)
{
    return det_g;
}

long long corona_rho_bound(long long rho_g, long long n, long long rho_h)
{
    return rho_g + n * rho_h;
}

} // namespace symlab::families
