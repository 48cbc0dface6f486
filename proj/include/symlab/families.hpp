#pragma once

#include <optional>

namespace symlab::families {

// Closed forms for the friendship graph F_n and for corona products, in
// exact integer arithmetic.

/// D(F_n) = ceil((1 + sqrt(8n + 1)) / 2), computed as the least j with
/// j(j - 1)/2 >= n.
long long friendship_D(long long n);

/// k_j = floor((j^2 - 3j + 2)/2) + 1, the least n with D(F_n) = j (j >= 3).
long long k_of(long long j);

/// rho_j(F_{k_j + i}) = i + 1 for 0 <= i <= j - 2; empty if n would fall
/// outside that window.
std::optional<long long> friendship_rho(long long n);

/// Det(F_n) = n.
long long friendship_det(long long n);

/// |Det(F_n) - rho(F_n)| = k_j - 1 = (j - 1)(j - 2)/2.
long long gap(long long n);

struct FriendshipFacts {
    long long n;
    long long D;
    long long j;
    long long k_j;
    long long i;
    std::optional<long long> rho;
    long long det;
};

FriendshipFacts friendship_facts(long long n);

/// Det(G o H) = Det(G) + n Det(H) for connected G, H of orders >= 2.
long long corona_det(long long det_g, long long n, long long det_h);
/// Det(G o K_1) = Det(G) for connected G of order >= 2.
long long corona_det_k1(long long det_g);
/// Upper bound rho(G) + n rho(H) on rho_{k''}(G o H), valid when
/// D(G o H) = max(D(G), D(H)).
long long corona_rho_bound(long long rho_g, long long n, long long rho_h);

} // namespace symlab::families
