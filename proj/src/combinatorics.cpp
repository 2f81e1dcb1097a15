#include "gossip/combinatorics.hpp"

#include <limits>

namespace gossip {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n < 0) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned __int128>(n - k + i);
        r /= static_cast<unsigned __int128>(i); // exact: product of i consecutive ints divisible by i!
        if (r > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
            throw ResourceError("binomial overflow: C(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    return static_cast<long long>(r);
}

long long exact_div(long long a, long long b, const char* what) {
    if (b == 0 || a % b != 0)
        throw ConsistencyError(std::string(what) + ": " + std::to_string(a) + " is not divisible by " +
                               std::to_string(b));
    return a / b;
}

bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - (k - 1 - i)) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i + 1;
    if (k == 0) {
        visit(comb);
        return;
    }
    do {
        visit(comb);
    } while (next_combination(comb, n));
}

int floor_sqrt_ratio(long long num, long long den) {
    if (den <= 0) throw ParameterError("floor_sqrt_ratio: denominator must be positive");
    if (num < 0) throw ParameterError("floor_sqrt_ratio: negative numerator");
    int w = 0;
    while (static_cast<long long>(w + 1) * (w + 1) * den <= num) ++w;
    return w;
}

} // namespace gossip
