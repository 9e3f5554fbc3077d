#include "gfib/combinatorics.hpp"

#include <stdexcept>
#include <string>

#include "gfib/errors.hpp"

namespace gfib {

namespace {

void dfs(int d, long long remaining, std::vector<int>& prefix,
         std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = 1; part <= d && part <= remaining; ++part) {
        prefix.push_back(part);
        dfs(d, remaining - part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

CompositionSet enumerate_compositions(Order d, long long n, long long cap) {
    if (n > cap) {
        throw EnumerationCapError("enumerate_compositions: n = " + std::to_string(n) +
                                  " exceeds enumeration cap " + std::to_string(cap));
    }
    CompositionSet set{d, n, {}};
    if (n < 0) return set;
    std::vector<int> prefix;
    dfs(d.value(), n, prefix, set.compositions);
    return set;
}

mpz_class count_compositions(Order d, long long n) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    // c[k] = number of compositions of k; sliding window over the last d counts.
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    const long long dd = d.value();
    for (long long k = 1; k <= n; ++k) {
        mpz_class acc = 0;
        for (long long part = 1; part <= dd && part <= k; ++part)
            acc += c[static_cast<std::size_t>(k - part)];
        c[static_cast<std::size_t>(k)] = acc;
    }
    return c[static_cast<std::size_t>(n)];
}

Interval composition_log_probability(Order d, const std::vector<int>& composition,
                                     const RootEnclosure& enclosure) {
    long long total = 0;
    for (int part : composition) {
        if (part < 1 || part > d.value()) {
            throw std::invalid_argument("composition part " + std::to_string(part) +
                                        " outside 1.." + std::to_string(d.value()));
        }
        total += part;
    }
    if (total == 0) return Interval::exact_long(0, enclosure.precision_bits);
    Interval q = enclosure.to_interval();
    return q.log() * Interval::exact_long(total, enclosure.precision_bits);
}

}  // namespace gfib
