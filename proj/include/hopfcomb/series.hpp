#pragma once

#include <vector>

#include "partitions.hpp"
#include "scalar.hpp"

namespace hopfcomb {

/// Dimensions of the graded components of a free Lie algebra on g[d]
/// generators in degree d+1 (g is indexed from degree 1), computed through
/// degree maxn via log(1/(1-G(t))) and the divisor recursion
/// m*c_m = sum_{d|m} d*l_d.  All intermediate divisions must be exact.
inline std::vector<mpz_class> lie_dims_from_generators(const std::vector<mpz_class>& g, int maxn) {
    // c(t) = log(1/(1-G)) = sum_{k>=1} G^k / k, truncated beyond t^maxn
    std::vector<mpq_class> c(static_cast<std::size_t>(maxn) + 1, 0);
    std::vector<mpq_class> Gk(static_cast<std::size_t>(maxn) + 1, 0);  // current power G^k
    Gk[0] = 1;
    for (int k = 1; k <= maxn; ++k) {
        // Gk <- Gk * G
        std::vector<mpq_class> next(static_cast<std::size_t>(maxn) + 1, 0);
        for (int i = 0; i <= maxn; ++i) {
            if (Gk[static_cast<std::size_t>(i)] == 0) continue;
            for (int d = 1; d <= maxn - i && d <= static_cast<int>(g.size()); ++d) {
                next[static_cast<std::size_t>(i + d)] +=
                    Gk[static_cast<std::size_t>(i)] * mpq_class(g[static_cast<std::size_t>(d - 1)]);
            }
        }
        Gk = std::move(next);
        for (int m = 0; m <= maxn; ++m) c[static_cast<std::size_t>(m)] += Gk[static_cast<std::size_t>(m)] / k;
    }

    std::vector<mpz_class> l(static_cast<std::size_t>(maxn) + 1, 0);
    for (int m = 1; m <= maxn; ++m) {
        mpq_class rhs = mpq_class(m) * c[static_cast<std::size_t>(m)];
        for (int d : divisors(m))
            if (d < m) rhs -= mpq_class(d) * mpq_class(l[static_cast<std::size_t>(d)]);
        mpq_class lm = rhs / m;
        lm.canonicalize();
        if (lm.get_den() != 1) throw StructureError("lie_dims_from_generators: non-integral dimension");
        l[static_cast<std::size_t>(m)] = lm.get_num();
    }
    return std::vector<mpz_class>(l.begin() + 1, l.end());
}

}  // namespace hopfcomb
