#include "schur/bounds.hpp"

#include <stdexcept>

#include "schur/constructions.hpp"
#include "schur/homology.hpp"

namespace schur {

long batten_bound(int n) {
    if (n < 0) throw std::invalid_argument("batten_bound: n must be >= 0");
    return long(n) * (n - 1) / 2;
}

long yankosky_bound(int n, int m) {
    if (n < 1) throw std::invalid_argument("yankosky_bound: n must be >= 1");
    if (m < 1 || m > n) throw std::invalid_argument("yankosky_bound: need 1 <= m <= n");
    long ln = n, lm = m;
    return (lm - lm * lm + 2 * lm * ln - 2 * ln) / 2;
}

long nice_bound(int n, int m) {
    if (n < 1) throw std::invalid_argument("nice_bound: n must be >= 1");
    if (m < 1 || m > n - 1) throw std::invalid_argument("nice_bound: need 1 <= m <= n-1");
    long ln = n, lm = m;
    return (ln + lm - 2) * (ln - lm - 1) / 2 + 1;
}

long salemkar_bound(int n, int m, int d) {
    if (n < 1) throw std::invalid_argument("salemkar_bound: n must be >= 1");
    if (m < 0 || m > n - 1) throw std::invalid_argument("salemkar_bound: need 0 <= m <= n-1");
    if (d < 1 || d > n) throw std::invalid_argument("salemkar_bound: need 1 <= d <= n");
    if (m > 0 && n - d - 1 < 0)
        throw std::invalid_argument("salemkar_bound: need d <= n-1 when m >= 1");
    long ln = n, lm = m, ld = d;
    return (ln - lm) * (ln - lm - 1) / 2 + lm * (ln - ld - 1);
}

long bosko_bound(int gens, int c) {
    if (c < 0) throw std::invalid_argument("bosko_bound: class must be >= 0");
    if (c == 0) return 0;
    long total = 0;
    for (int j = 1; j <= c; ++j) total += witt_dim(gens, j + 1);
    return total;
}

bool theorem1_region(int n, int m, int d) {
    return n >= 3 && d >= 1 && m <= (n - 2) / (d + 1);
}

BoundReport bound_report(const LieAlgebra& L) {
    BoundReport report;
    report.profile = structural_profile(L);
    report.multiplier = multiplier_dim(L);
    const auto& p = report.profile;

    auto push = [&](const std::string& name, std::optional<long> value, bool asserted) {
        BoundEntry e;
        e.name = name;
        e.value = value;
        e.asserted = asserted;
        e.holds = value.has_value() && report.multiplier <= *value;
        report.entries.push_back(e);
    };

    bool nonabelian = p.m >= 1;
    push("batten", batten_bound(p.n), true);
    push("yankosky", nonabelian ? std::optional<long>(yankosky_bound(p.n, p.m)) : std::nullopt,
         false);
    push("nice", nonabelian ? std::optional<long>(nice_bound(p.n, p.m)) : std::nullopt,
         nonabelian);
    push("salemkar",
         nonabelian ? std::optional<long>(salemkar_bound(p.n, p.m, p.d)) : std::nullopt,
         nonabelian);
    push("bosko", bosko_bound(p.gens, p.cls), true);
    return report;
}

}  // namespace schur
