#include "degpath/structure.hpp"

#include <algorithm>
#include <bit>

#include "degpath/path_finder.hpp"

namespace degpath {

int PairDecomposition::common_size() const { return std::popcount(common); }
int PairDecomposition::only_u_size() const { return std::popcount(only_u); }
int PairDecomposition::only_v_size() const { return std::popcount(only_v); }
int PairDecomposition::neither_size() const { return std::popcount(neither); }

PairDecomposition decompose(const Graph& g, int u, int v) {
    const int n = g.vertex_count();
    if (u == v) throw Error(ErrorCode::bad_args, "decompose needs two distinct vertices");
    const std::uint64_t all = (n == kMaxVertices) ? ~std::uint64_t{0}
                                                  : ((std::uint64_t{1} << n) - 1);
    const std::uint64_t pair_mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    const std::uint64_t nu_mask = g.neighbor_mask(u);
    const std::uint64_t nv_mask = g.neighbor_mask(v);

    PairDecomposition d;
    d.u = u;
    d.v = v;
    d.adjacent = (nu_mask >> v) & 1;
    d.common = nu_mask & nv_mask;
    d.only_u = nu_mask & ~nv_mask & ~pair_mask;
    d.only_v = nv_mask & ~nu_mask & ~pair_mask;
    d.neither = all & ~(nu_mask | nv_mask | pair_mask);

    // Partition check: the four parts plus {u, v} tile V without overlap.
    const std::uint64_t parts[] = {pair_mask, d.common, d.only_u, d.only_v, d.neither};
    std::uint64_t seen = 0;
    int total = 0;
    for (std::uint64_t part : parts) {
        if (seen & part) throw std::logic_error("pair decomposition parts overlap");
        seen |= part;
        total += std::popcount(part);
    }
    if (seen != all || total != n) throw std::logic_error("pair decomposition does not tile V");

    const int identity = g.degree(u) + g.degree(v) + d.neither_size() - n +
                         2 * (1 - (d.adjacent ? 1 : 0));
    if (d.common_size() != identity) throw std::logic_error("pair decomposition size identity failed");
    return d;
}

AuditReport audit_common_neighbor_bound(const Graph& g) {
    AuditReport report;
    report.applicable = avoids(g, 5);
    if (!report.applicable) return report;

    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.degree(u) != g.degree(v)) continue;
            const int indicator = g.has_edge(u, v) ? 1 : 0;
            const int bound = n - g.degree(u) + 2 + indicator;
            std::uint64_t common = g.neighbor_mask(u) & g.neighbor_mask(v);
            while (common) {
                int w = std::countr_zero(common);
                common &= common - 1;
                if (g.degree(w) > bound) report.violations.push_back({u, v, w});
            }
        }
    }
    return report;
}

namespace {

long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

long long sum_range(long long lo, long long hi) {  // lo..hi inclusive, 0 if empty
    if (lo > hi) return 0;
    return (lo + hi) * (hi - lo + 1) / 2;
}

void check_params(const LambdaParams& p) {
    if (p.nu < 1 || p.delta < 1 || p.beta < 1 || p.b < 1)
        throw Error(ErrorCode::bad_params, "lambda parameters must be positive");
    if (p.delta < p.b) throw Error(ErrorCode::bad_params, "lambda needs delta >= b");
    if (p.nu < p.delta + 1) throw Error(ErrorCode::bad_params, "lambda needs nu >= delta + 1");
}

// Values never exceed delta-1, so every beta >= delta-1 leaves the repetition
// constraint vacuous and the maximum unchanged; the closed form is stated for
// beta <= delta-1 and extends to the rest through this clamp.
int effective_beta(const LambdaParams& p) { return std::min(p.beta, p.delta - 1); }

}  // namespace

long long lambda_closed(const LambdaParams& p) {
    check_params(p);
    const long long delta = p.delta;
    const long long b = p.b;
    const long long beta = effective_beta(p);
    const long long slack = p.nu - 1 - delta;  // number of unconstrained slots

    const long long unified = sum_range(b, delta - 1) + slack * beta + choose2(b - beta) -
                              choose2((b - beta) - slack);

    long long by_case;
    if (b - beta <= 0) {
        by_case = sum_range(b, delta - 1) + slack * beta;
    } else if (b - beta >= slack + 1) {
        by_case = sum_range(delta + b - (p.nu - 1), delta - 1);
    } else {
        by_case = sum_range(beta + 1, delta - 1) + (slack - (b - beta) + 1) * beta;
    }
    if (by_case != unified) throw std::logic_error("lambda case split disagrees with closed form");
    return unified;
}

namespace {

// Enumerates every multiset of `slots` values from {0..max_value}; order never
// matters for the sum or the constraint, so this covers all sequences.
long long best_filler_sum(int slots, int max_value, int beta, std::uint64_t taken) {
    if (slots == 0) return 0;
    long long best = -1;
    for (int value = max_value; value >= 0; --value) {
        std::uint64_t next_taken = taken;
        if (value > beta) {
            if ((taken >> value) & 1) continue;
            next_taken |= std::uint64_t{1} << value;
        }
        long long rest = best_filler_sum(slots - 1, value, beta, next_taken);
        if (rest >= 0) best = std::max(best, value + rest);
    }
    return best;
}

}  // namespace

long long lambda_oracle(const LambdaParams& p) {
    check_params(p);
    if (p.nu > 12) throw Error(ErrorCode::size, "lambda oracle budgeted to nu <= 12");

    const int distinct_slots = p.delta - p.b;
    const int filler_slots = p.nu - p.delta - 1;

    long long best = -1;
    const int pool = p.delta - 1;  // distinct values drawn from {1..delta-1}
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pool); ++pick) {
        if (std::popcount(pick) != distinct_slots) continue;
        long long sum = 0;
        std::uint64_t taken = 0;
        bool ok = true;
        for (int value = 1; value <= pool; ++value) {
            if (!((pick >> (value - 1)) & 1)) continue;
            sum += value;
            if (value > p.beta) {
                if ((taken >> value) & 1) ok = false;
                taken |= std::uint64_t{1} << value;
            }
        }
        if (!ok) continue;
        long long filler = best_filler_sum(filler_slots, p.delta - 1, p.beta, taken);
        if (filler >= 0) best = std::max(best, sum + filler);
    }
    if (best < 0) throw std::logic_error("lambda oracle found no admissible sequence");
    return best;
}

}  // namespace degpath
