#include "hetmarket/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hetmarket/numeric.hpp"
#include "hetmarket/rng.hpp"

namespace hetmarket {

namespace {

void require_pair(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("list lengths differ");
    if (xs.size() < 2)
        throw std::invalid_argument("need at least two elements");
}

bool has_ties(std::span<const double> v) {
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

// merge sort counting inversions; work/buf are scratch of the same length
std::size_t count_inversions(std::vector<double>& work, std::vector<double>& buf,
                             std::size_t lo, std::size_t hi) {
    if (hi - lo <= 1) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::size_t inv = count_inversions(work, buf, lo, mid) +
                      count_inversions(work, buf, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (work[i] <= work[j]) {
            buf[k++] = work[i++];
        } else {
            inv += mid - i;
            buf[k++] = work[j++];
        }
    }
    while (i < mid) buf[k++] = work[i++];
    while (j < hi) buf[k++] = work[j++];
    std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
              buf.begin() + static_cast<std::ptrdiff_t>(hi),
              work.begin() + static_cast<std::ptrdiff_t>(lo));
    return inv;
}

} // namespace

double kendall_tau(std::span<const double> xs, std::span<const double> ys) {
    require_pair(xs, ys);
    if (has_ties(xs) || has_ties(ys))
        throw std::invalid_argument("kendall_tau: tie detected");
    const std::size_t n = xs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> w(n), buf(n);
    for (std::size_t r = 0; r < n; ++r) w[r] = ys[order[r]];
    const std::size_t inv = count_inversions(w, buf, 0, n);
    // concordant - discordant = pairs - 2*inv; single division keeps small
    // cases exact (e.g. -1/3 on length-3 lists)
    const long long pairs = static_cast<long long>(n) * static_cast<long long>(n - 1) / 2;
    const long long num = pairs - 2 * static_cast<long long>(inv);
    return static_cast<double>(num) / static_cast<double>(pairs);
}

double pearson_r2(std::span<const double> xs, std::span<const double> ys) {
    require_pair(xs, ys);
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::invalid_argument("pearson_r2: zero variance");
    return (sxy * sxy) / (sxx * syy);
}

std::pair<double, double> tau_triangle_bounds(double t12, double t13) {
    return {std::abs(t12 + t13) - 1.0, 1.0 - std::abs(t12 - t13)};
}

int max_equicorrelated(double tau0, int N, BoundForm form) {
    if (!(tau0 >= -1.0 && tau0 <= 1.0))
        throw std::invalid_argument("max_equicorrelated: tau0 must satisfy -1 <= tau0 <= 1");
    if (N < 2)
        throw std::invalid_argument("max_equicorrelated: N must be at least 2");
    if (tau0 == 1.0) return unbounded_lists;
    const double w = (1.0 - tau0) * static_cast<double>(N) * static_cast<double>(N - 1) / 4.0;
    double bound = (form == BoundForm::doubled_log)
                       ? 2.0 + 2.0 * std::log2(w)
                       : 2.0 + std::log2(w);
    if (tau0 < 0.0)
        bound = std::min(bound, 2.0 * std::log2((1.0 - tau0) / (-tau0)));
    const int m = static_cast<int>(std::floor(bound + 1e-9));
    return m < 1 ? 1 : m;
}

ListEnsemble generate_scheme_A(int M, int N, double t, double s, std::uint64_t seed) {
    ListEnsemble e{Scheme::A, t, s, M, N, {}, {}};
    Rng rng(seed);
    std::vector<double> c(static_cast<std::size_t>(N));
    for (double& v : c) v = rng.u01();
    e.y.resize(static_cast<std::size_t>(N));
    for (int a = 0; a < N; ++a) {
        const double b = rng.u01();
        const double cc = s > 0 ? c[static_cast<std::size_t>(a)] : 1.0 - c[static_cast<std::size_t>(a)];
        e.y[static_cast<std::size_t>(a)] = (1.0 - t) * b + t * cc;
    }
    e.lists.assign(static_cast<std::size_t>(M), std::vector<double>(static_cast<std::size_t>(N)));
    for (auto& list : e.lists)
        for (int a = 0; a < N; ++a)
            list[static_cast<std::size_t>(a)] = (1.0 - t) * rng.u01() + t * c[static_cast<std::size_t>(a)];
    return e;
}

ListEnsemble generate_scheme_B(int M, int N, double t, double s, std::uint64_t seed) {
    if (N < 2) throw std::invalid_argument("generate_scheme_B: N must be at least 2");
    ListEnsemble e{Scheme::B, t, s, M, N, {}, {}};
    Rng rng(seed);
    e.y.resize(static_cast<std::size_t>(N));
    for (int a = 0; a < N; ++a)
        e.y[static_cast<std::size_t>(a)] = static_cast<double>(a) / static_cast<double>(N - 1);
    e.lists.assign(static_cast<std::size_t>(M), std::vector<double>(static_cast<std::size_t>(N)));
    for (auto& list : e.lists)
        for (int a = 0; a < N; ++a)
            list[static_cast<std::size_t>(a)] =
                0.5 + s * t * (e.y[static_cast<std::size_t>(a)] - 0.5) + (1.0 - t) * (rng.u01() - 0.5);
    return e;
}

ListEnsemble generate_scheme_C(int M, int N, double t, double s, std::uint64_t seed) {
    ListEnsemble e{Scheme::C, t, s, M, N, {}, {}};
    Rng rng(seed);
    const double wc = std::sqrt(t);
    const double wn = std::sqrt(1.0 - t);
    std::vector<double> c(static_cast<std::size_t>(N));
    for (double& v : c) v = rng.normal();
    e.y.resize(static_cast<std::size_t>(N));
    for (int a = 0; a < N; ++a)
        e.y[static_cast<std::size_t>(a)] = normal_cdf(wn * rng.normal() + s * wc * c[static_cast<std::size_t>(a)]);
    e.lists.assign(static_cast<std::size_t>(M), std::vector<double>(static_cast<std::size_t>(N)));
    for (auto& list : e.lists)
        for (int a = 0; a < N; ++a)
            list[static_cast<std::size_t>(a)] = normal_cdf(wn * rng.normal() + wc * c[static_cast<std::size_t>(a)]);
    return e;
}

ListEnsemble generate_scheme(Scheme scheme, int M, int N, double t, double s, std::uint64_t seed) {
    if (M < 1 || N < 1) throw std::invalid_argument("generate_scheme: M and N must be positive");
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("generate_scheme: t must be in [0,1]");
    if (s != 1.0 && s != -1.0) throw std::invalid_argument("generate_scheme: s must be +1 or -1");
    switch (scheme) {
        case Scheme::A: return generate_scheme_A(M, N, t, s, seed);
        case Scheme::B: return generate_scheme_B(M, N, t, s, seed);
        case Scheme::C: return generate_scheme_C(M, N, t, s, seed);
    }
    throw std::invalid_argument("generate_scheme: unknown scheme");
}

namespace {

double tau_xx_uniform(double t) {
    if (t >= 1.0) return 1.0;
    const double u = t / (1.0 - t);
    if (u <= 1.0) return (u * u / 15.0) * (10.0 - 6.0 * u + u * u);
    return (1.0 / 15.0) * (15.0 - 14.0 / u + 4.0 / (u * u));
}

double tau_xy_grid(double t, double s) {
    if (t >= 1.0) return s;
    const double u = t / (1.0 - t);
    if (u <= 1.0) return (s / 6.0) * (4.0 * u - u * u);
    return (s / 6.0) * (6.0 - 4.0 / u + 1.0 / (u * u));
}

} // namespace

double expected_tau(Scheme scheme, double t, double s, TauWhich which) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("expected_tau: t must be in [0,1]");
    if (s != 1.0 && s != -1.0) throw std::invalid_argument("expected_tau: s must be +1 or -1");
    switch (scheme) {
        case Scheme::A:
            return which == TauWhich::xx ? tau_xx_uniform(t) : s * tau_xx_uniform(t);
        case Scheme::B:
            return which == TauWhich::xx ? tau_xx_uniform(t) : tau_xy_grid(t, s);
        case Scheme::C: {
            const double tau = 2.0 / pi_v * std::asin(t);
            return which == TauWhich::xx ? tau : s * tau;
        }
    }
    throw std::invalid_argument("expected_tau: unknown scheme");
}

double tau_variance_estimate(std::span<const double> xs, std::span<const double> ys,
                             std::uint64_t seed, std::size_t max_triples) {
    require_pair(xs, ys);
    const std::size_t n = xs.size();
    if (n < 3) throw std::invalid_argument("tau_variance_estimate: need at least three elements");
    const double tau = kendall_tau(xs, ys);

    auto sign_product = [&](std::size_t a, std::size_t b) {
        const double vx = xs[a] - xs[b];
        const double vy = ys[a] - ys[b];
        return (vx > 0.0) == (vy > 0.0) ? 1.0 : -1.0;
    };

    double sum = 0.0;
    std::size_t used = 0;
    const double total = static_cast<double>(n) * static_cast<double>(n - 1) * static_cast<double>(n - 2);
    if (total <= static_cast<double>(max_triples)) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t g = 0; g < n; ++g) {
                if (g == a) continue;
                for (std::size_t b = 0; b < n; ++b) {
                    if (b == a || b == g) continue;
                    sum += sign_product(a, g) * sign_product(g, b);
                    ++used;
                }
            }
    } else {
        Rng rng(seed);
        while (used < max_triples) {
            const std::size_t a = static_cast<std::size_t>(rng.next() % n);
            const std::size_t g = static_cast<std::size_t>(rng.next() % n);
            const std::size_t b = static_cast<std::size_t>(rng.next() % n);
            if (a == g || g == b || a == b) continue;
            sum += sign_product(a, g) * sign_product(g, b);
            ++used;
        }
    }
    const double m2 = sum / static_cast<double>(used);
    return 4.0 / static_cast<double>(n) * (m2 - tau * tau);
}

TauEstimate sample_tau(Scheme scheme, double t, double s, TauWhich which,
                       int n_pairs, int N, std::uint64_t seed) {
    if (n_pairs < 1) throw std::invalid_argument("sample_tau: n_pairs must be positive");
    std::vector<double> taus(static_cast<std::size_t>(n_pairs));
    const int lists_needed = which == TauWhich::xx ? 2 : 1;
    for (int i = 0; i < n_pairs; ++i) {
        const ListEnsemble e =
            generate_scheme(scheme, lists_needed, N, t, s, derive_seed(seed, static_cast<std::uint64_t>(i)));
        taus[static_cast<std::size_t>(i)] =
            which == TauWhich::xx ? kendall_tau(e.lists[0], e.lists[1]) : kendall_tau(e.lists[0], e.y);
    }
    const MeanSE ms = mean_se(taus);
    return {ms.mean, ms.sd * ms.sd, n_pairs};
}

} // namespace hetmarket
