#pragma once

// Exact combinatorics for the unit-mass +/-1-velocity toy problem: Young
// shapes carved out by a chord constraint, determinant path counting,
// strict-above walk counts, the assembled one-cluster probability, and the
// Catalan bridge identities. Counts use big integers throughout;
// probabilities are exact rationals.

#include "sticky/diagram.hpp"
#include "sticky/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sticky {

// Weakly decreasing non-negative rows; zero rows are allowed and stand for
// the forced vertical segment at the left edge.
struct YoungShape {
    std::vector<std::int64_t> rows;

    explicit YoungShape(std::vector<std::int64_t> r) : rows(std::move(r)) {
        if (rows.empty()) {
            throw ValidationError("Young shape needs at least one row");
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] < 0) {
                throw ValidationError("Young shape row " + std::to_string(i + 1) +
                                      " is negative");
            }
            if (i > 0 && rows[i] > rows[i - 1]) {
                throw ValidationError("Young shape rows must be weakly decreasing (row " +
                                      std::to_string(i + 1) + ")");
            }
        }
    }

    std::size_t k() const { return rows.size(); }

    friend bool operator==(const YoungShape&, const YoungShape&) = default;
};

// Walk of n +/-1 steps from 0 to c; c must have the parity of n.
struct WalkSpec {
    long long n;
    long long c;

    WalkSpec(long long n_, long long c_) : n(n_), c(c_) {
        if (n < 1) {
            throw ValidationError("walk needs at least one step");
        }
        if (c < -n || c > n || (n - c) % 2 != 0) {
            throw ValidationError("walk endpoint " + std::to_string(c) +
                                  " unreachable in " + std::to_string(n) + " steps");
        }
    }
};

namespace detail {

// Determinant by Bareiss fraction-free elimination with row pivoting. Every
// division is exact, so entries never leave the integers.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t k = m.size();
    if (k == 0) {
        return 1;
    }
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t l = 0; l + 1 < k; ++l) {
        if (m[l][l] == 0) {
            std::size_t r = l + 1;
            while (r < k && m[r][l] == 0) {
                ++r;
            }
            if (r == k) {
                return 0;
            }
            std::swap(m[l], m[r]);
            sign = -sign;
        }
        for (std::size_t i = l + 1; i < k; ++i) {
            for (std::size_t j = l + 1; j < k; ++j) {
                m[i][j] = (m[l][l] * m[i][j] - m[i][l] * m[l][j]) / prev;
            }
            m[i][l] = 0;
        }
        prev = m[l][l];
    }
    BigInt det = std::move(m[k - 1][k - 1]);
    return sign < 0 ? BigInt(-det) : det;
}

// Unit masses at positions 1..n with velocity +1 where the mask bit is set.
inline ParticleSystem unit_pm1_system(int n, std::uint64_t mask) {
    std::vector<Particle> particles;
    particles.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        particles.push_back(Particle{Rational(1), Rational(i + 1),
                                     Rational((mask >> i) & 1 ? 1 : -1)});
    }
    return ParticleSystem(std::move(particles));
}

} // namespace detail

// Maximal Young diagram fitting inside the (n-c)/2 by (n+c)/2 box strictly
// above the chord of the walk endpoint. Only interior endpoints have such a
// shape; |c| = n and |c| = n-2 are handled directly by the probability
// assembly.
inline YoungShape young_shape_for(long long n, long long c) {
    if (n < 2) {
        throw ValidationError("young_shape_for needs n >= 2");
    }
    if ((n - c) % 2 != 0 || c < -n || c > n) {
        throw ValidationError("endpoint " + std::to_string(c) + " unreachable in " +
                              std::to_string(n) + " steps");
    }
    if (c > n - 4 || c < -(n - 4)) {
        throw ValidationError("endpoint " + std::to_string(c) +
                              " has no interior Young shape for n = " + std::to_string(n));
    }
    const long long rows_count = (n + c) / 2 - 1;
    const Rational ratio = make_rational(BigInt(n - c), BigInt(n + c));
    std::vector<std::int64_t> rows;
    rows.reserve(static_cast<std::size_t>(rows_count));
    for (long long j = 1; j <= rows_count; ++j) {
        const Rational value = ratio * Rational((n + c) / 2 - j) - 1;
        rows.push_back(static_cast<std::int64_t>(ceil_rational(value)));
    }
    return YoungShape(std::move(rows));
}

// Number of North-East lattice paths from the southwest to the northeast
// corner of the shape, as the k x k binomial determinant.
inline BigInt count_paths(const YoungShape& shape) {
    const std::size_t k = shape.k();
    std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            m[i][j] = binom_plus(shape.rows[j] + 1,
                                 static_cast<long long>(j) - static_cast<long long>(i) + 1);
        }
    }
    return detail::bareiss_determinant(std::move(m));
}

// Independent oracle for count_paths: dynamic programming over the lattice
// points of the diagram. cap(y) is the row width between heights y and y+1
// (row k sits at the bottom), so a vertical move to height y needs
// x <= cap(y-1) and a horizontal move at height y needs x <= cap(y).
inline BigInt count_paths_bruteforce(const YoungShape& shape) {
    const std::size_t k = shape.k();
    if (k > 12 || shape.rows[0] > 12) {
        throw ValidationError("count_paths_bruteforce guard: needs k <= 12 and rows <= 12");
    }
    const std::int64_t width = shape.rows[0];
    auto cap = [&](std::size_t y) -> std::int64_t {
        return y < k ? shape.rows[k - 1 - y] : shape.rows[0];
    };

    std::vector<std::vector<BigInt>> reach(
        static_cast<std::size_t>(width) + 1, std::vector<BigInt>(k + 1, BigInt(0)));
    reach[0][0] = 1;
    for (std::size_t y = 0; y <= k; ++y) {
        for (std::int64_t x = 0; x <= width; ++x) {
            if (x == 0 && y == 0) {
                continue;
            }
            BigInt total = 0;
            if (x > 0 && x <= cap(y)) {
                total += reach[static_cast<std::size_t>(x - 1)][y];
            }
            if (y > 0 && x <= cap(y - 1)) {
                total += reach[static_cast<std::size_t>(x)][y - 1];
            }
            reach[static_cast<std::size_t>(x)][y] = std::move(total);
        }
    }
    return reach[static_cast<std::size_t>(width)][k];
}

// Walks S_0 = 0 .. S_n = c staying strictly above the chord c*j/n at every
// interior step. The chord comparison is the exact integer test h*n > c*j.
inline BigInt ssrw_strict_above_count(const WalkSpec& spec) {
    const long long n = spec.n;
    const long long c = spec.c;
    const std::size_t size = static_cast<std::size_t>(2 * n + 1);
    std::vector<BigInt> counts(size, BigInt(0));
    counts[static_cast<std::size_t>(n)] = 1; // height 0 at step 0

    for (long long j = 1; j <= n; ++j) {
        std::vector<BigInt> next(size, BigInt(0));
        for (long long h = -j + 1; h <= j - 1; ++h) {
            const BigInt& ways = counts[static_cast<std::size_t>(h + n)];
            if (ways == 0) {
                continue;
            }
            for (long long h2 : {h - 1, h + 1}) {
                if (j < n ? h2 * n > c * j : h2 == c) {
                    next[static_cast<std::size_t>(h2 + n)] += ways;
                }
            }
        }
        counts = std::move(next);
    }
    return counts[static_cast<std::size_t>(c + n)];
}

// Exact probability that n unit-mass particles with independent uniform
// +/-1 velocities coalesce into a single cluster. Endpoints c = +/-n admit
// no walk; c = +/-(n-2) admit exactly one; interior endpoints contribute a
// path-count determinant, with +/-c paired and c = 0 counted once.
inline Rational one_cluster_probability(long long n) {
    if (n < 2) {
        throw ValidationError("one_cluster_probability needs n >= 2");
    }
    BigInt total = 0;
    for (long long c = n % 2; c <= n; c += 2) {
        BigInt walks;
        if (c == n) {
            walks = 0;
        } else if (c == n - 2) {
            walks = 1;
        } else {
            walks = count_paths(young_shape_for(n, c));
        }
        total += c == 0 ? walks : 2 * walks;
    }
    const BigInt denom = BigInt(1) << static_cast<unsigned>(n);
    return make_rational(std::move(total), denom);
}

// Enumeration oracle: run the cluster prediction over all 2^n velocity
// assignments and count the single-cluster outcomes.
inline Rational one_cluster_probability_bruteforce(long long n) {
    if (n < 2 || n > 22) {
        throw ValidationError("one_cluster_probability_bruteforce guard: needs 2 <= n <= 22");
    }
    const std::uint64_t limit = std::uint64_t(1) << static_cast<unsigned>(n);
    std::uint64_t hits = 0;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        const ParticleSystem system = detail::unit_pm1_system(static_cast<int>(n), mask);
        if (predict_clusters(system).clusters.size() == 1) {
            ++hits;
        }
    }
    return make_rational(BigInt(hits), BigInt(limit));
}

// Exact distribution of the final cluster count over all 2^n velocity
// assignments.
inline std::map<std::size_t, Rational> cluster_count_distribution_exact(long long n) {
    if (n < 1 || n > 22) {
        throw ValidationError(
            "cluster_count_distribution_exact guard: needs 1 <= n <= 22");
    }
    const std::uint64_t limit = std::uint64_t(1) << static_cast<unsigned>(n);
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        const ParticleSystem system = detail::unit_pm1_system(static_cast<int>(n), mask);
        ++tally[predict_clusters(system).clusters.size()];
    }
    std::map<std::size_t, Rational> distribution;
    for (std::size_t k = 1; k < tally.size(); ++k) {
        if (tally[k] > 0) {
            distribution[k] = make_rational(BigInt(tally[k]), BigInt(limit));
        }
    }
    return distribution;
}

inline BigInt catalan(long long k) {
    if (k < 0) {
        throw ValidationError("catalan needs k >= 0");
    }
    return binom_plus(2 * k, k) / BigInt(k + 1); // divides exactly
}

// Probabilities for a 2n-step walk to be a strictly positive bridge:
// jointly with ending at zero, and conditioned on ending at zero.
struct BridgeProbability {
    Rational joint;       // C_{n-1} / 4^n
    Rational conditional; // C_{n-1} / binom(2n, n)
};

inline BridgeProbability positive_bridge_probability(long long n) {
    if (n < 1) {
        throw ValidationError("positive_bridge_probability needs n >= 1");
    }
    const BigInt c = catalan(n - 1);
    const BigInt four_pow = BigInt(1) << static_cast<unsigned>(2 * n);
    return BridgeProbability{make_rational(c, four_pow),
                             make_rational(c, binom_plus(2 * n, n))};
}

// Exact p_n alongside n * p_n for n = 2..n_max. Reported for inspection
// only; no limiting constant is asserted anywhere.
struct TrendRow {
    long long n;
    Rational p;
    Rational n_times_p;
};

inline std::vector<TrendRow> asymptotic_trend_report(long long n_max) {
    if (n_max < 2 || n_max > 30) {
        throw ValidationError("asymptotic_trend_report guard: needs 2 <= n_max <= 30");
    }
    std::vector<TrendRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max - 1));
    for (long long n = 2; n <= n_max; ++n) {
        Rational p = one_cluster_probability(n);
        Rational np = Rational(n) * p;
        rows.push_back(TrendRow{n, std::move(p), std::move(np)});
    }
    return rows;
}

} // namespace sticky
