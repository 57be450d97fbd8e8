#pragma once

// Shared test helpers: seeded random system generators (including the
// adversarial families), an independent brute-force envelope-contact
// oracle, and a small subprocess runner for CLI checks.

#include "sticky/diagram.hpp"
#include "sticky/montecarlo.hpp"
#include "sticky/numeric.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace support {

using sticky::BigInt;
using sticky::Particle;
using sticky::ParticleSystem;
using sticky::Point2;
using sticky::Rational;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : stream_(seed) {}

    std::uint64_t next() { return stream_.next(); }

    // uniform in [lo, hi], inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(unsigned percent) { return next() % 100 < percent; }

private:
    sticky::detail::SplitMix64 stream_;
};

// Rational in [lo, hi] with denominator at most den_max.
inline Rational random_rational(Rng& rng, long long lo, long long hi, long long den_max) {
    const long long den = rng.range(1, den_max);
    const long long num = rng.range(lo * den, hi * den);
    return sticky::make_rational(BigInt(num), BigInt(den));
}

// Masses in [1/4, 4], velocities in [-3, 3], strictly increasing positions.
inline ParticleSystem random_system(Rng& rng, std::size_t n) {
    std::vector<Particle> particles;
    particles.reserve(n);
    Rational position = random_rational(rng, -8, 8, 4);
    for (std::size_t i = 0; i < n; ++i) {
        const long long den = rng.range(1, 8);
        const long long num = rng.range((den + 3) / 4, 4 * den);
        Particle p;
        p.mass = sticky::make_rational(BigInt(num), BigInt(den));
        p.position = position;
        p.velocity = random_rational(rng, -3, 3, 8);
        particles.push_back(std::move(p));
        position += random_rational(rng, 1, 4, 4) / 2;
    }
    return ParticleSystem(std::move(particles));
}

// Velocities drawn from a two-element set, so runs of equal velocity and
// collinear diagram stretches are common.
inline ParticleSystem equal_velocity_system(Rng& rng, std::size_t n) {
    const Rational a = random_rational(rng, -2, 2, 3);
    const Rational b = rng.chance(50) ? a : random_rational(rng, -2, 2, 3);
    std::vector<Particle> particles;
    particles.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        particles.push_back(Particle{random_rational(rng, 1, 3, 2), Rational(i + 1),
                                     rng.chance(50) ? a : b});
    }
    return ParticleSystem(std::move(particles));
}

// Unit masses on the integer lattice with velocities in {-1, 0, +1}:
// plenty of slope ties and simultaneous collisions.
inline ParticleSystem lattice_system(Rng& rng, std::size_t n) {
    std::vector<Particle> particles;
    particles.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        particles.push_back(
            Particle{Rational(1), Rational(i + 1), Rational(rng.range(-1, 1))});
    }
    return ParticleSystem(std::move(particles));
}

// Mirror-symmetric masses and positions with antisymmetric velocities:
// collisions meet the center line simultaneously from both sides.
inline ParticleSystem mirrored_system(Rng& rng, std::size_t half) {
    std::vector<Particle> particles(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
        const Rational mass = random_rational(rng, 1, 4, 2);
        const Rational offset = Rational(half - i) + random_rational(rng, 0, 1, 3) / 2;
        const Rational speed = random_rational(rng, 1, 3, 2);
        particles[i] = Particle{mass, -offset, speed};
        particles[2 * half - 1 - i] = Particle{mass, offset, -speed};
    }
    return ParticleSystem(std::move(particles));
}

// P_k lies on the lower convex envelope iff no spanning chord passes
// strictly below it. O(n^2) per point; the independent oracle for the
// monotone-chain implementation.
inline bool is_contact_bruteforce(const std::vector<Point2>& pts, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = k + 1; j < pts.size(); ++j) {
            if (sticky::cross(pts[i], pts[j], pts[k]) > 0) {
                return false;
            }
        }
    }
    return true;
}

inline std::vector<std::size_t> contacts_bruteforce(const std::vector<Point2>& pts) {
    std::vector<std::size_t> contacts;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (is_contact_bruteforce(pts, k)) {
            contacts.push_back(k);
        }
    }
    return contacts;
}

struct CommandResult {
    int exit_code = -1;
    std::string output; // stdout and stderr combined
};

inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

} // namespace support
