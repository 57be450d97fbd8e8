#include "sticky/simulator.hpp"

#include "sticky/diagram.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <string>
#include <vector>

using namespace sticky;

namespace {

ParticleSystem unit_system(const std::vector<int>& velocities) {
    std::vector<Particle> particles;
    particles.reserve(velocities.size());
    for (std::size_t i = 0; i < velocities.size(); ++i) {
        particles.push_back(Particle{Rational(1), Rational(i + 1), Rational(velocities[i])});
    }
    return ParticleSystem(std::move(particles));
}

const std::vector<int> kReferenceVelocities{1, -1, -1, 1, -1, 1};

ParticleSystem pick_system(support::Rng& rng, int trial) {
    const std::size_t n = 1 + rng.next() % 16;
    switch (trial % 4) {
    case 0:
        return support::lattice_system(rng, n);
    case 1:
        return support::equal_velocity_system(rng, n);
    case 2:
        return support::mirrored_system(rng, 1 + n / 2);
    default:
        return support::random_system(rng, n);
    }
}

std::size_t count_substring(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

} // namespace

TEST_CASE("reference six-particle system: event log and final clusters") {
    const SimulationResult result = simulate(unit_system(kReferenceVelocities));

    REQUIRE(result.events.size() == 3);
    CHECK(result.events[0].time == make_rational(1, 2));
    CHECK(result.events[0].position == make_rational(3, 2));
    CHECK(result.events[0].merged ==
          std::vector<IndexRange>{IndexRange{1, 1}, IndexRange{2, 2}});
    CHECK(result.events[1].time == make_rational(1, 2));
    CHECK(result.events[1].position == make_rational(9, 2));
    CHECK(result.events[1].merged ==
          std::vector<IndexRange>{IndexRange{4, 4}, IndexRange{5, 5}});
    CHECK(result.events[2].time == make_rational(3, 2));
    CHECK(result.events[2].position == make_rational(3, 2));
    CHECK(result.events[2].merged ==
          std::vector<IndexRange>{IndexRange{1, 2}, IndexRange{3, 3}});

    REQUIRE(result.final_clusters.clusters.size() == 3);
    CHECK(result.final_clusters.clusters[0] ==
          Cluster{IndexRange{1, 3}, Rational(3), make_rational(-1, 3)});
    CHECK(result.final_clusters.clusters[1] ==
          Cluster{IndexRange{4, 5}, Rational(2), Rational(0)});
    CHECK(result.final_clusters.clusters[2] ==
          Cluster{IndexRange{6, 6}, Rational(1), Rational(1)});
}

TEST_CASE("single particle never collides") {
    const ParticleSystem system({Particle{Rational(2), Rational(1), Rational(-3)}});
    const SimulationResult result = simulate(system);
    CHECK(result.events.empty());
    REQUIRE(result.final_clusters.clusters.size() == 1);
    CHECK(result.final_clusters.clusters[0] ==
          Cluster{IndexRange{1, 1}, Rational(2), Rational(-3)});
}

TEST_CASE("head-on unit pair meets halfway") {
    // positions 0 and 1, velocities +1 and -1: 0 + t = 1 - t at t = 1/2
    const ParticleSystem system({Particle{Rational(1), Rational(0), Rational(1)},
                                 Particle{Rational(1), Rational(1), Rational(-1)}});
    const SimulationResult result = simulate(system);
    REQUIRE(result.events.size() == 1);
    CHECK(result.events[0].time == make_rational(1, 2));
    CHECK(result.events[0].position == make_rational(1, 2));
    REQUIRE(result.final_clusters.clusters.size() == 1);
    CHECK(result.final_clusters.clusters[0].velocity == 0);
}

TEST_CASE("simultaneous multi-way merge averages momentum in one step") {
    // three equal masses meeting at the origin at t = 1
    const ParticleSystem system({Particle{Rational(1), Rational(-2), Rational(2)},
                                 Particle{Rational(1), Rational(-1), Rational(1)},
                                 Particle{Rational(1), Rational(1), Rational(-1)}});
    const SimulationResult result = simulate(system);
    REQUIRE(result.events.size() == 1);
    CHECK(result.events[0].time == 1);
    CHECK(result.events[0].position == 0);
    CHECK(result.events[0].merged ==
          std::vector<IndexRange>{IndexRange{1, 1}, IndexRange{2, 2}, IndexRange{3, 3}});
    REQUIRE(result.final_clusters.clusters.size() == 1);
    CHECK(result.final_clusters.clusters[0].velocity == make_rational(2, 3));
}

TEST_CASE("positions along trajectories") {
    const ParticleSystem system = unit_system(kReferenceVelocities);
    const SimulationResult result = simulate(system);

    CHECK(position_at(result, system, 1, Rational(0)) == 1);
    CHECK(position_at(result, system, 2, make_rational(1, 2)) == make_rational(3, 2));
    CHECK(position_at(result, system, 2, Rational(1)) == make_rational(3, 2));
    CHECK(position_at(result, system, 1, Rational(2)) == make_rational(4, 3));
    CHECK(position_at(result, system, 3, Rational(1)) == 2);
    CHECK(position_at(result, system, 6, make_rational(1, 2)) == make_rational(13, 2));

    CHECK_THROWS_AS(position_at(result, system, 0, Rational(1)), ValidationError);
    CHECK_THROWS_AS(position_at(result, system, 7, Rational(1)), ValidationError);
    CHECK_THROWS_AS(position_at(result, system, 1, Rational(-1)), ValidationError);
}

TEST_CASE("trajectories are continuous at events") {
    support::Rng rng(2718);
    for (int trial = 0; trial < 60; ++trial) {
        const ParticleSystem system = pick_system(rng, trial);
        const SimulationResult result = simulate(system);
        for (const CollisionEvent& event : result.events) {
            for (std::size_t i = 1; i <= system.size(); ++i) {
                const Rational before = position_at(result, system, i,
                                                    event.time * make_rational(9999, 10000));
                const Rational at = position_at(result, system, i, event.time);
                const Rational gap = at - before;
                // velocity is bounded by 3 in all generators; continuity
                // means the position gap shrinks with the time gap
                CHECK(gap * gap <= event.time * event.time *
                                       make_rational(9, 100000000) * 16);
            }
        }
    }
}

TEST_CASE("simulation agrees with the envelope prediction") {
    support::Rng rng(1618);
    for (int trial = 0; trial < 400; ++trial) {
        const ParticleSystem system = pick_system(rng, trial);
        CHECK(simulate(system).final_clusters == predict_clusters(system));
    }
}

TEST_CASE("event log invariants") {
    support::Rng rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        const ParticleSystem system = pick_system(rng, trial);
        const SimulationResult result = simulate(system);

        CHECK(result.events.size() <= system.size() - result.final_clusters.clusters.size());

        for (std::size_t e = 0; e < result.events.size(); ++e) {
            const CollisionEvent& event = result.events[e];
            CHECK(event.time > 0);
            REQUIRE(event.merged.size() >= 2);
            for (std::size_t r = 0; r + 1 < event.merged.size(); ++r) {
                CHECK(event.merged[r].hi + 1 == event.merged[r + 1].lo);
            }
            if (e > 0) {
                const CollisionEvent& prev = result.events[e - 1];
                CHECK(prev.time <= event.time);
                if (prev.time == event.time) {
                    CHECK(prev.position < event.position);
                }
            }
        }
    }
}

TEST_CASE("mass and momentum are conserved through every event") {
    support::Rng rng(31415);
    for (int trial = 0; trial < 150; ++trial) {
        const ParticleSystem system = pick_system(rng, trial);
        const SimulationResult result = simulate(system);

        Rational mass(0);
        Rational momentum(0);
        for (const Particle& p : system.particles()) {
            mass += p.mass;
            momentum += p.mass * p.velocity;
        }
        Rational final_mass(0);
        Rational final_momentum(0);
        for (const Cluster& cluster : result.final_clusters.clusters) {
            final_mass += cluster.mass;
            final_momentum += cluster.mass * cluster.velocity;
        }
        CHECK(final_mass == mass);
        CHECK(final_momentum == momentum);
    }
}

TEST_CASE("order is preserved and separate clusters never touch") {
    support::Rng rng(8128);
    for (int trial = 0; trial < 60; ++trial) {
        const ParticleSystem system = pick_system(rng, trial);
        const SimulationResult result = simulate(system);

        std::vector<std::size_t> cluster_of(system.size() + 1);
        for (std::size_t c = 0; c < result.final_clusters.clusters.size(); ++c) {
            const IndexRange& members = result.final_clusters.clusters[c].members;
            for (std::size_t i = members.lo; i <= members.hi; ++i) {
                cluster_of[i] = c;
            }
        }

        std::vector<Rational> times{make_rational(1, 3), Rational(5)};
        for (const CollisionEvent& event : result.events) {
            times.push_back(event.time);
        }
        for (const Rational& t : times) {
            for (std::size_t i = 1; i < system.size(); ++i) {
                const Rational left = position_at(result, system, i, t);
                const Rational right = position_at(result, system, i + 1, t);
                if (cluster_of[i] == cluster_of[i + 1]) {
                    CHECK(left <= right);
                } else {
                    CHECK(left < right);
                }
            }
        }
    }
}

TEST_CASE("no event crosses a predicted polygon boundary") {
    support::Rng rng(9009);
    for (int trial = 0; trial < 200; ++trial) {
        const ParticleSystem system = pick_system(rng, trial);
        const ClusterSet predicted = predict_clusters(system);
        const SimulationResult result = simulate(system);
        for (const CollisionEvent& event : result.events) {
            const IndexRange span{event.merged.front().lo, event.merged.back().hi};
            bool inside_one = false;
            for (const Cluster& cluster : predicted.clusters) {
                if (cluster.members.lo <= span.lo && span.hi <= cluster.members.hi) {
                    inside_one = true;
                    break;
                }
            }
            CHECK(inside_one);
        }
    }
}

TEST_CASE("trajectory SVG structure and determinism") {
    const ParticleSystem system = unit_system(kReferenceVelocities);
    const SimulationResult result = simulate(system);
    const std::string svg = trajectories_svg(result, system, Rational(2));
    CHECK(count_substring(svg, "<polyline") == 6);
    CHECK(count_substring(svg, "<circle") == 3);
    CHECK(svg == trajectories_svg(result, system, Rational(2)));

    const ParticleSystem single({Particle{Rational(1), Rational(0), Rational(1)}});
    const SimulationResult single_result = simulate(single);
    const std::string single_svg = trajectories_svg(single_result, single, Rational(3));
    CHECK(count_substring(single_svg, "<polyline") == 1);
    CHECK(count_substring(single_svg, "<circle") == 0);

    CHECK_THROWS_AS(trajectories_svg(result, system, Rational(0)), ValidationError);
}
