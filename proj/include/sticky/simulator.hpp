#pragma once

// Event-driven sticky-particle simulation with exact rational event times.
// Serves as the physical oracle for the envelope prediction and produces
// the data behind trajectory plots.

#include "sticky/detail/svg.hpp"
#include "sticky/diagram.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sticky {

// One merged group: lives at `position` since time `since`, moving with the
// mass-weighted velocity of its members.
struct SimClusterState {
    IndexRange members;
    Rational mass;
    Rational position;
    Rational velocity;
    Rational since;
};

// A maximal group of adjacent clusters arriving at one point at one time.
// `merged` lists the member ranges that fused, left to right.
struct CollisionEvent {
    Rational time;
    Rational position;
    std::vector<IndexRange> merged;
};

struct SimulationResult {
    std::vector<CollisionEvent> events;
    ClusterSet final_clusters;
};

// Repeatedly advance to the earliest future meeting of adjacent clusters
// and merge every co-located run in a single sweep, so simultaneous
// multi-way collisions average momentum in one step. Adjacent clusters meet
// iff the left one is strictly faster; the schedule is recomputed per sweep
// (n stays desk-scale, at most n-1 merges happen in total).
inline SimulationResult simulate(const ParticleSystem& system) {
    std::vector<SimClusterState> clusters;
    clusters.reserve(system.size());
    for (std::size_t i = 0; i < system.size(); ++i) {
        const Particle& a = system[i];
        clusters.push_back(SimClusterState{IndexRange{i + 1, i + 1}, a.mass, a.position,
                                           a.velocity, Rational(0)});
    }

    SimulationResult result;
    Rational now(0);

    while (clusters.size() > 1) {
        std::optional<Rational> next_time;
        for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
            const SimClusterState& left = clusters[i];
            const SimClusterState& right = clusters[i + 1];
            if (left.velocity > right.velocity) {
                Rational t = now + (right.position - left.position) /
                                       (left.velocity - right.velocity);
                if (!next_time || t < *next_time) {
                    next_time = std::move(t);
                }
            }
        }
        if (!next_time) {
            break;
        }

        for (SimClusterState& c : clusters) {
            c.position += c.velocity * (*next_time - now);
        }
        now = *next_time;

        std::vector<SimClusterState> merged;
        merged.reserve(clusters.size());
        std::size_t i = 0;
        while (i < clusters.size()) {
            std::size_t j = i + 1;
            while (j < clusters.size() && clusters[j].position == clusters[i].position) {
                ++j;
            }
            if (j == i + 1) {
                merged.push_back(std::move(clusters[i]));
            } else {
                CollisionEvent event;
                event.time = now;
                event.position = clusters[i].position;
                Rational mass(0);
                Rational momentum(0);
                for (std::size_t k = i; k < j; ++k) {
                    event.merged.push_back(clusters[k].members);
                    mass += clusters[k].mass;
                    momentum += clusters[k].mass * clusters[k].velocity;
                }
                merged.push_back(SimClusterState{
                    IndexRange{clusters[i].members.lo, clusters[j - 1].members.hi}, mass,
                    event.position, momentum / mass, now});
                result.events.push_back(std::move(event));
            }
            i = j;
        }
        clusters = std::move(merged);
    }

    result.final_clusters.clusters.reserve(clusters.size());
    for (const SimClusterState& c : clusters) {
        result.final_clusters.clusters.push_back(Cluster{c.members, c.mass, c.velocity});
    }
    return result;
}

namespace detail {

// Mass-weighted initial velocity over a contiguous particle range; this is
// the post-merge velocity regardless of the merge order.
inline Rational range_velocity(const ParticleSystem& system, const IndexRange& range) {
    Rational mass(0);
    Rational momentum(0);
    for (std::size_t k = range.lo; k <= range.hi; ++k) {
        mass += system[k - 1].mass;
        momentum += system[k - 1].mass * system[k - 1].velocity;
    }
    return momentum / mass;
}

inline IndexRange event_span(const CollisionEvent& event) {
    return IndexRange{event.merged.front().lo, event.merged.back().hi};
}

} // namespace detail

// Trajectory of particle i (1-based) at time t, replayed from the event log.
// Piecewise linear and continuous in t.
inline Rational position_at(const SimulationResult& result, const ParticleSystem& system,
                            std::size_t i, const Rational& t) {
    if (i < 1 || i > system.size()) {
        throw ValidationError("position_at: particle index " + std::to_string(i) +
                              " out of range");
    }
    if (t < 0) {
        throw ValidationError("position_at: time must be non-negative");
    }

    Rational position = system[i - 1].position;
    Rational velocity = system[i - 1].velocity;
    Rational since(0);
    for (const CollisionEvent& event : result.events) {
        if (event.time > t) {
            break;
        }
        if (detail::event_span(event).contains(i)) {
            position = event.position;
            velocity = detail::range_velocity(system, detail::event_span(event));
            since = event.time;
        }
    }
    return position + velocity * (t - since);
}

struct TrajectorySvgOptions {
    int width = 640;
    int height = 480;
    int margin = 48;
};

// One polyline per particle on [0, t_max] (position horizontal, time
// vertical), with a marker at every collision that happens by t_max.
inline std::string trajectories_svg(const SimulationResult& result,
                                    const ParticleSystem& system, const Rational& t_max,
                                    const TrajectorySvgOptions& options = {}) {
    if (t_max <= 0) {
        throw ValidationError("trajectories_svg: t_max must be positive");
    }

    const std::size_t n = system.size();
    std::vector<std::vector<Point2>> paths(n); // (x, t) vertices per particle
    Rational x_min = system[0].position;
    Rational x_max = x_min;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Rational> times{Rational(0)};
        for (const CollisionEvent& event : result.events) {
            if (event.time < t_max && detail::event_span(event).contains(i)) {
                times.push_back(event.time);
            }
        }
        times.push_back(t_max);
        for (const Rational& t : times) {
            Rational x = position_at(result, system, i, t);
            if (x < x_min) {
                x_min = x;
            }
            if (x > x_max) {
                x_max = x;
            }
            paths[i - 1].push_back(Point2{std::move(x), t});
        }
    }

    detail::SvgFrame frame(x_min, x_max, Rational(0), t_max, options.width, options.height,
                           options.margin);
    detail::SvgBuilder svg(options.width, options.height);

    svg.line(frame.x(x_min), frame.y(Rational(0)), frame.x(x_max), frame.y(Rational(0)),
             "stroke=\"#cccccc\" stroke-width=\"1\"");

    for (const std::vector<Point2>& path : paths) {
        std::vector<std::pair<std::string, std::string>> line;
        line.reserve(path.size());
        for (const Point2& p : path) {
            line.emplace_back(frame.x(p.x), frame.y(p.y));
        }
        svg.polyline(line, "fill=\"none\" stroke=\"#1f3b99\" stroke-width=\"1.5\"");
    }

    for (const CollisionEvent& event : result.events) {
        if (event.time <= t_max) {
            svg.circle(frame.x(event.position), frame.y(event.time), "3.5",
                       "fill=\"#c22525\"");
        }
    }

    return svg.finish();
}

} // namespace sticky
