#pragma once

// Cumulative momentum diagram of a particle system, its lower convex
// envelope, the polygon decomposition, and the cluster prediction read off
// the envelope slopes. Everything is exact: collinearity and slope ties are
// decided with rational arithmetic, never with a tolerance.

#include "sticky/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sticky {

struct Particle {
    Rational mass;
    Rational position;
    Rational velocity;

    friend bool operator==(const Particle&, const Particle&) = default;
};

// Inclusive 1-based particle index range [lo, hi].
struct IndexRange {
    std::size_t lo = 0;
    std::size_t hi = 0;

    bool contains(std::size_t i) const { return lo <= i && i <= hi; }
    std::size_t length() const { return hi - lo + 1; }

    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

// Ordered particles with strictly increasing positions and positive masses.
class ParticleSystem {
public:
    explicit ParticleSystem(std::vector<Particle> particles)
        : particles_(std::move(particles)) {
        if (particles_.empty()) {
            throw ValidationError("particle system must contain at least one particle");
        }
        for (std::size_t i = 0; i < particles_.size(); ++i) {
            if (particles_[i].mass <= 0) {
                throw ValidationError("particle " + std::to_string(i + 1) +
                                      ": mass must be positive, got " +
                                      rational_to_string(particles_[i].mass));
            }
            if (i > 0 && !(particles_[i - 1].position < particles_[i].position)) {
                throw ValidationError("particle " + std::to_string(i + 1) + ": position " +
                                      rational_to_string(particles_[i].position) +
                                      " does not exceed previous position " +
                                      rational_to_string(particles_[i - 1].position));
            }
        }
    }

    std::size_t size() const { return particles_.size(); }
    const Particle& operator[](std::size_t i0) const { return particles_[i0]; }
    const std::vector<Particle>& particles() const { return particles_; }

    friend bool operator==(const ParticleSystem&, const ParticleSystem&) = default;

private:
    std::vector<Particle> particles_;
};

// Points P_0..P_n with P_k = (sum of first k masses, sum of first k momenta).
struct MomentumDiagram {
    std::vector<Point2> points;

    std::size_t n() const { return points.size() - 1; }
};

// Contact set of the lower convex envelope. `contacts` holds every index k
// whose point lies on the envelope, including points interior to an edge;
// `vertices` holds the hull corners only. `edge_slopes` has one entry per
// consecutive vertex pair and is strictly increasing.
struct Envelope {
    std::vector<std::size_t> contacts;
    std::vector<std::size_t> vertices;
    std::vector<Rational> edge_slopes;
};

struct Polygon {
    IndexRange members;
    Rational slope;
    bool degenerate = false;
};

struct PolygonDecomposition {
    std::vector<Polygon> polygons;
};

struct Cluster {
    IndexRange members;
    Rational mass;
    Rational velocity;

    friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct ClusterSet {
    std::vector<Cluster> clusters;

    friend bool operator==(const ClusterSet&, const ClusterSet&) = default;
};

// Positions play no role here: the diagram is a function of masses and
// velocities alone.
inline MomentumDiagram build_momentum_diagram(const ParticleSystem& system) {
    MomentumDiagram diagram;
    diagram.points.reserve(system.size() + 1);
    Point2 p{Rational(0), Rational(0)};
    diagram.points.push_back(p);
    for (const Particle& a : system.particles()) {
        p.x += a.mass;
        p.y += a.mass * a.velocity;
        diagram.points.push_back(p);
    }
    return diagram;
}

// Monotone-chain lower hull followed by an exact collinearity scan so that
// points lying on the interior of a hull edge count as contacts. Dropping
// those would wrongly merge equal-velocity particles that never collide.
inline Envelope lower_convex_envelope(const MomentumDiagram& diagram) {
    const std::vector<Point2>& pts = diagram.points;
    Envelope env;

    std::vector<std::size_t> hull;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        while (hull.size() >= 2 &&
               cross(pts[hull[hull.size() - 2]], pts[hull.back()], pts[k]) <= 0) {
            hull.pop_back();
        }
        hull.push_back(k);
    }

    env.vertices = hull;
    env.edge_slopes.reserve(hull.size() - 1);
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        env.edge_slopes.push_back(slope(pts[hull[e]], pts[hull[e + 1]]));
    }

    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        const std::size_t a = hull[e];
        const std::size_t b = hull[e + 1];
        env.contacts.push_back(a);
        for (std::size_t k = a + 1; k < b; ++k) {
            if (cross(pts[a], pts[b], pts[k]) == 0) {
                env.contacts.push_back(k);
            }
        }
    }
    env.contacts.push_back(hull.back());
    return env;
}

// Envelope height r(x) for x within the diagram's mass range.
inline Rational envelope_value(const MomentumDiagram& diagram, const Envelope& envelope,
                               const Rational& x) {
    const std::vector<Point2>& pts = diagram.points;
    if (x < pts.front().x || x > pts.back().x) {
        throw ValidationError("envelope_value: x outside the diagram range");
    }
    for (std::size_t e = 0; e + 1 < envelope.vertices.size(); ++e) {
        const Point2& a = pts[envelope.vertices[e]];
        const Point2& b = pts[envelope.vertices[e + 1]];
        if (x <= b.x) {
            return a.y + (x - a.x) * envelope.edge_slopes[e];
        }
    }
    return pts[envelope.vertices.back()].y; // x == right endpoint
}

// One polygon per consecutive contact pair (c, c'); members are the
// particles whose segments span it, i.e. indices c+1..c'. A single-segment
// polygon (c' == c+1) is the degenerate case.
inline PolygonDecomposition decompose_polygons(const MomentumDiagram& diagram,
                                               const Envelope& envelope) {
    PolygonDecomposition out;
    out.polygons.reserve(envelope.contacts.size() - 1);
    for (std::size_t j = 0; j + 1 < envelope.contacts.size(); ++j) {
        const std::size_t lo = envelope.contacts[j];
        const std::size_t hi = envelope.contacts[j + 1];
        out.polygons.push_back(Polygon{
            IndexRange{lo + 1, hi},
            slope(diagram.points[lo], diagram.points[hi]),
            hi == lo + 1,
        });
    }
    return out;
}

// Cluster prediction: one cluster per polygon, its velocity the polygon
// slope, its mass the polygon's width. Independent of particle positions.
inline ClusterSet predict_clusters(const ParticleSystem& system) {
    const MomentumDiagram diagram = build_momentum_diagram(system);
    const Envelope envelope = lower_convex_envelope(diagram);
    const PolygonDecomposition decomposition = decompose_polygons(diagram, envelope);

    ClusterSet out;
    out.clusters.reserve(decomposition.polygons.size());
    for (const Polygon& polygon : decomposition.polygons) {
        const Point2& a = diagram.points[polygon.members.lo - 1];
        const Point2& b = diagram.points[polygon.members.hi];
        out.clusters.push_back(Cluster{polygon.members, b.x - a.x, polygon.slope});
    }
    return out;
}

// Fixed-point reduction of the diagram: each pass keeps the endpoints and
// every interior point where the incoming slope does not exceed the
// outgoing one (so collinear points survive), then repeats until stable.
// Equivalent to the envelope contact set; the equivalence is enforced by
// test rather than assumed.
inline std::vector<Point2> recursive_envelope(std::vector<Point2> points) {
    if (points.empty()) {
        throw ValidationError("recursive_envelope requires at least one point");
    }
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(points[i].x < points[i + 1].x)) {
            throw ValidationError("recursive_envelope requires strictly increasing x");
        }
    }

    while (points.size() >= 3) {
        std::vector<Point2> kept;
        kept.reserve(points.size());
        kept.push_back(points.front());
        for (std::size_t i = 1; i + 1 < points.size(); ++i) {
            if (slope(points[i - 1], points[i]) <= slope(points[i], points[i + 1])) {
                kept.push_back(points[i]);
            }
        }
        kept.push_back(points.back());
        if (kept.size() == points.size()) {
            break;
        }
        points = std::move(kept);
    }
    return points;
}

} // namespace sticky
