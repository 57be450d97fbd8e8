#pragma once

// File input (JSON and CSV particle lists) and the serialized output
// formats of the command-line tool. All rational values travel as canonical
// "p/q" / integer strings; key order is fixed, so outputs are
// byte-deterministic.

#include "sticky/combinatorics.hpp"
#include "sticky/diagram.hpp"
#include "sticky/montecarlo.hpp"
#include "sticky/simulator.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sticky {

using Json = nlohmann::ordered_json;

enum class InputFormat {
    Auto,
    Json,
    Csv,
};

struct ParticleFile {
    ParticleSystem system;
    std::string path;
    InputFormat format = InputFormat::Auto;
};

namespace detail {

struct RawParticle {
    Rational mass;
    std::optional<Rational> position;
    Rational velocity;
    std::string where; // "record 3" or "line 4", for error messages
};

// Shared validation: masses positive, positions either absent everywhere
// (defaulting to 1..n) or present everywhere and strictly increasing.
// Errors cite the offending record/line.
inline ParticleSystem assemble_particles(const std::vector<RawParticle>& raw,
                                         const std::string& name) {
    if (raw.empty()) {
        throw ValidationError(name + ": no particles");
    }
    std::size_t with_position = 0;
    for (const RawParticle& r : raw) {
        if (r.position) {
            ++with_position;
        }
    }
    if (with_position != 0 && with_position != raw.size()) {
        throw ValidationError(name + ": position given for some particles but not all");
    }

    std::vector<Particle> particles;
    particles.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const RawParticle& r = raw[i];
        if (r.mass <= 0) {
            throw ValidationError(name + " " + r.where + ": mass must be positive, got " +
                                  rational_to_string(r.mass));
        }
        const Rational position = r.position ? *r.position : Rational(i + 1);
        if (i > 0 && !(particles.back().position < position)) {
            throw ValidationError(name + " " + r.where + ": position " +
                                  rational_to_string(position) +
                                  " does not exceed the previous position " +
                                  rational_to_string(particles.back().position));
        }
        particles.push_back(Particle{r.mass, position, r.velocity});
    }
    return ParticleSystem(std::move(particles));
}

inline Rational rational_from_json(const nlohmann::json& value, const std::string& name,
                                   const std::string& where, const char* key) {
    if (value.is_number_integer()) {
        return Rational(BigInt(value.get<long long>()));
    }
    if (value.is_string()) {
        return parse_rational(value.get<std::string>());
    }
    throw ParseError(name + " " + where + ": field '" + std::string(key) +
                     "' must be an integer or a rational string (quote decimals)");
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(std::string(trim(cell)));
            cell.clear();
        } else {
            cell += ch;
        }
    }
    cells.push_back(std::string(trim(cell)));
    return cells;
}

} // namespace detail

inline ParticleSystem parse_particles_json(const std::string& text, const std::string& name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(name + ": invalid JSON: " + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError(name + ": expected a JSON array of particle objects");
    }

    std::vector<detail::RawParticle> raw;
    raw.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const nlohmann::json& item = doc[i];
        const std::string where = "record " + std::to_string(i + 1);
        if (!item.is_object()) {
            throw ParseError(name + " " + where + ": expected an object");
        }
        if (!item.contains("m") || !item.contains("v")) {
            throw ParseError(name + " " + where + ": needs fields 'm' and 'v'");
        }
        detail::RawParticle r;
        r.mass = detail::rational_from_json(item.at("m"), name, where, "m");
        r.velocity = detail::rational_from_json(item.at("v"), name, where, "v");
        if (item.contains("x")) {
            r.position = detail::rational_from_json(item.at("x"), name, where, "x");
        }
        r.where = where;
        raw.push_back(std::move(r));
    }
    return detail::assemble_particles(raw, name);
}

inline ParticleSystem parse_particles_csv(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_number = 0;

    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_number;
        if (detail::trim(line).empty()) {
            continue;
        }
        header = detail::split_csv_line(line);
        break;
    }
    bool has_position = false;
    if (header == std::vector<std::string>{"m", "x", "v"}) {
        has_position = true;
    } else if (header != std::vector<std::string>{"m", "v"}) {
        throw ParseError(name + ": expected CSV header 'm,x,v' or 'm,v'");
    }

    std::vector<detail::RawParticle> raw;
    while (std::getline(in, line)) {
        ++line_number;
        if (detail::trim(line).empty()) {
            continue;
        }
        const std::vector<std::string> cells = detail::split_csv_line(line);
        const std::string where = "line " + std::to_string(line_number);
        if (cells.size() != header.size()) {
            throw ParseError(name + " " + where + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(cells.size()));
        }
        detail::RawParticle r;
        try {
            r.mass = parse_rational(cells[0]);
            if (has_position) {
                r.position = parse_rational(cells[1]);
            }
            r.velocity = parse_rational(cells[has_position ? 2 : 1]);
        } catch (const ParseError& e) {
            throw ParseError(name + " " + where + ": " + e.what());
        }
        r.where = where;
        raw.push_back(std::move(r));
    }
    return detail::assemble_particles(raw, name);
}

inline ParticleFile load_particle_file(const std::string& path,
                                       InputFormat format = InputFormat::Auto) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open input file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    InputFormat resolved = format;
    if (resolved == InputFormat::Auto) {
        if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
            resolved = InputFormat::Json;
        } else if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
            resolved = InputFormat::Csv;
        } else {
            const std::size_t first = text.find_first_not_of(" \t\r\n");
            resolved = (first != std::string::npos && text[first] == '[') ? InputFormat::Json
                                                                          : InputFormat::Csv;
        }
    }
    ParticleSystem system = resolved == InputFormat::Json
                                ? parse_particles_json(text, path)
                                : parse_particles_csv(text, path);
    return ParticleFile{std::move(system), path, resolved};
}

// ---- serialization ----

inline Json range_json(const IndexRange& range) {
    return Json::array({range.lo, range.hi});
}

inline Json clusters_json(const ClusterSet& clusters) {
    Json items = Json::array();
    for (const Cluster& cluster : clusters.clusters) {
        Json item;
        item["members"] = range_json(cluster.members);
        item["mass"] = rational_to_string(cluster.mass);
        item["velocity"] = rational_to_string(cluster.velocity);
        items.push_back(std::move(item));
    }
    Json out;
    out["clusters"] = std::move(items);
    return out;
}

inline Json events_json(const std::vector<CollisionEvent>& events) {
    Json items = Json::array();
    for (const CollisionEvent& event : events) {
        Json item;
        item["time"] = rational_to_string(event.time);
        item["position"] = rational_to_string(event.position);
        Json merged = Json::array();
        for (const IndexRange& range : event.merged) {
            merged.push_back(range_json(range));
        }
        item["merged"] = std::move(merged);
        items.push_back(std::move(item));
    }
    return items;
}

inline Json simulation_json(const SimulationResult& result) {
    Json out;
    out["events"] = events_json(result.events);
    out["final"] = clusters_json(result.final_clusters);
    return out;
}

inline Json diagram_sidecar_json(const MomentumDiagram& diagram, const Envelope& envelope,
                                 const PolygonDecomposition& decomposition) {
    Json points = Json::array();
    for (const Point2& p : diagram.points) {
        points.push_back(Json::array({rational_to_string(p.x), rational_to_string(p.y)}));
    }
    Json polygons = Json::array();
    for (const Polygon& polygon : decomposition.polygons) {
        Json item;
        item["members"] = range_json(polygon.members);
        item["slope"] = rational_to_string(polygon.slope);
        item["degenerate"] = polygon.degenerate;
        polygons.push_back(std::move(item));
    }
    Json out;
    out["points"] = std::move(points);
    out["contacts"] = envelope.contacts;
    out["edge_slopes"] = Json::array();
    for (const Rational& s : envelope.edge_slopes) {
        out["edge_slopes"].push_back(rational_to_string(s));
    }
    out["polygons"] = std::move(polygons);
    return out;
}

inline Json mc_result_json(const McConfig& config, const McResult& result) {
    Json out;
    out["n"] = config.n;
    out["trials"] = result.trials;
    out["seed"] = config.seed;
    Json histogram;
    Json estimates;
    for (const auto& [k, count] : result.histogram) {
        const std::string key = std::to_string(k);
        histogram[key] = count;
        const Rational p = result.exact_frequency(k);
        Json entry;
        entry["frequency"] = format_decimal(p, 6);
        entry["std_error"] =
            decimal_sqrt(p * (1 - p) / Rational(BigInt(result.trials)), 6);
        estimates[key] = std::move(entry);
    }
    out["histogram"] = std::move(histogram);
    out["estimates"] = std::move(estimates);
    return out;
}

// CSV for the trend table: exact columns always, decimal columns on request.
inline std::string trend_csv(const std::vector<TrendRow>& rows,
                             std::optional<int> decimal_digits = std::nullopt) {
    std::string out = decimal_digits ? "n,p,n_p,p_decimal,n_p_decimal\n" : "n,p,n_p\n";
    for (const TrendRow& row : rows) {
        out += std::to_string(row.n) + "," + rational_to_string(row.p) + "," +
               rational_to_string(row.n_times_p);
        if (decimal_digits) {
            out += "," + format_decimal(row.p, *decimal_digits) + "," +
                   format_decimal(row.n_times_p, *decimal_digits);
        }
        out += "\n";
    }
    return out;
}

} // namespace sticky
