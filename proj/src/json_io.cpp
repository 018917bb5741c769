#include "torus/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace torus::io {

namespace {

std::string item(const std::string& path, std::size_t index) {
    return path + "[" + std::to_string(index) + "]";
}

std::string field(const std::string& path, const std::string& key) { return path + "." + key; }

void require_object(const json& v, const std::string& path) {
    if (!v.is_object()) throw SchemaError(path, "expected an object");
}

void require_array(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array");
}

const json& require_key(const json& v, const std::string& key, const std::string& path) {
    require_object(v, path);
    auto it = v.find(key);
    if (it == v.end()) throw SchemaError(path, "missing required field \"" + key + "\"");
    return *it;
}

void reject_unknown_keys(const json& v, std::initializer_list<const char*> allowed,
                         const std::string& path) {
    for (auto it = v.begin(); it != v.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) {
            if (it.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) throw SchemaError(field(path, it.key()), "unknown field");
    }
}

long int_from_json(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
    return v.get<long>();
}

bool bool_from_json(const json& v, const std::string& path) {
    if (!v.is_boolean()) throw SchemaError(path, "expected a boolean");
    return v.get<bool>();
}

std::string string_from_json(const json& v, const std::string& path) {
    if (!v.is_string()) throw SchemaError(path, "expected a string");
    return v.get<std::string>();
}

std::vector<std::pair<std::string, std::string>> pair_list_from_json(const json& v,
                                                                     const std::string& path) {
    require_array(v, path);
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const json& entry = v[i];
        if (!entry.is_array() || entry.size() != 2) {
            throw SchemaError(item(path, i), "expected a [key, value] pair");
        }
        out.emplace_back(string_from_json(entry[0], item(path, i) + "[0]"),
                         string_from_json(entry[1], item(path, i) + "[1]"));
    }
    return out;
}

json pair_list_to_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
    json out = json::array();
    for (const auto& [k, v] : pairs) out.push_back(json::array({k, v}));
    return out;
}

}  // namespace

Rational rational_from_json(const json& value, const std::string& path) {
    if (!value.is_string()) {
        throw SchemaError(path, "expected a rational string \"num/den\" (decimals are rejected)");
    }
    try {
        return Rational::parse(value.get<std::string>());
    } catch (const ValidationError& e) {
        throw SchemaError(path, e.what());
    }
}

CirclePoint point_from_json(const json& value, const std::string& path) {
    return reduce(rational_from_json(value, path));
}

json to_json(const ArcUnion& arcs) {
    json list = json::array();
    for (const Arc& a : arcs.arcs()) {
        list.push_back({{"start", a.start.str()}, {"length", a.length.str()}});
    }
    return {{"full_circle", arcs.is_full()}, {"arcs", std::move(list)}};
}

ArcUnion arc_union_from_json(const json& value, const std::string& path) {
    require_object(value, path);
    reject_unknown_keys(value, {"full_circle", "arcs"}, path);
    bool full = bool_from_json(require_key(value, "full_circle", path), field(path, "full_circle"));
    const json& arcs_json = require_key(value, "arcs", path);
    require_array(arcs_json, field(path, "arcs"));

    std::vector<Arc> arcs;
    arcs.reserve(arcs_json.size());
    for (std::size_t i = 0; i < arcs_json.size(); ++i) {
        const std::string apath = item(field(path, "arcs"), i);
        const json& a = arcs_json[i];
        require_object(a, apath);
        reject_unknown_keys(a, {"start", "length"}, apath);
        Arc arc;
        arc.start = point_from_json(require_key(a, "start", apath), field(apath, "start"));
        arc.length = rational_from_json(require_key(a, "length", apath), field(apath, "length"));
        arcs.push_back(std::move(arc));
    }
    try {
        return ArcUnion::checked(std::move(arcs), full);
    } catch (const ValidationError& e) {
        throw SchemaError(field(path, "arcs"), e.what());
    }
}

json to_json(const PLCircleMap& map) {
    const auto& pts = map.breakpoints();
    bool plain_times_p = pts.size() == 2 && pts[0].v.is_zero() && map.is_times_p();
    if (plain_times_p) {
        return {{"type", "times_p"}, {"p", map.times_p_value()}};
    }
    json lift = json::array();
    for (const auto& bp : pts) lift.push_back(json::array({bp.t.str(), bp.v.str()}));
    return {{"type", "pl"}, {"lift", std::move(lift)}};
}

PLCircleMap map_from_json(const json& value, const std::string& path) {
    require_object(value, path);
    std::string type = string_from_json(require_key(value, "type", path), field(path, "type"));
    if (type == "times_p") {
        reject_unknown_keys(value, {"type", "p"}, path);
        long p = int_from_json(require_key(value, "p", path), field(path, "p"));
        try {
            return PLCircleMap::times_p(p);
        } catch (const ValidationError& e) {
            throw SchemaError(field(path, "p"), e.what());
        }
    }
    if (type == "pl") {
        reject_unknown_keys(value, {"type", "lift"}, path);
        const json& lift = require_key(value, "lift", path);
        require_array(lift, field(path, "lift"));
        std::vector<std::pair<Rational, Rational>> pts;
        pts.reserve(lift.size());
        for (std::size_t i = 0; i < lift.size(); ++i) {
            const std::string p = item(field(path, "lift"), i);
            if (!lift[i].is_array() || lift[i].size() != 2) {
                throw SchemaError(p, "expected a [t, v] pair of rational strings");
            }
            pts.emplace_back(rational_from_json(lift[i][0], p + "[0]"),
                             rational_from_json(lift[i][1], p + "[1]"));
        }
        try {
            return PLCircleMap::from_breakpoints(std::move(pts));
        } catch (const ValidationError& e) {
            throw SchemaError(field(path, "lift"), e.what());
        }
    }
    throw SchemaError(field(path, "type"), "expected \"times_p\" or \"pl\"");
}

json to_json(const SeparatedSetReport& report) {
    json points = json::array();
    for (const auto& p : report.points) points.push_back(p.str());
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back(json::array(
            {static_cast<long>(w.i), static_cast<long>(w.j), w.least_index, w.dist.str()}));
    }
    return {{"n", report.n},
            {"eps", report.eps.str()},
            {"points", std::move(points)},
            {"certified", report.certified},
            {"size", static_cast<long>(report.size)},
            {"method", to_string(report.method)},
            {"maximal", report.maximal},
            {"witnesses_stored", report.witnesses_stored},
            {"witnesses", std::move(witnesses)}};
}

SeparatedSetReport separated_report_from_json(const json& value, const std::string& path) {
    require_object(value, path);
    reject_unknown_keys(value,
                        {"n", "eps", "points", "certified", "size", "method", "maximal",
                         "witnesses_stored", "witnesses"},
                        path);
    SeparatedSetReport report;
    report.n = int_from_json(require_key(value, "n", path), field(path, "n"));
    report.eps = rational_from_json(require_key(value, "eps", path), field(path, "eps"));
    const json& points = require_key(value, "points", path);
    require_array(points, field(path, "points"));
    for (std::size_t i = 0; i < points.size(); ++i) {
        report.points.push_back(point_from_json(points[i], item(field(path, "points"), i)));
    }
    report.certified =
        bool_from_json(require_key(value, "certified", path), field(path, "certified"));
    report.size = static_cast<std::size_t>(
        int_from_json(require_key(value, "size", path), field(path, "size")));
    std::string method =
        string_from_json(require_key(value, "method", path), field(path, "method"));
    if (method == "greedy") {
        report.method = SearchMethod::greedy;
    } else if (method == "exact") {
        report.method = SearchMethod::exact;
    } else if (method == "external") {
        report.method = SearchMethod::external;
    } else {
        throw SchemaError(field(path, "method"), "expected greedy|exact|external");
    }
    report.maximal = bool_from_json(require_key(value, "maximal", path), field(path, "maximal"));
    report.witnesses_stored = bool_from_json(require_key(value, "witnesses_stored", path),
                                             field(path, "witnesses_stored"));
    const json& witnesses = require_key(value, "witnesses", path);
    require_array(witnesses, field(path, "witnesses"));
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        const std::string wpath = item(field(path, "witnesses"), i);
        const json& w = witnesses[i];
        if (!w.is_array() || w.size() != 4) {
            throw SchemaError(wpath, "expected [i, j, least_index, dist]");
        }
        WitnessEntry entry;
        entry.i = static_cast<std::size_t>(int_from_json(w[0], wpath + "[0]"));
        entry.j = static_cast<std::size_t>(int_from_json(w[1], wpath + "[1]"));
        entry.least_index = int_from_json(w[2], wpath + "[2]");
        entry.dist = rational_from_json(w[3], wpath + "[3]");
        report.witnesses.push_back(std::move(entry));
    }
    return report;
}

json to_json(const EdgeColoring& coloring) {
    json vertices = json::array();
    for (const auto& v : coloring.vertices()) vertices.push_back(v.str());
    json edges = json::array();
    const std::size_t m = coloring.vertex_count();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            edges.push_back(json::array(
                {static_cast<long>(i), static_cast<long>(j), coloring.color(i, j)}));
        }
    }
    return {{"n", coloring.num_colors()}, {"vertices", std::move(vertices)},
            {"edges", std::move(edges)}};
}

EdgeColoring coloring_from_json(const json& value, const std::string& path) {
    require_object(value, path);
    reject_unknown_keys(value, {"n", "vertices", "edges"}, path);
    long num_colors = int_from_json(require_key(value, "n", path), field(path, "n"));
    const json& vertices = require_key(value, "vertices", path);
    require_array(vertices, field(path, "vertices"));
    std::vector<CirclePoint> points;
    points.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        points.push_back(point_from_json(vertices[i], item(field(path, "vertices"), i)));
    }

    const std::size_t m = points.size();
    const std::size_t pairs = m * (m - 1) / 2;
    const json& edges = require_key(value, "edges", path);
    require_array(edges, field(path, "edges"));
    if (edges.size() != pairs) {
        throw SchemaError(field(path, "edges"),
                          "coloring must be total: expected " + std::to_string(pairs) +
                              " edges, got " + std::to_string(edges.size()));
    }
    std::vector<std::int32_t> colors(pairs, -1);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string epath = item(field(path, "edges"), k);
        const json& e = edges[k];
        if (!e.is_array() || e.size() != 3) throw SchemaError(epath, "expected [i, j, color]");
        long i = int_from_json(e[0], epath + "[0]");
        long j = int_from_json(e[1], epath + "[1]");
        long c = int_from_json(e[2], epath + "[2]");
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= m ||
            static_cast<std::size_t>(j) >= m || i >= j) {
            throw SchemaError(epath, "expected vertex indices 0 <= i < j < " + std::to_string(m));
        }
        std::size_t si = static_cast<std::size_t>(i);
        std::size_t sj = static_cast<std::size_t>(j);
        std::size_t rank = si * (2 * m - si - 1) / 2 + (sj - si - 1);
        if (colors[rank] != -1) throw SchemaError(epath, "duplicate edge");
        if (c < 0 || c >= num_colors) {
            throw SchemaError(epath + "[2]", "color outside [0, " + std::to_string(num_colors) + ")");
        }
        colors[rank] = static_cast<std::int32_t>(c);
    }
    try {
        return EdgeColoring(std::move(points), num_colors, std::move(colors));
    } catch (const ValidationError& e) {
        throw SchemaError(path, e.what());
    }
}

json to_json(const RamseyCertificate& cert) {
    return {{"claim", cert.claim},
            {"k_plus_1", cert.k_plus_1},
            {"colors", cert.num_colors},
            {"vertices", static_cast<long>(cert.num_vertices)},
            {"digest", cert.digest},
            {"capacity", cert.capacity}};
}

RamseyCertificate certificate_from_json(const json& value, const std::string& path) {
    require_object(value, path);
    reject_unknown_keys(value, {"claim", "k_plus_1", "colors", "vertices", "digest", "capacity"},
                        path);
    RamseyCertificate cert;
    cert.claim = string_from_json(require_key(value, "claim", path), field(path, "claim"));
    cert.k_plus_1 = int_from_json(require_key(value, "k_plus_1", path), field(path, "k_plus_1"));
    cert.num_colors = int_from_json(require_key(value, "colors", path), field(path, "colors"));
    cert.num_vertices = static_cast<std::size_t>(
        int_from_json(require_key(value, "vertices", path), field(path, "vertices")));
    cert.digest = string_from_json(require_key(value, "digest", path), field(path, "digest"));
    cert.capacity = string_from_json(require_key(value, "capacity", path), field(path, "capacity"));
    return cert;
}

json to_json(const VerificationReport& report) {
    json details = json::array();
    for (const auto& d : report.details) {
        details.push_back({{"label", d.label},
                           {"values", pair_list_to_json(d.values)},
                           {"ok", d.ok}});
    }
    json out = {{"claim_id", to_string(report.claim_id)},
                {"parameters", pair_list_to_json(report.parameters)},
                {"verdict", report.verdict == VerificationReport::Verdict::pass ? "pass"
                            : report.verdict == VerificationReport::Verdict::fail
                                ? "fail"
                                : "unsupported"},
                {"details", std::move(details)},
                {"counterexample", report.counterexample}};
    if (report.seed) out["seed"] = *report.seed;
    return out;
}

VerificationReport verification_report_from_json(const json& value, const std::string& path) {
    require_object(value, path);
    reject_unknown_keys(value,
                        {"claim_id", "parameters", "verdict", "details", "counterexample", "seed"},
                        path);
    VerificationReport report;
    std::string id = string_from_json(require_key(value, "claim_id", path), field(path, "claim_id"));
    if (id == "Lemma2_1") {
        report.claim_id = ClaimId::Lemma2_1;
    } else if (id == "Lemma2_2") {
        report.claim_id = ClaimId::Lemma2_2;
    } else if (id == "Prop2_3") {
        report.claim_id = ClaimId::Prop2_3;
    } else if (id == "CapacityCircle") {
        report.claim_id = ClaimId::CapacityCircle;
    } else if (id == "ArSeparated") {
        report.claim_id = ClaimId::ArSeparated;
    } else {
        throw SchemaError(field(path, "claim_id"), "unknown claim id \"" + id + "\"");
    }
    report.parameters =
        pair_list_from_json(require_key(value, "parameters", path), field(path, "parameters"));
    std::string verdict =
        string_from_json(require_key(value, "verdict", path), field(path, "verdict"));
    if (verdict == "pass") {
        report.verdict = VerificationReport::Verdict::pass;
    } else if (verdict == "fail") {
        report.verdict = VerificationReport::Verdict::fail;
    } else if (verdict == "unsupported") {
        report.verdict = VerificationReport::Verdict::unsupported;
    } else {
        throw SchemaError(field(path, "verdict"), "expected pass|fail|unsupported");
    }
    const json& details = require_key(value, "details", path);
    require_array(details, field(path, "details"));
    for (std::size_t i = 0; i < details.size(); ++i) {
        const std::string dpath = item(field(path, "details"), i);
        const json& d = details[i];
        require_object(d, dpath);
        reject_unknown_keys(d, {"label", "values", "ok"}, dpath);
        VerificationReport::Detail detail;
        detail.label = string_from_json(require_key(d, "label", dpath), field(dpath, "label"));
        detail.values =
            pair_list_from_json(require_key(d, "values", dpath), field(dpath, "values"));
        detail.ok = bool_from_json(require_key(d, "ok", dpath), field(dpath, "ok"));
        report.details.push_back(std::move(detail));
    }
    report.counterexample = string_from_json(require_key(value, "counterexample", path),
                                             field(path, "counterexample"));
    if (value.contains("seed")) {
        if (!value["seed"].is_number_unsigned() && !value["seed"].is_number_integer()) {
            throw SchemaError(field(path, "seed"), "expected an integer seed");
        }
        report.seed = value["seed"].get<std::uint64_t>();
    }
    return report;
}

json to_json(const ShadowResult& result) {
    json deviations = json::array();
    for (const auto& d : result.deviations) deviations.push_back(d.str());
    return {{"y", result.y.str()}, {"p", result.p}, {"deviations", std::move(deviations)}};
}

ShadowResult shadow_result_from_json(const json& value, const std::string& path) {
    require_object(value, path);
    reject_unknown_keys(value, {"y", "p", "deviations"}, path);
    ShadowResult result;
    result.y = point_from_json(require_key(value, "y", path), field(path, "y"));
    result.p = int_from_json(require_key(value, "p", path), field(path, "p"));
    const json& deviations = require_key(value, "deviations", path);
    require_array(deviations, field(path, "deviations"));
    for (std::size_t i = 0; i < deviations.size(); ++i) {
        result.deviations.push_back(
            rational_from_json(deviations[i], item(field(path, "deviations"), i)));
    }
    return result;
}

std::vector<CirclePoint> points_from_json(const json& value, const std::string& path) {
    const json* array = &value;
    if (value.is_object()) {
        array = &require_key(value, "points", path);
    }
    require_array(*array, path);
    std::vector<CirclePoint> points;
    points.reserve(array->size());
    for (std::size_t i = 0; i < array->size(); ++i) {
        points.push_back(point_from_json((*array)[i], item(path, i)));
    }
    return points;
}

json points_to_json(const std::vector<CirclePoint>& points) {
    json out = json::array();
    for (const auto& p : points) out.push_back(p.str());
    return out;
}

std::vector<std::vector<CirclePoint>> target_lists_from_json(const json& value,
                                                             const std::string& path) {
    const json* array = &value;
    if (value.is_object()) {
        array = &require_key(value, "targets", path);
    }
    require_array(*array, path);
    if (array->empty()) return {};

    std::vector<std::vector<CirclePoint>> lists;
    if ((*array)[0].is_string()) {
        lists.push_back(points_from_json(*array, path));  // single flat orbit
        return lists;
    }
    for (std::size_t i = 0; i < array->size(); ++i) {
        lists.push_back(points_from_json((*array)[i], item(path, i)));
    }
    return lists;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("file_not_found", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_file(const std::string& path) {
    std::string text = read_file(path);
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw SchemaError(path, "invalid JSON");
    return parsed;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError("write_failed", "cannot open " + tmp + " for writing");
        out << contents;
        if (!out.good()) throw ValidationError("write_failed", "failed writing " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw ValidationError("write_failed", "failed to move " + tmp + " into place");
    }
}

}  // namespace torus::io
