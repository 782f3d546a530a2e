#include "mvpascal/io.hpp"

#include "mvpascal/errors.hpp"

namespace mvpascal {

namespace {

MultiIndex point_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("each point must be a nonempty array of integers");
    std::vector<int> comps;
    comps.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw ParseError("point components must be integers");
        long c = v.get<long>();
        if (c < 0) throw ParseError("negative point component");
        comps.push_back(static_cast<int>(c));
    }
    return MultiIndex(std::move(comps));
}

std::vector<MultiIndex> points_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a JSON array of points");
    std::vector<MultiIndex> pts;
    pts.reserve(j.size());
    for (const auto& p : j) pts.push_back(point_from_json(p));
    return pts;
}

json points_to_json(const std::vector<MultiIndex>& pts) {
    json out = json::array();
    for (const auto& k : pts) {
        json p = json::array();
        for (int j = 0; j < k.dim(); ++j) p.push_back(k[j]);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

PointSet pointset_from_json(const json& j, std::optional<int> expect_n) {
    std::vector<MultiIndex> pts = points_from_json(j);
    int n;
    if (expect_n)
        n = *expect_n;
    else if (!pts.empty())
        n = pts[0].dim();
    else
        throw ParseError("empty point list needs an explicit dimension");
    return PointSet::of(n, std::move(pts));
}

json pointset_to_json(const PointSet& R) { return points_to_json(R.points()); }

MonomialIdeal ideal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
        throw ParseError("ideal file needs keys \"n\" and \"generators\"");
    if (!j["n"].is_number_integer() || j["n"].get<long>() <= 0)
        throw ParseError("\"n\" must be a positive integer");
    return MonomialIdeal::of(j["n"].get<int>(), points_from_json(j["generators"]));
}

json ideal_to_json(const MonomialIdeal& ideal) {
    return json{{"n", ideal.n}, {"generators", points_to_json(ideal.generators)}};
}

std::string entry_str(const Int& v) { return to_string(v); }
std::string entry_str(const Rat& v) { return to_string(v); }
std::string entry_str(const Polynomial& v) { return v.str(); }

Sequence sequence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("index") ||
        !j.contains("values"))
        throw ParseError("sequence file needs keys \"n\", \"index\", \"values\"");
    if (!j["n"].is_number_integer() || j["n"].get<long>() <= 0)
        throw ParseError("\"n\" must be a positive integer");
    Sequence seq;
    seq.n = j["n"].get<int>();
    seq.index = points_from_json(j["index"]);
    for (const auto& k : seq.index)
        if (k.dim() != seq.n) throw ParseError("sequence point of wrong dimension");
    if (!j["values"].is_array() || j["values"].size() != seq.index.size())
        throw ParseError("\"values\" must align with \"index\"");
    for (const auto& v : j["values"]) {
        if (!v.is_string())
            throw ParseError("sequence values must be strings, not JSON numbers");
        seq.values.push_back(rat_from_string(v.get<std::string>()));
    }
    return seq;
}

json sequence_to_json(const PointSet& R, const std::vector<Rat>& values) {
    json vals = json::array();
    for (const auto& v : values) vals.push_back(to_string(v));
    return json{{"n", R.n()}, {"index", pointset_to_json(R)},
                {"values", std::move(vals)}};
}

std::vector<Rat> align_sequence(const Sequence& seq, const PointSet& W) {
    if (seq.n != W.n())
        throw DimensionError("sequence and window dimensions differ");
    std::vector<Rat> out;
    out.reserve(W.size());
    for (const auto& k : W.points()) {
        bool found = false;
        for (std::size_t i = 0; i < seq.index.size(); ++i)
            if (seq.index[i] == k) {
                out.push_back(seq.values[i]);
                found = true;
                break;
            }
        if (!found)
            throw MissingValueError("sequence has no value at (" + k.str() + ")");
    }
    return out;
}

json series_to_json(const TruncatedSeries& s) {
    json coeffs = json::array();
    for (const auto& [e, c] : s.coeffs()) {
        json exp = json::array();
        for (int j = 0; j < e.dim(); ++j) exp.push_back(e[j]);
        coeffs.push_back(json{{"exp", std::move(exp)},
                              {"num", c.get_num().get_str()},
                              {"den", c.get_den().get_str()}});
    }
    return json{{"n", s.nvars()}, {"cap", s.cap()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("cap") ||
        !j.contains("coeffs"))
        throw ParseError("series file needs keys \"n\", \"cap\", \"coeffs\"");
    if (!j["n"].is_number_integer() || j["n"].get<long>() <= 0)
        throw ParseError("\"n\" must be a positive integer");
    if (!j["cap"].is_number_integer() || j["cap"].get<long>() < 0)
        throw ParseError("\"cap\" must be a non-negative integer");
    TruncatedSeries s(j["n"].get<int>(), j["cap"].get<int>());
    if (!j["coeffs"].is_array()) throw ParseError("\"coeffs\" must be an array");
    for (const auto& t : j["coeffs"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("num") ||
            !t.contains("den"))
            throw ParseError("each coefficient needs \"exp\", \"num\", \"den\"");
        MultiIndex e = point_from_json(t["exp"]);
        if (e.dim() != s.nvars())
            throw ParseError("coefficient exponent of wrong dimension");
        if (!t["num"].is_string() || !t["den"].is_string())
            throw ParseError("coefficient parts must be strings");
        Rat c = rat_from_string(t["num"].get<std::string>() + "/" +
                                t["den"].get<std::string>());
        s.add_coeff(e, c);
    }
    return s;
}

}  // namespace mvpascal
