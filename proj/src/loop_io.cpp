#include "wilson/loop_io.hpp"

#include "wilson/errors.hpp"

#include <fstream>
#include <sstream>

namespace wilson {

namespace {

Vec vec_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer()) {
        throw ParseError("expected a lattice point as [x, y], got " + j.dump());
    }
    return Vec{j[0].get<long>(), j[1].get<long>()};
}

Json vec_to_json(Vec v) { return Json::array({v.x, v.y}); }

} // namespace

Loop loop_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("loop must be a JSON object, got " + j.dump());
    if (j.contains("moves")) {
        if (!j["moves"].is_string()) throw ParseError("\"moves\" must be a string");
        Vec origin{0, 0};
        if (j.contains("origin")) origin = vec_from_json(j["origin"]);
        return Loop::from_moves(origin, j["moves"].get<std::string>());
    }
    if (j.contains("vertices")) {
        if (!j["vertices"].is_array()) throw ParseError("\"vertices\" must be an array");
        std::vector<Vec> vs;
        vs.reserve(j["vertices"].size());
        for (const auto& e : j["vertices"]) vs.push_back(vec_from_json(e));
        return Loop::from_vertices(vs);
    }
    throw ParseError("loop object needs either \"moves\" or \"vertices\"");
}

Json loop_to_json(const Loop& l) {
    Json j = Json::object();
    j["origin"] = vec_to_json(l.base());
    j["moves"] = l.moves();
    return j;
}

Loop load_loop_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open loop file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return loop_from_json(j);
}

Json rational_to_json(const Rational& r) {
    Json j = Json::object();
    j["num"] = boost::multiprecision::numerator(r).str();
    j["den"] = boost::multiprecision::denominator(r).str();
    return j;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") ||
        !j["num"].is_string() || !j["den"].is_string()) {
        throw ParseError("expected {\"num\": str, \"den\": str}, got " + j.dump());
    }
    try {
        Int num(j["num"].get<std::string>());
        Int den(j["den"].get<std::string>());
        if (den == 0) throw ParseError("zero denominator");
        return Rational(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError("bad rational " + j.dump() + ": " + e.what());
    }
}

Json polynomial_to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& [exp, coeff] : p.terms()) {
        Json term = Json::object();
        term["exp"] = exp;
        term["num"] = boost::multiprecision::numerator(coeff).str();
        term["den"] = boost::multiprecision::denominator(coeff).str();
        arr.push_back(std::move(term));
    }
    return arr;
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
    Polynomial p;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("exp") || !term["exp"].is_number_integer()) {
            throw ParseError("polynomial term needs integer \"exp\": " + term.dump());
        }
        p.add_term(term["exp"].get<long>(), rational_from_json(term));
    }
    return p;
}

Json assignment_to_json(const PlaquetteAssignment& k) {
    Json arr = Json::array();
    for (const auto& [plq, count] : k.counts()) {
        Json e = Json::object();
        e["base"] = vec_to_json(plq.base);
        e["sign"] = plq.positive ? "+" : "-";
        e["count"] = count;
        arr.push_back(std::move(e));
    }
    return arr;
}

PlaquetteAssignment assignment_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("assignment must be an array of entries");
    PlaquetteAssignment k;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("base") || !e.contains("sign") ||
            !e.contains("count") || !e["sign"].is_string() ||
            !e["count"].is_number_integer()) {
            throw ParseError("bad assignment entry: " + e.dump());
        }
        const std::string sign = e["sign"].get<std::string>();
        if (sign != "+" && sign != "-") {
            throw ParseError("assignment sign must be \"+\" or \"-\", got " + sign);
        }
        const long count = e["count"].get<long>();
        if (count < 1) {
            throw ParseError("assignment counts must be positive: " + e.dump());
        }
        const Plaquette p{vec_from_json(e["base"]), sign == "+"};
        if (k.count(p) != 0) throw ParseError("duplicate assignment entry: " + e.dump());
        k.add(p, count);
    }
    return k;
}

} // namespace wilson
