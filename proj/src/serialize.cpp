#include "arrangelab/serialize.h"

#include <sstream>

#include "arrangelab/errors.h"

namespace arrangelab {

namespace {

Json integer_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Rational rational_from_json(const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError(0, "expected an integer or rational string, got " + v.dump());
}

Json labels(const Arrangement& a, const HyperplaneSet& s) {
    Json out = Json::array();
    s.for_each([&](std::size_t h) { out.push_back(a.label(h)); });
    return out;
}

std::string flat_name(const IntersectionLattice& l, FlatId x) {
    const Arrangement& a = l.arrangement();
    if (x == l.bottom()) return "V";
    std::string s;
    l.flat(x).hyperplanes.for_each([&](std::size_t h) { s += (s.empty() ? "" : ",") + a.label(h); });
    return s;
}

}  // namespace

Json polynomial_to_json(const IntPolynomial& p) {
    return {{"coefficients", p.coefficients()}, {"text", p.to_string()}};
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.order()}, {"edges", edges}};
}

Json arrangement_to_json(const Arrangement& a) {
    if (a.kind() == ArrangementKind::graphical) {
        Json j = {{"kind", "graphical"}};
        j.update(graph_to_json(a.graph()));
        return j;
    }
    Json normals = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        Json row = Json::array();
        for (const auto& c : a.normal(i)) row.push_back(integer_to_json(c));
        normals.push_back(row);
    }
    return {{"kind", "general"}, {"dimension", a.ambient_dim()}, {"normals", normals}};
}

Arrangement arrangement_from_json(const Json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "graphical") {
            std::vector<Edge> edges;
            for (const auto& e : j.at("edges")) {
                const int u = e.at(0).get<int>(), v = e.at(1).get<int>();
                edges.push_back({std::min(u, v), std::max(u, v)});
            }
            return Arrangement::graphical(Graph(j.at("n").get<int>(), std::move(edges)));
        }
        if (kind == "general") {
            std::vector<std::vector<Rational>> normals;
            for (const auto& row : j.at("normals")) {
                std::vector<Rational> r;
                for (const auto& c : row) r.push_back(rational_from_json(c));
                normals.push_back(std::move(r));
            }
            return Arrangement::general(j.at("dimension").get<int>(), normals);
        }
        throw ParseError(0, "unknown arrangement kind '" + kind + "'");
    } catch (const Json::exception& e) {
        throw ParseError(0, std::string("malformed arrangement: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, std::string("invalid arrangement: ") + e.what());
    }
}

Json partition_to_json(const Arrangement& a, const ArrangementPartition& p) {
    Json out = Json::array();
    for (const auto& part : p.parts()) {
        Json row = Json::array();
        for (std::size_t h : part) row.push_back(a.label(h));
        out.push_back(row);
    }
    return out;
}

ArrangementPartition partition_from_json(const Arrangement& a, const Json& j) {
    if (!j.is_array()) throw ParseError(0, "partition must be an array of parts");
    std::vector<std::vector<std::size_t>> parts;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError(0, "each part must be an array");
        std::vector<std::size_t> part;
        for (const auto& item : row) {
            if (item.is_number_unsigned()) {
                part.push_back(item.get<std::size_t>());
            } else if (item.is_string()) {
                auto idx = a.index_of_label(item.get<std::string>());
                if (!idx) throw ParseError(0, "unknown hyperplane '" + item.get<std::string>() + "'");
                part.push_back(*idx);
            } else {
                throw ParseError(0, "hyperplane must be a label or index, got " + item.dump());
            }
        }
        parts.push_back(std::move(part));
    }
    try {
        return ArrangementPartition(a.size(), std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

Json flat_to_json(const IntersectionLattice& l, FlatId x) {
    const Flat& f = l.flat(x);
    Json j = {{"id", x}, {"rank", f.rank}, {"mobius", l.mobius(x)},
              {"hyperplanes", labels(l.arrangement(), f.hyperplanes)}};
    if (l.arrangement().kind() == ArrangementKind::graphical) j["partition"] = f.partition;
    return j;
}

Json chain_to_json(const IntersectionLattice& l, const FlatChain& c) {
    Json out = Json::array();
    for (FlatId x : c.flats) out.push_back(flat_to_json(l, x));
    return out;
}

Json certificate_to_json(const ChordalityCertificate& c) {
    if (const auto* o = std::get_if<EliminationOrdering>(&c)) return {{"chordal", true}, {"order", o->order}};
    return {{"chordal", false}, {"chordless_cycle", std::get<ChordlessCycle>(c).cycle}};
}

Json lattice_to_json(const IntersectionLattice& l) {
    Json flats = Json::array();
    Json covers = Json::array();
    for (FlatId x = 0; x < l.size(); ++x) {
        flats.push_back(flat_to_json(l, x));
        for (FlatId y : l.upper_covers(x)) covers.push_back({x, y});
    }
    return {{"arrangement", arrangement_to_json(l.arrangement())},
            {"rank", l.rank()},
            {"size", l.size()},
            {"flats", flats},
            {"covers", covers},
            {"characteristic_polynomial", polynomial_to_json(characteristic_polynomial(l))}};
}

IntersectionLattice lattice_from_json(const Json& j, LatticeOptions opts) {
    if (!j.is_object() || !j.contains("arrangement")) throw ParseError(0, "lattice document needs an 'arrangement'");
    auto l = IntersectionLattice::build(arrangement_from_json(j.at("arrangement")), opts);
    if (j.contains("flats")) {
        const auto& flats = j.at("flats");
        if (!flats.is_array() || flats.size() != l.size())
            throw ParseError(0, "flat list does not match the arrangement's lattice");
        for (FlatId x = 0; x < l.size(); ++x)
            if (flats[x] != flat_to_json(l, x))
                throw ParseError(0, "flat " + std::to_string(x) + " does not match the arrangement's lattice");
    }
    return l;
}

std::string lattice_to_dot(const IntersectionLattice& l) {
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (FlatId x = 0; x < l.size(); ++x)
        os << "  f" << x << " [label=\"" << flat_name(l, x) << "\\nr=" << l.rank(x) << " mu=" << l.mobius(x)
           << "\"];\n";
    for (FlatId x = 0; x < l.size(); ++x)
        for (FlatId y : l.upper_covers(x)) os << "  f" << x << " -> f" << y << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace arrangelab
