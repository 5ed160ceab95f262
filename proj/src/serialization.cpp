#include "cil/serialization.hpp"

#include "cil/errors.hpp"

#include <charconv>
#include <fstream>
#include <string>

namespace cil {

namespace {

Json set_to_json(VertexSet s) { return Json(s.members()); }

VertexSet set_from_json(const Json& doc, int n) {
    if (!doc.is_array()) throw InvalidInput("expected an array of vertex indices");
    VertexSet s;
    for (const Json& v : doc) {
        if (!v.is_number_integer()) throw InvalidInput("vertex indices must be integers");
        const int idx = v.get<int>();
        if (idx < 1 || idx > n) throw InvalidInput("vertex index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
        s.insert(idx);
    }
    return s;
}

std::vector<VertexSet> sets_from_json(const Json& doc, int n) {
    if (!doc.is_array()) throw InvalidInput("expected an array of vertex sets");
    std::vector<VertexSet> out;
    for (const Json& s : doc) out.push_back(set_from_json(s, n));
    return out;
}

Json sets_to_json(const std::vector<VertexSet>& sets) {
    Json out = Json::array();
    for (VertexSet s : sets) out.push_back(set_to_json(s));
    return out;
}

int read_n(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) throw InvalidInput("document needs an integer \"n\"");
    const int n = doc["n"].get<int>();
    if (n < 0 || n > kMaxVertices) throw InvalidInput("\"n\" must lie in 0.." + std::to_string(kMaxVertices));
    return n;
}

const Json& field(const Json& doc, const char* key) {
    if (!doc.contains(key)) throw InvalidInput(std::string("document is missing \"") + key + "\"");
    return doc[key];
}

}  // namespace

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    Json out{{"n", g.n()}, {"edges", edges}};
    if (g.vertices() != VertexSet::first_n(g.n())) out["vertices"] = set_to_json(g.vertices());
    return out;
}

Graph graph_from_json(const Json& doc) {
    const int n = read_n(doc);
    Graph g(n);
    for (const Json& e : field(doc, "edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InvalidInput("each edge must be a pair of vertex indices");
        const int u = e[0].get<int>();
        const int v = e[1].get<int>();
        if (u < 1 || u > n || v < 1 || v > n) throw InvalidInput("edge endpoint outside 1.." + std::to_string(n));
        g.add_edge(u, v);
    }
    if (doc.contains("vertices")) {
        const VertexSet keep = set_from_json(doc["vertices"], n);
        for (const auto& [u, v] : g.edges())
            if (!keep.contains(u) || !keep.contains(v)) throw InvalidInput("edge endpoint is not listed in \"vertices\"");
        g = g.induced(keep);
    }
    return g;
}

Json to_json(const MonomialIdeal& ideal) { return Json{{"n", ideal.n()}, {"gens", sets_to_json(ideal.generators())}}; }

MonomialIdeal ideal_from_json(const Json& doc) {
    const int n = read_n(doc);
    return MonomialIdeal(n, sets_from_json(field(doc, "gens"), n));
}

Json to_json(const SimplicialComplex& complex) {
    return Json{{"n", complex.n()}, {"facets", sets_to_json(complex.facets())}};
}

SimplicialComplex complex_from_json(const Json& doc) {
    const int n = read_n(doc);
    return SimplicialComplex(n, sets_from_json(field(doc, "facets"), n));
}

Json to_json(const BettiTable& table) {
    Json entries = Json::array();
    for (const auto& [key, b] : table.entries()) entries.push_back({{"i", key.first}, {"j", key.second}, {"b", b}});
    return Json{{"subject", to_string(table.subject())}, {"entries", entries}};
}

BettiTable betti_from_json(const Json& doc) {
    if (!doc.is_object()) throw InvalidInput("Betti table must be an object");
    const Json& subject = field(doc, "subject");
    BettiTable table;
    if (subject == "ideal")
        table = BettiTable(BettiSubject::ideal);
    else if (subject == "quotient")
        table = BettiTable(BettiSubject::quotient);
    else
        throw InvalidInput("subject must be \"ideal\" or \"quotient\"");
    for (const Json& e : field(doc, "entries")) {
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("b")) throw InvalidInput("entries need i, j and b");
        if (!e["b"].is_number_unsigned() || e["b"].get<std::uint64_t>() == 0) throw InvalidInput("Betti entries must be positive");
        table.add(e["i"].get<int>(), e["j"].get<int>(), e["b"].get<std::uint64_t>());
    }
    return table;
}

Json to_json(const LinearQuotientOrder& certificate) {
    return Json{{"n", certificate.n}, {"order", sets_to_json(certificate.order)}, {"sets", sets_to_json(certificate.sets)}};
}

LinearQuotientOrder linear_quotients_from_json(const Json& doc) {
    const int n = read_n(doc);
    LinearQuotientOrder out;
    out.n = n;
    out.order = sets_from_json(field(doc, "order"), n);
    out.sets = sets_from_json(field(doc, "sets"), n);
    return out;
}

Json to_json(const ShellingOrder& order, int n) { return Json{{"n", n}, {"order", sets_to_json(order.facets)}}; }

ShellingOrder shelling_from_json(const Json& doc) {
    const int n = read_n(doc);
    return ShellingOrder{sets_from_json(field(doc, "order"), n)};
}

namespace {

int parse_count(std::string_view text, std::string_view spec) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw InvalidInput("malformed graph spec '" + std::string(spec) + "': expected an integer, got '" + std::string(text) + "'");
    return value;
}

}  // namespace

Graph parse_graph_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw InvalidInput("malformed graph spec '" + std::string(spec) + "'");
    const std::string_view kind = spec.substr(0, colon);
    const std::string_view rest = spec.substr(colon + 1);
    if (kind == "complement") return parse_graph_spec(rest).complement();
    if (kind == "file") {
        std::ifstream in{std::string(rest)};
        if (!in) throw InvalidInput("cannot open graph file '" + std::string(rest) + "'");
        Json doc;
        try {
            in >> doc;
        } catch (const Json::exception& e) {
            throw InvalidInput("graph file '" + std::string(rest) + "' is not valid JSON: " + e.what());
        }
        return graph_from_json(doc);
    }
    if (kind == "chordal") {
        const auto second = rest.find(':');
        if (second == std::string_view::npos) throw InvalidInput("chordal spec needs chordal:N:SEED");
        const int n = parse_count(rest.substr(0, second), spec);
        const int seed = parse_count(rest.substr(second + 1), spec);
        if (n < 1 || n > kMaxVertices || seed < 0) throw InvalidInput("chordal spec out of range");
        return random_chordal(n, static_cast<std::uint64_t>(seed));
    }
    const int n = parse_count(rest, spec);
    if (n > kMaxVertices) throw InvalidInput("graph spec asks for more than " + std::to_string(kMaxVertices) + " vertices");
    if (kind == "path") return Graph::path(n);
    if (kind == "cycle") return Graph::cycle(n);
    if (kind == "complete") return Graph::complete(n);
    throw InvalidInput("unknown graph kind '" + std::string(kind) + "'");
}

}  // namespace cil
