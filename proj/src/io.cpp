#include "sphc/io.hpp"

#include <fstream>
#include <sstream>

namespace sphc {
namespace io {

namespace {

std::vector<int> parse_ids(std::istringstream& line) {
    std::vector<int> ids;
    long long v;
    while (line >> v) {
        if (v < 0 || v > VertexSet::kMaxVertex)
            throw InvalidArgument("vertex id out of range: " + std::to_string(v));
        ids.push_back(static_cast<int>(v));
    }
    if (!line.eof()) throw InvalidArgument("malformed vertex list");
    return ids;
}

json vertex_array(VertexSet s) {
    json a = json::array();
    for (int v : s) a.push_back(v);
    return a;
}

}  // namespace

SimplicialComplex read_cplx(std::istream& in) {
    std::vector<VertexSet> facets;
    std::optional<VertexSet> universe;
    std::string raw;
    while (std::getline(in, raw)) {
        std::istringstream line(raw);
        std::string head;
        if (!(line >> head)) continue;  // blank line
        if (head == "#universe") {
            VertexSet u;
            for (int v : parse_ids(line)) u.insert(v);
            universe = u;
            continue;
        }
        if (head[0] == '#') continue;  // comment
        if (head == "()") {
            if (line >> head) throw InvalidArgument("trailing tokens after ()");
            facets.push_back({});
            continue;
        }
        line.clear();
        line.str(raw);
        VertexSet f;
        for (int v : parse_ids(line)) f.insert(v);
        facets.push_back(f);
    }
    if (facets.empty() && !universe)
        return SimplicialComplex::void_complex();
    return SimplicialComplex::from_facets(std::move(facets), universe);
}

SimplicialComplex read_cplx_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    return read_cplx(in);
}

std::string write_cplx(const SimplicialComplex& delta) {
    std::string out;
    if (delta.is_void()) return out;
    out += "#universe";
    for (int v : delta.universe()) out += " " + std::to_string(v);
    out += "\n";
    for (const VertexSet& f : delta.facets()) {
        if (f.empty()) {
            out += "()\n";
            continue;
        }
        bool first = true;
        for (int v : f) {
            if (!first) out += " ";
            out += std::to_string(v);
            first = false;
        }
        out += "\n";
    }
    return out;
}

Graph read_graph(std::istream& in) {
    int n;
    if (!(in >> n)) throw InvalidArgument("missing vertex count");
    Graph g(n);
    int u, v;
    while (in >> u >> v) g.add_edge(u, v);
    if (!in.eof()) throw InvalidArgument("malformed edge list");
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    return read_graph(in);
}

std::string write_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

json profile_json(const HomologyProfile& profile) {
    json dims = json::object();
    for (auto& [d, v] : profile.dims) dims[std::to_string(d)] = v;
    return json{{"field", profile.field.name()}, {"dims", dims}};
}

json classification_json(const Classification& cls) {
    json out{{"class", cls.to_string()}};
    if (cls.is_sphere()) out["sphere_dim"] = cls.sphere_dim;
    return out;
}

json verdict_json(const SphericalVerdict& verdict) {
    json out{{"spherical", verdict.is_spherical}};
    if (verdict.witness) {
        out["witness"] = json{{"X", vertex_array(verdict.witness->x)},
                              {"Y", vertex_array(verdict.witness->y)},
                              {"profile", profile_json(verdict.witness->profile)}};
    }
    return out;
}

json filtration_json(const FiltrationRecord& rec) {
    json steps = json::array();
    for (const FiltrationStep& s : rec.steps)
        steps.push_back(json::array(
            {s.move == FiltrationStep::Move::Link ? "L" : "D", s.vertex}));
    return json{{"steps", steps},
                {"link_set", vertex_array(rec.link_set)},
                {"delete_set", vertex_array(rec.delete_set)},
                {"outside_stars", vertex_array(rec.outside_stars)},
                {"dep", rec.dep},
                {"pd", rec.pd}};
}

json sign_json(const SignPosetStats& stats) {
    return json{{"order", stats.order},
                {"level_counts", stats.level_counts},
                {"sign", stats.sign}};
}

json betti_json(const BettiTable& table) {
    json entries = json::array();
    for (auto& [key, value] : table.entries)
        entries.push_back(json{{"i", key.first},
                               {"support", vertex_array(VertexSet::from_bits(key.second))},
                               {"value", value}});
    return json{{"n", table.n}, {"entries", entries}};
}

json oracle_report_json(const oracle::OracleReport& rep) {
    json bad = json::array();
    for (const oracle::Discrepancy& d : rep.discrepancies)
        bad.push_back(json{{"operation", d.operation},
                           {"input", d.input},
                           {"expected", d.expected},
                           {"got", d.got}});
    return json{{"subject", rep.subject},
                {"checks_run", rep.checks_run},
                {"pass", rep.pass()},
                {"discrepancies", bad}};
}

std::string betti_tsv(const BettiTable& table) {
    std::string out = "i\tsupport\tvalue\n";
    for (auto& [key, value] : table.entries)
        out += std::to_string(key.first) + "\t" +
               VertexSet::from_bits(key.second).to_string() + "\t" +
               std::to_string(value) + "\n";
    return out;
}

std::string betti_diagram(const BettiTable& table) {
    int pd = table.pd();
    int reg = table.reg();
    // row r, column i holds sum of entries with |support| - i == r.
    std::vector<std::vector<long long>> grid(static_cast<std::size_t>(reg) + 1,
                                             std::vector<long long>(static_cast<std::size_t>(pd) + 1, 0));
    for (auto& [key, value] : table.entries) {
        int deg = VertexSet::from_bits(key.second).size();
        grid[static_cast<std::size_t>(deg - key.first)][static_cast<std::size_t>(key.first)] +=
            value;
    }
    std::ostringstream out;
    out << "    ";
    for (int i = 0; i <= pd; ++i) out << "\t" << i;
    out << "\n";
    for (int r = 0; r <= reg; ++r) {
        out << r << ":";
        for (int i = 0; i <= pd; ++i) {
            long long v = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
            out << "\t" << (v == 0 ? "." : std::to_string(v));
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace io
}  // namespace sphc
