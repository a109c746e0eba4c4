#include "rado/hypergraph.hpp"

#include "rado/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rado {

std::string family_name(std::uint8_t families)
{
    switch (families) {
    case kFamilyA: return "A";
    case kFamilyB: return "B";
    case kFamilyAB: return "AB";
    default: return "?";
    }
}

namespace {

bool edge_less(const std::vector<long long>& a, const std::vector<long long>& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

std::uint8_t parse_family(const std::string& s, std::size_t line)
{
    if (s == "A")
        return kFamilyA;
    if (s == "B")
        return kFamilyB;
    if (s == "AB")
        return kFamilyAB;
    throw ParseError(line, "unknown family '" + s + "'");
}

}  // namespace

Hypergraph Hypergraph::build(std::vector<long long> vertices, std::vector<Edge> edges, int k_a, int k_b,
                             Provenance provenance)
{
    Hypergraph h;
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    h.vertices_ = std::move(vertices);
    h.k_a_ = k_a;
    h.k_b_ = k_b;
    h.provenance_ = std::move(provenance);

    std::map<std::vector<long long>, std::uint8_t, decltype(&edge_less)> merged(&edge_less);
    for (Edge& e : edges) {
        std::sort(e.vertices.begin(), e.vertices.end());
        if (std::adjacent_find(e.vertices.begin(), e.vertices.end()) != e.vertices.end())
            throw PreconditionError("edge has repeated vertices");
        if (e.families == 0 || e.families > kFamilyAB)
            throw PreconditionError("edge has no family");
        if (e.is_a() && k_a > 0 && static_cast<int>(e.vertices.size()) != k_a)
            throw PreconditionError("A-edge of size " + std::to_string(e.vertices.size()) + ", expected " +
                                    std::to_string(k_a));
        if (e.is_b() && k_b > 0 && static_cast<int>(e.vertices.size()) != k_b)
            throw PreconditionError("B-edge of size " + std::to_string(e.vertices.size()) + ", expected " +
                                    std::to_string(k_b));
        for (long long v : e.vertices)
            if (!std::binary_search(h.vertices_.begin(), h.vertices_.end(), v))
                throw PreconditionError("edge vertex " + std::to_string(v) + " is not a hypergraph vertex");
        merged[e.vertices] |= e.families;
    }
    for (auto& [verts, fam] : merged)
        h.edges_.push_back({verts, fam});
    h.index();
    return h;
}

void Hypergraph::index()
{
    local_edges_.clear();
    incidence_.assign(vertices_.size(), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        std::vector<int> loc;
        for (long long v : edges_[e].vertices) {
            int i = local(v);
            loc.push_back(i);
            incidence_[static_cast<std::size_t>(i)].push_back(static_cast<int>(e));
        }
        local_edges_.push_back(std::move(loc));
    }
}

int Hypergraph::local(long long v) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        return -1;
    return static_cast<int>(it - vertices_.begin());
}

std::size_t Hypergraph::tag_count() const
{
    std::size_t n = 0;
    for (const Edge& e : edges_)
        n += (e.is_a() ? 1 : 0) + (e.is_b() ? 1 : 0);
    return n;
}

std::vector<EdgeTag> Hypergraph::tags() const
{
    std::vector<EdgeTag> out;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e].is_a())
            out.push_back({e, kFamilyA});
        if (edges_[e].is_b())
            out.push_back({e, kFamilyB});
    }
    return out;
}

Hypergraph Hypergraph::with_tags(const std::vector<EdgeTag>& keep) const
{
    std::vector<std::uint8_t> fam(edges_.size(), 0);
    for (const EdgeTag& t : keep)
        fam.at(t.edge) |= t.family;
    Hypergraph h;
    h.vertices_ = vertices_;
    h.k_a_ = k_a_;
    h.k_b_ = k_b_;
    h.provenance_ = provenance_;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (fam[e])
            h.edges_.push_back({edges_[e].vertices, fam[e]});
    h.index();
    return h;
}

Hypergraph Hypergraph::without_tag(const EdgeTag& tag) const
{
    std::vector<EdgeTag> keep;
    for (const EdgeTag& t : tags())
        if (t.edge != tag.edge || t.family != tag.family)
            keep.push_back(t);
    return with_tags(keep);
}

Hypergraph Hypergraph::with_vertices(std::vector<long long> vertices) const
{
    return build(std::move(vertices), edges_, k_a_, k_b_, provenance_);
}

int Hypergraph::find(const std::vector<long long>& sorted_vertices) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), sorted_vertices,
                               [](const Edge& e, const std::vector<long long>& v) { return edge_less(e.vertices, v); });
    if (it == edges_.end() || it->vertices != sorted_vertices)
        return -1;
    return static_cast<int>(it - edges_.begin());
}

std::string Hypergraph::to_text() const
{
    std::ostringstream out;
    out << provenance_.n << ' ' << provenance_.p << ' ' << provenance_.seed << '\n';
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        out << (i ? " " : "") << vertices_[i];
    out << '\n';
    for (const Edge& e : edges_) {
        out << family_name(e.families);
        for (long long v : e.vertices)
            out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

nlohmann::json Hypergraph::to_json() const
{
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : edges_)
        edges.push_back({{"families", family_name(e.families)}, {"vertices", e.vertices}});
    return {{"n", provenance_.n},        {"p", provenance_.p}, {"seed", std::to_string(provenance_.seed)},
            {"k_a", k_a_},               {"k_b", k_b_},        {"vertices", vertices_},
            {"edges", std::move(edges)}};
}

Hypergraph parse_hypergraph_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    Provenance prov;
    if (!std::getline(in, line))
        throw ParseError(0, "missing header line");
    {
        std::istringstream hdr(line);
        std::string p;
        if (!(hdr >> prov.n >> p >> prov.seed))
            throw ParseError(line_no, "header must be 'n p seed'");
        prov.p = p;
    }
    ++line_no;
    std::vector<long long> vertices;
    if (std::getline(in, line)) {
        std::istringstream vs(line);
        long long v;
        while (vs >> v)
            vertices.push_back(v);
        if (!vs.eof())
            throw ParseError(line_no, "bad vertex list");
    }
    std::vector<Edge> edges;
    int k_a = 0, k_b = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream es(line);
        std::string fam;
        es >> fam;
        Edge e;
        e.families = parse_family(fam, line_no);
        long long v;
        while (es >> v)
            e.vertices.push_back(v);
        if (!es.eof())
            throw ParseError(line_no, "bad edge line");
        int size = static_cast<int>(e.vertices.size());
        if (e.is_a())
            k_a = k_a ? k_a : size;
        if (e.is_b())
            k_b = k_b ? k_b : size;
        edges.push_back(std::move(e));
    }
    return Hypergraph::build(std::move(vertices), std::move(edges), k_a, k_b, prov);
}

Hypergraph hypergraph_from_json(const nlohmann::json& doc)
{
    try {
        Provenance prov;
        prov.n = doc.at("n").get<long long>();
        prov.p = doc.at("p").get<std::string>();
        prov.seed = std::stoull(doc.at("seed").get<std::string>());
        std::vector<Edge> edges;
        for (const auto& e : doc.at("edges"))
            edges.push_back({e.at("vertices").get<std::vector<long long>>(),
                             parse_family(e.at("families").get<std::string>(), 0)});
        return Hypergraph::build(doc.at("vertices").get<std::vector<long long>>(), std::move(edges),
                                 doc.value("k_a", 0), doc.value("k_b", 0), prov);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(0, std::string("hypergraph json: ") + ex.what());
    }
}

}  // namespace rado
