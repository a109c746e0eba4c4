// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion
// numbers as arguments to run a subset.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "agreement.hpp"
#include "oracles.hpp"
#include "rado/colorability.hpp"
#include "rado/equations.hpp"
#include "rado/expectation.hpp"
#include "rado/harness.hpp"
#include "rado/params.hpp"
#include "rado/solutions.hpp"
#include "rado/structures.hpp"

using namespace rado;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<long long> range(long long n)
{
    std::vector<long long> out;
    for (long long i = 1; i <= n; ++i)
        out.push_back(i);
    return out;
}

RationalMatrix single_row(std::size_t k)
{
    std::vector<long long> row(k, 1);
    row.back() = -1;
    return RationalMatrix::from_int_rows({row});
}

// 1. Exact parameter suite.
Outcome parameters()
{
    Outcome o;
    int checks = 0;
    for (std::size_t k = 3; k <= 8; ++k) {
        ++checks;
        if (m_of(single_row(k)).value != Rational(k - 1, k - 2)) {
            o.pass = false;
            o.detail += " m_of k=" + std::to_string(k);
        }
    }
    for (long long ka = 3; ka <= 6; ++ka)
        for (long long kb = ka; kb <= 6; ++kb) {
            ++checks;
            const auto v = m_asym(single_row(static_cast<std::size_t>(ka)), single_row(static_cast<std::size_t>(kb))).value;
            if (v != Rational(ka * kb - ka, ka * kb - ka - kb)) {
                o.pass = false;
                o.detail += " m_asym " + std::to_string(ka) + "," + std::to_string(kb);
            }
        }
    std::vector<RationalMatrix> ms;
    for (std::size_t k = 3; k <= 8; ++k)
        ms.push_back(single_row(k));
    ms.push_back(RationalMatrix::from_int_rows({{1, 2, -3}}));
    ms.push_back(RationalMatrix::from_int_rows({{1, 1, -1, 0}, {0, 1, 1, -1}}));
    for (const auto& m : ms) {
        ++checks;
        if (m_asym(m, m).value != m_of(m).value) {
            o.pass = false;
            o.detail += " m_asym(M,M)";
        }
    }
    o.detail = std::to_string(checks) + " exact equalities" + o.detail;
    return o;
}

// 2. Solution enumeration versus the naive |S|^k filter on every [n], n <= 50.
Outcome solutions()
{
    Outcome o;
    struct Sys {
        std::string text;
        oracle::Rows rows;
        std::vector<long long> rhs;
    };
    const std::vector<Sys> systems{
        {"x+y-z=0", {{1, 1, -1}}, {0}},
        {"x+y-2z=0", {{1, 1, -2}}, {0}},
        {"x+y+z-w=0", {{1, 1, 1, -1}}, {0}},
        {"x+2y=3z+1", {{1, 2, -3}}, {1}},
        {"x+y-z=0; y+z-w=0", {{1, 1, -1, 0}, {0, 1, 1, -1}}, {0, 0}},
    };
    std::size_t compared = 0;
    for (const auto& s : systems) {
        const auto sys = parse_system(s.text);
        for (long long n = 1; n <= 50; ++n) {
            const auto expected = oracle::naive_solutions(s.rows, s.rhs, range(n));
            const auto got = enumerate_solutions(sys, explicit_set(n, range(n)));
            const std::set<std::vector<long long>> got_set(got.begin(), got.end());
            ++compared;
            if (got_set != expected || got_set.size() != got.size()) {
                o.pass = false;
                o.detail += " mismatch " + s.text + " n=" + std::to_string(n);
            }
        }
    }
    o.detail = std::to_string(compared) + " (system, n) pairs compared" + o.detail;
    return o;
}

// 3. is_rado versus exhaustive coloring.
Outcome colorability()
{
    Outcome o;
    int rado = 0;
    int mismatches = 0;
    std::size_t max_active = 0;
    for (const auto& h : agreement::coloring_corpus(2024, 200, 18)) {
        std::set<long long> active;
        for (const auto& e : h.edges())
            active.insert(e.vertices.begin(), e.vertices.end());
        max_active = std::max(max_active, active.size());
        if (!agreement::rado_agrees(h))
            ++mismatches;
        rado += is_rado(h).is_rado ? 1 : 0;
    }
    o.pass = mismatches == 0 && max_active <= 18;
    o.detail = "200 instances, " + std::to_string(rado) + " Rado, max " + std::to_string(max_active) +
               " active vertices, " + std::to_string(mismatches) + " mismatches";
    return o;
}

// 4. Fixtures.
Outcome fixtures()
{
    Outcome o;
    const auto powers = build_hypergraph(parse_system("x-2y=0"), parse_system("x-4y=0"),
                                         explicit_set(16, {1, 2, 4, 8, 16}));
    const bool powers_rado = is_rado(powers).is_rado && powers.edge_count() == 7;
    std::vector<Edge> lines{{{12, 13, 14}, kFamilyAB}, {{12, 23, 24}, kFamilyAB}, {{13, 23, 34}, kFamilyAB},
                            {{14, 24, 34}, kFamilyAB}};
    const auto pasch = Hypergraph::build({12, 13, 14, 23, 24, 34}, lines, 3, 3);
    const auto verdict = is_rado(pasch);
    Coloring known{pasch.vertices(), {}};
    for (long long v : pasch.vertices())
        known.colors.push_back(v == 12 || v == 13 || v == 34 ? Color::red : Color::blue);
    const bool pasch_ok = !verdict.is_rado && verdict.witness && is_good_coloring(pasch, *verdict.witness) &&
                          is_good_coloring(pasch, known);
    o.pass = powers_rado && pasch_ok;
    o.detail = std::string("powers fixture ") + (powers_rado ? "Rado" : "NOT Rado") + ", Pasch fixture " +
               (pasch_ok ? "not Rado with verified witnesses" : "FAILED");
    return o;
}

// 5. Minimal subgraphs of Rado samples satisfy the deterministic lemmas.
Outcome lemmas()
{
    Outcome o;
    const long long n = 1000;
    const int cap = default_cap(n);
    const Rational p(1, 10);
    const auto a = parse_system("x+y-z=0");
    const auto b = parse_system("x+y+z-w=0");
    std::ostringstream d;
    for (const bool symmetric : {false, true}) {
        const auto& bsys = symmetric ? a : b;
        int found = 0, claim_fail = 0, lemma_fail = 0;
        std::uint64_t seed = 1;
        std::size_t min_edges = SIZE_MAX, max_edges = 0;
        std::map<std::string, int> flags, undetermined;
        for (; found < 30 && seed < 200; ++seed) {
            const auto g = build_hypergraph(a, bsys, sample_set(n, p, seed));
            if (!is_rado(g).is_rado)
                continue;
            ++found;
            const auto h = rado_minimal(g);
            min_edges = std::min(min_edges, h.edge_count());
            max_edges = std::max(max_edges, h.edge_count());
            if (!is_rado(h).is_rado || !audit_claim21(h).pass)
                ++claim_fail;
            const auto r = symmetric ? audit_lemma33(h, cap) : audit_lemma22(h, cap);
            if (!r.precondition_ok || !r.any())
                ++lemma_fail;
            for (const auto& [name, m] : r.cases)
                flags[name] += m ? 1 : 0;
            for (const auto& name : r.undetermined)
                ++undetermined[name];
        }
        if (found < 30 || claim_fail || lemma_fail)
            o.pass = false;
        d << (symmetric ? "; symmetric: " : "asymmetric: ") << found << " Rado samples (seeds 1.." << seed - 1
          << "), minimal sizes " << min_edges << ".." << max_edges << " edges, claim fails " << claim_fail
          << ", lemma fails " << lemma_fail << ", flags";
        for (const auto& [name, c] : flags)
            d << " " << name << "=" << c;
        d << ", undetermined";
        for (const auto& [name, c] : undetermined)
            d << " " << name << "=" << c;
        if (undetermined.empty())
            d << " none";
    }
    o.detail = d.str();
    return o;
}

// 6. Sample means against expected-copies bounds, and exact expectation
// against the subset-weighted oracle.
Outcome expectation()
{
    Outcome o;
    std::ostringstream d;
    const auto a = parse_system("x+y-z=0");
    const auto b = parse_system("x+y+z-w=0");
    EmpiricalOptions opt;
    opt.n = 500;
    opt.p = Rational(1, 50);
    opt.p_text = "0.02";
    opt.trials = 500;
    opt.cap = default_cap(500);
    opt.seed_base = 600;
    std::vector<BoundReport> reports;
    opt.kinds = {PatternKind(PatternTag::BAD_TRIPLE)};
    for (auto& r : empirical_counts(a, a, opt))
        reports.push_back(r);
    opt.kinds = {PatternKind(PatternTag::A_CYCLE, 3), PatternKind(PatternTag::AB_SET)};
    for (auto& r : empirical_counts(a, b, opt))
        reports.push_back(r);
    for (const auto& r : reports) {
        const bool ok = r.truncated_trials == 0 && r.mean <= Rational(6, 5) * r.bound;
        o.pass = o.pass && ok;
        d << r.kind << " mean " << to_decimal_string(to_decimal(r.mean), 4) << " <= 1.2 x "
          << to_decimal_string(to_decimal(r.bound), 4) << (ok ? "" : " FAIL") << "; ";
    }

    struct Exact {
        const LinearSystem* b;
        PatternKind kind;
        int n;
    };
    const Rational p(1, 3);
    for (const Exact& e : {Exact{&a, PatternKind(PatternTag::BAD_TRIPLE), 16},
                           Exact{&b, PatternKind(PatternTag::A_CYCLE, 3), 16},
                           Exact{&b, PatternKind(PatternTag::AB_SET), 12}}) {
        const auto full = build_hypergraph(a, *e.b, explicit_set(e.n, range(e.n)));
        std::set<oracle::EdgeSet> copies;
        if (e.kind.tag == PatternTag::BAD_TRIPLE)
            copies = oracle::brute_bad_triples(full, 0, -1);
        else if (e.kind.tag == PatternTag::A_CYCLE)
            copies = oracle::brute_a_cycles(full, 3);
        else
            copies = oracle::brute_ab_sets(full);
        std::vector<std::uint32_t> masks;
        for (const auto& c : copies)
            masks.push_back(oracle::vertex_mask(full, c));
        const Rational want = oracle::subset_weighted(masks, e.n, p);
        const Rational got = exact_expectation(a, *e.b, e.n, p, e.kind, 3);
        const Decimal rel = want == 0 ? to_decimal(abs(got)) : to_decimal(abs(got - want) / want);
        const bool ok = rel <= Decimal("1e-9") && !copies.empty();
        o.pass = o.pass && ok;
        d << e.kind.label() << " n=" << e.n << " exact " << to_decimal_string(to_decimal(got), 8) << " rel.err "
          << to_decimal_string(rel, 3) << (ok ? "" : " FAIL") << "; ";
    }
    o.detail = d.str();
    return o;
}

// 7. Rado fraction below the threshold decreases along the grid.
Outcome sweep()
{
    Outcome o;
    ExperimentConfig c;
    c.a = "x+y-z=0";
    c.b = "x+y+z-w=0";
    c.n_grid = {1000, 10000, 100000};
    c.c = Rational(1, 10);
    c.exponent = threshold_exponent(3, 4);
    c.trials = 100;
    c.seed_base = 7000;
    std::vector<std::string> errors;
    const auto rows = sweep_rows(c, {1}, &errors);
    std::ostringstream d;
    d << "exponent " << to_string(*c.exponent) << ", fractions";
    Rational prev = 2;
    for (const auto& r : rows) {
        d << " " << r.n << ":" << r.rado_count << "/" << r.trials;
        if (r.rado_fraction() > prev || r.errors)
            o.pass = false;
        prev = r.rado_fraction();
    }
    if (rows.empty() || rows.back().rado_fraction() > Rational(1, 20) || !errors.empty())
        o.pass = false;
    o.detail = d.str();
    return o;
}

// 8. Structure detectors and valid edge orders against brute force.
Outcome structures()
{
    Outcome o;
    int mismatches = 0;
    std::size_t max_edges = 0;
    std::map<std::string, int> present;
    for (const auto& h : agreement::structure_corpus(8080, 100)) {
        max_edges = std::max(max_edges, h.edge_count());
        const auto m = agreement::structure_mismatches(h);
        mismatches += static_cast<int>(m.size());
        for (const auto& x : m)
            std::cerr << "  " << x.kind << ": " << x.detail << "\n";
        for (PatternTag t : {PatternTag::BAD_TRIPLE, PatternTag::PASCH, PatternTag::BAD_TIGHT_PATH, PatternTag::AB_SET,
                             PatternTag::A_CYCLE})
            present[to_string(t)] += detect(h, PatternKind(t), 4) ? 1 : 0;
    }
    std::mt19937_64 rng(8081);
    int order_mismatches = 0;
    for (int i = 0; i < 2000; ++i)
        order_mismatches += agreement::edge_order_agrees(agreement::random_edge_list(rng, 7)) ? 0 : 1;
    o.pass = mismatches == 0 && order_mismatches == 0 && max_edges <= 12;
    std::ostringstream d;
    d << "100 hypergraphs (max " << max_edges << " edges), " << mismatches << " detector mismatches; present:";
    for (const auto& [k, v] : present)
        d << " " << k << "=" << v;
    d << "; 2000 edge lists, " << order_mismatches << " order mismatches";
    o.detail = d.str();
    return o;
}

std::map<std::string, std::string> files_in(const std::filesystem::path& dir)
{
    std::map<std::string, std::string> out;
    for (const auto& f : std::filesystem::directory_iterator(dir)) {
        if (f.path().filename() == "timing.json")
            continue;
        std::ifstream in(f.path(), std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        out[f.path().filename().string()] = s.str();
    }
    return out;
}

// 9. Byte-identical artifacts across reruns and worker counts.
Outcome determinism()
{
    Outcome o;
    const ExperimentConfig c = parse_config_text(R"j({"A": "x+y-z=0", "B": "x+y+z-w=0", "n": "300", "p": "0.15",
        "n_grid": ["100", "300"], "trials": "6", "seed_base": "42", "kinds": ["A_CYCLE(3)", "AB_SET", "BAD_TRIPLE"]})j");
    const auto root = std::filesystem::temp_directory_path() / "rado_acceptance_determinism";
    std::filesystem::remove_all(root);
    std::ostringstream d;
    int files = 0;
    for (const char* cmd : {"params", "sample", "check", "minimal", "audit", "expect", "sweep"}) {
        std::vector<std::map<std::string, std::string>> runs;
        for (const unsigned threads : {1u, 1u, 4u}) {
            const auto dir = root / (std::string(cmd) + "_" + std::to_string(runs.size()));
            write_output(run_command(cmd, c, {threads}), dir.string());
            runs.push_back(files_in(dir));
        }
        files += static_cast<int>(runs[0].size());
        if (runs[0].empty() || runs[0] != runs[1] || runs[0] != runs[2]) {
            o.pass = false;
            d << " " << cmd << " differs;";
        }
    }
    std::filesystem::remove_all(root);
    o.detail = "7 commands x (threads 1, 1, 4), " + std::to_string(files) + " artifacts compared" + d.str();
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact parameter suite", parameters},
        {"solution enumeration vs naive filter", solutions},
        {"is_rado vs exhaustive coloring", colorability},
        {"fixture checks", fixtures},
        {"minimality, claim21 audit and lemma flags", lemmas},
        {"expectation bounds and exact expectation", expectation},
        {"sub-threshold sweep trend", sweep},
        {"structure detectors and edge orders vs brute force", structures},
        {"determinism across reruns and thread counts", determinism},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(id))
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.pass;
        std::printf("criterion %d %s: %s | %s | %.2f s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
