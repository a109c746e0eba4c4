#include "rado/harness.hpp"

#include "rado/colorability.hpp"
#include "rado/errors.hpp"
#include "rado/expectation.hpp"
#include "rado/parallel.hpp"
#include "rado/params.hpp"
#include "rado/solutions.hpp"
#include "rado/structures.hpp"
#include "rado/svg.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace rado {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string fixed(const Rational& r, int digits)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << to_decimal(r);
    return out.str();
}

long long single_n(const ExperimentConfig& c)
{
    if (c.n)
        return *c.n;
    if (!c.n_grid.empty())
        return c.n_grid.front();
    if (c.set && !c.set->empty())
        return *std::max_element(c.set->begin(), c.set->end());
    throw ConfigError("config needs 'n' (or 'n_grid' or 'set')");
}

LinearSystem parse_config_system(const std::string& text)
{
    try {
        return parse_system(text);
    } catch (const ParseError& e) {
        throw ConfigError("cannot parse equation '" + text + "': " + e.what());
    }
}

std::vector<PatternKind> config_kinds(const ExperimentConfig& c)
{
    std::vector<PatternKind> out;
    for (const auto& k : c.kinds) {
        try {
            out.push_back(parse_pattern_kind(k));
        } catch (const ParseError& e) {
            throw ConfigError("cannot parse kind '" + k + "': " + e.what());
        }
    }
    return out;
}

nlohmann::json coloring_json(const Coloring& c)
{
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        a.push_back({c.vertices[i], c.colors[i] == Color::red ? "red" : "blue"});
    return a;
}

nlohmann::json irredundancy_json(const Irredundancy& r)
{
    return {{"verdict", to_string(r.verdict)}, {"witness", r.witness}, {"bound", r.bound}, {"reason", r.reason}};
}

nlohmann::json system_report(const LinearSystem& sys, long long irr_bound)
{
    nlohmann::json j;
    j["system"] = to_string(sys);
    j["k"] = sys.cols();
    j["l"] = sys.rows();
    IrredundancyOptions opt;
    opt.bound = irr_bound;
    const Classification cl = classify(sys, opt);
    j["partition_regular"] = to_string(cl.partition_regular);
    j["property_star"] = cl.property_star;
    j["full_rank"] = cl.full_rank;
    j["irredundant"] = irredundancy_json(cl.irredundant);
    j["underlying_irredundant"] = irredundancy_json(cl.underlying_irredundant);
    try {
        const MResult m = m_of(sys.matrix);
        j["m"] = to_string(m.value);
        j["m_argmax"] = format_set(m.argmax.W);
    } catch (const PreconditionError& e) {
        j["m"] = nullptr;
        j["m_error"] = e.what();
    }
    try {
        const BalanceResult b = strictly_balanced(sys.matrix);
        j["strictly_balanced"] = b.balanced;
        if (b.violating)
            j["balance_violation"] = format_set(*b.violating);
    } catch (const PreconditionError& e) {
        j["strictly_balanced"] = nullptr;
        j["balance_error"] = e.what();
    }
    try {
        const CoreResult core = core_of(sys.matrix, opt);
        nlohmann::json cj;
        cj["found"] = core.found;
        if (core.found) {
            cj["matrix"] = to_string(core.core);
            cj["deleted_rows"] = core.deleted_rows;
            cj["deleted_cols"] = core.deleted_cols;
            cj["m"] = to_string(core.m);
        }
        j["core"] = cj;
    } catch (const PreconditionError& e) {
        j["core"] = {{"found", false}, {"error", e.what()}};
    }
    return j;
}

}  // namespace

const Artifact* CommandOutput::find(const std::string& name) const
{
    for (const auto& a : artifacts)
        if (a.name == name)
            return &a;
    return nullptr;
}

ResolvedPair resolve_pair(const ExperimentConfig& config)
{
    ResolvedPair r;
    if (!config.equations.empty()) {
        std::vector<std::pair<std::string, Rational>> items;
        for (const auto& e : config.equations)
            items.emplace_back(e, m_of(parse_config_system(e).matrix).value);
        if (config.order_by_m)
            std::stable_sort(items.begin(), items.end(),
                             [](const auto& x, const auto& y) { return x.second > y.second; });
        r.ordering = items;
        r.a_text = items[0].first;
        r.b_text = items[1].first;
    } else {
        if (config.a.empty())
            throw ConfigError("config needs 'A' or 'equations'");
        r.a_text = config.a;
        r.b_text = config.b.empty() ? config.a : config.b;
    }
    r.a = parse_config_system(r.a_text);
    r.b = parse_config_system(r.b_text);
    r.same = r.a.matrix == r.b.matrix && r.a.rhs == r.b.rhs;
    return r;
}

Rational pair_exponent(const ResolvedPair& pair)
{
    const Rational m = pair.same ? m_of(pair.a.matrix).value : m_asym(pair.a.matrix, pair.b.matrix).value;
    return 1 / m;
}

Rational probability_for(const ExperimentConfig& config, const ResolvedPair& pair, long long n)
{
    if (config.p)
        return *config.p;
    if (config.c == 0)
        return 0;
    const Rational e = config.exponent ? *config.exponent : pair_exponent(pair);
    Rational p;
    if (e == 0)
        p = config.c;
    else
        p = decimal_to_rational(to_decimal(config.c) * pow_rational(Rational(n), -e));
    if (p > 1)
        throw PreconditionError("p = c n^-e = " + to_string(p) + " exceeds 1 at n = " + std::to_string(n));
    return p;
}

int cap_for(const ExperimentConfig& config, long long n) { return config.cap ? *config.cap : default_cap(n); }

SampledSet set_for(const ExperimentConfig& config, const ResolvedPair& pair)
{
    const long long n = single_n(config);
    if (config.set)
        return explicit_set(n, *config.set);
    return sample_set(n, probability_for(config, pair, n), config.seed_base);
}

Hypergraph hypergraph_for(const ExperimentConfig& config, const ResolvedPair& pair)
{
    if (!config.input.empty()) {
        std::ifstream in(config.input, std::ios::binary);
        if (!in)
            throw ConfigError("cannot read input hypergraph " + config.input);
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            const auto doc = nlohmann::json::parse(text);
            return hypergraph_from_json(doc.contains("hypergraph") ? doc.at("hypergraph") : doc);
        }
        return parse_hypergraph_text(text);
    }
    return build_hypergraph(pair.a, pair.b, set_for(config, pair));
}

nlohmann::json provenance(const ExperimentConfig& config, const std::string& command)
{
    return {{"tool", "rado"},
            {"version", kToolVersion},
            {"command", command},
            {"stream", kStreamName},
            {"config", config.to_json()}};
}

CommandOutput cmd_params(const ExperimentConfig& config)
{
    const auto t0 = Clock::now();
    const ResolvedPair pair = resolve_pair(config);
    nlohmann::json doc;
    doc["provenance"] = provenance(config, "params");
    doc["A"] = system_report(pair.a, config.irredundancy_bound);
    if (!pair.same)
        doc["B"] = system_report(pair.b, config.irredundancy_bound);
    if (!pair.ordering.empty()) {
        nlohmann::json ord = nlohmann::json::array();
        for (const auto& [lit, m] : pair.ordering)
            ord.push_back({{"system", lit}, {"m", to_string(m)}});
        doc["ordering"] = ord;
    }
    std::ostringstream sum;
    sum << "A: " << to_string(pair.a) << "\n";
    if (!pair.same)
        sum << "B: " << to_string(pair.b) << "\n";
    try {
        const MResult m = pair.same ? m_of(pair.a.matrix) : m_asym(pair.a.matrix, pair.b.matrix);
        doc["m_AB"] = to_string(m.value);
        doc["m_AB_argmax"] = format_set(m.argmax.W);
        doc["exponent"] = to_string(1 / m.value);
        sum << "m(A,B) = " << to_string(m.value) << "\nthreshold exponent = " << to_string(1 / m.value) << "\n";
    } catch (const PreconditionError& e) {
        doc["m_AB"] = nullptr;
        doc["m_AB_error"] = e.what();
        sum << "m(A,B): " << e.what() << "\n";
    }
    for (const char* key : {"A", "B"}) {
        if (!doc.contains(key))
            continue;
        const auto& r = doc[key];
        sum << key << ": k=" << r["k"].get<std::size_t>() << " l=" << r["l"].get<std::size_t>()
            << " partition_regular=" << r["partition_regular"].get<std::string>()
            << " property_star=" << (r["property_star"].get<bool>() ? "yes" : "no")
            << " irredundant=" << r["irredundant"]["verdict"].get<std::string>()
            << " m=" << (r["m"].is_null() ? std::string("n/a") : r["m"].get<std::string>()) << " strictly_balanced="
            << (r["strictly_balanced"].is_null() ? std::string("n/a")
                                                 : r["strictly_balanced"].get<bool>() ? "yes" : "no")
            << "\n";
    }
    CommandOutput out;
    out.artifacts.push_back({"params.json", dump(doc)});
    out.summary = sum.str();
    out.timing["params_seconds"] = seconds_since(t0);
    return out;
}

CommandOutput cmd_sample(const ExperimentConfig& config, const RunOptions&)
{
    const auto t0 = Clock::now();
    const ResolvedPair pair = resolve_pair(config);
    const SampledSet set = set_for(config, pair);
    const Hypergraph h = build_hypergraph(pair.a, pair.b, set);
    nlohmann::json prov = provenance(config, "sample");
    prov["n"] = set.n;
    prov["p"] = set.p_text;
    prov["seed"] = set.seed;
    nlohmann::json doc;
    doc["provenance"] = prov;
    doc["set"] = set.members;
    doc["hypergraph"] = h.to_json();
    CommandOutput out;
    out.artifacts.push_back({"hypergraph.json", dump(doc)});
    out.artifacts.push_back({"hypergraph.txt", h.to_text()});
    out.summary = "sampled |S| = " + std::to_string(set.members.size()) + ", " + std::to_string(h.vertex_count()) +
                  " vertices, " + std::to_string(h.edge_count()) + " edges\n";
    out.timing["sample_seconds"] = seconds_since(t0);
    return out;
}

CommandOutput cmd_check(const ExperimentConfig& config, const RunOptions&)
{
    const auto t0 = Clock::now();
    const ResolvedPair pair = resolve_pair(config);
    const Hypergraph h = hypergraph_for(config, pair);
    const RadoVerdict v = is_rado(h);
    nlohmann::json doc;
    doc["provenance"] = provenance(config, "check");
    doc["vertices"] = h.vertex_count();
    doc["edges"] = h.edge_count();
    doc["is_rado"] = v.is_rado;
    doc["witness"] = v.witness ? coloring_json(*v.witness) : nlohmann::json(nullptr);
    if (v.witness)
        doc["witness_verified"] = is_good_coloring(h, *v.witness);
    doc["solver"] = {{"nodes", v.stats.nodes}, {"propagations", v.stats.propagations}, {"pure", v.stats.pure}};
    CommandOutput out;
    out.artifacts.push_back({"verdict.json", dump(doc)});
    out.summary = std::string(v.is_rado ? "Rado" : "not Rado") + " (" + std::to_string(h.vertex_count()) +
                  " vertices, " + std::to_string(h.edge_count()) + " edges)\n";
    out.timing["check_seconds"] = seconds_since(t0);
    return out;
}

CommandOutput cmd_minimal(const ExperimentConfig& config, const RunOptions&)
{
    const auto t0 = Clock::now();
    const ResolvedPair pair = resolve_pair(config);
    const Hypergraph g = hypergraph_for(config, pair);
    MinimalStats stats;
    const Hypergraph h = rado_minimal(g, &stats);
    nlohmann::json doc;
    doc["provenance"] = provenance(config, "minimal");
    doc["source"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    doc["rado"] = !h.empty();
    doc["minimal"] = h.to_json();
    doc["solver_calls"] = stats.solver_calls;
    doc["claim21"] = audit_claim21(h).to_json();
    CommandOutput out;
    out.artifacts.push_back({"minimal.json", dump(doc)});
    out.artifacts.push_back({"minimal.txt", h.to_text()});
    out.summary = h.empty() ? std::string("not Rado; minimal subgraph is empty\n")
                            : "Rado-minimal subgraph: " + std::to_string(h.edge_count()) + " edges\n";
    out.timing["minimal_seconds"] = seconds_since(t0);
    return out;
}

CommandOutput cmd_audit(const ExperimentConfig& config, const RunOptions&)
{
    const auto t0 = Clock::now();
    const ResolvedPair pair = resolve_pair(config);
    const Hypergraph g = hypergraph_for(config, pair);
    const Hypergraph h = rado_minimal(g);
    const long long n = config.input.empty() ? single_n(config) : std::max<long long>(1, g.provenance().n);
    const int cap = cap_for(config, n);
    nlohmann::json doc;
    doc["provenance"] = provenance(config, "audit");
    doc["cap"] = cap;
    doc["minimal"] = h.to_json();
    doc["vacuous"] = h.empty();
    const Claim21Report c21 = audit_claim21(h);
    doc["claim21"] = c21.to_json();
    std::ostringstream sum;
    sum << "minimal edges: " << h.edge_count() << (h.empty() ? " (vacuous)" : "") << "\n";
    sum << "claim21 " << (c21.pass ? "pass" : "FAIL") << "\n";
    auto lemma = [&](const char* key, const LemmaReport& r) {
        doc[key] = r.to_json(h);
        sum << key << ": ";
        if (!r.precondition_ok) {
            sum << "not applicable (" << r.precondition << ")\n";
            return;
        }
        bool first = true;
        for (const auto& [name, m] : r.cases)
            if (m) {
                sum << (first ? "" : " ") << name;
                first = false;
            }
        sum << (first ? "none" : "");
        for (std::size_t i = 0; i < r.undetermined.size(); ++i)
            sum << (i ? " " : " (undetermined within the node limit: ") << r.undetermined[i];
        sum << (r.undetermined.empty() ? "" : ")") << "\n";
    };
    if (!h.empty() && h.k_a() < h.k_b()) {
        lemma("lemma22", audit_lemma22(h, cap));
        doc["trees"] = audit_tree_claims(h, cap).to_json();
        try {
            doc["explore"] = iterative_explore(h, cap).to_json(h);
        } catch (const Error& e) {
            doc["explore"] = {{"error", e.what()}};
        }
    } else if (!h.empty() && h.k_a() == h.k_b()) {
        lemma("lemma33", audit_lemma33(h, cap));
    } else if (h.empty()) {
        sum << "no structure audit on an empty hypergraph\n";
    }
    CommandOutput out;
    out.artifacts.push_back({"audit.json", dump(doc)});
    out.summary = sum.str();
    out.timing["audit_seconds"] = seconds_since(t0);
    return out;
}

CommandOutput cmd_expect(const ExperimentConfig& config, const RunOptions& options)
{
    const auto t0 = Clock::now();
    const ResolvedPair pair = resolve_pair(config);
    const long long n = single_n(config);
    EmpiricalOptions eo;
    eo.n = n;
    eo.p = probability_for(config, pair, n);
    eo.p_text = to_string(eo.p);
    eo.seed_base = config.seed_base;
    eo.trials = config.trials;
    eo.kinds = config_kinds(config);
    if (eo.kinds.empty())
        throw ConfigError("'expect' needs 'kinds'");
    eo.cap = cap_for(config, n);
    eo.limit = config.count_limit;
    eo.threads = options.threads;
    const auto reports = empirical_counts(pair.a, pair.b, eo);
    std::string csv = bound_csv_header();
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream sum;
    for (const auto& r : reports) {
        csv += r.csv_row();
        rows.push_back(r.to_json());
        sum << r.kind << ": mean " << fixed(r.mean, 6) << " bound " << fixed(r.bound, 6)
            << (r.truncated_trials ? " (truncated trials excluded)" : "") << "\n";
    }
    CommandOutput out;
    out.artifacts.push_back({"expect.csv", csv});
    out.artifacts.push_back({"expect.json", dump({{"provenance", provenance(config, "expect")}, {"reports", rows}})});
    out.summary = sum.str();
    out.timing["expect_seconds"] = seconds_since(t0);
    return out;
}

std::vector<SweepRow> sweep_rows(const ExperimentConfig& config, const RunOptions& options,
                                 std::vector<std::string>* errors)
{
    const ResolvedPair pair = resolve_pair(config);
    std::vector<long long> grid = config.n_grid;
    if (grid.empty())
        grid.push_back(single_n(config));
    const auto kinds = config_kinds(config);
    const std::size_t trials = static_cast<std::size_t>(config.trials);
    std::vector<SweepRow> rows;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        const auto t0 = Clock::now();
        SweepRow row;
        row.n = grid[g];
        row.p = probability_for(config, pair, row.n);
        row.trials = config.trials;
        const int cap = cap_for(config, row.n);
        struct Trial {
            bool rado = false;
            std::string error;
            std::vector<CountResult> counts;
        };
        std::vector<Trial> out(trials);
        parallel_for(trials, options.threads, [&](std::size_t t) {
            try {
                const SampledSet s = sample_set(row.n, row.p, config.seed_base + g * trials + t);
                const Hypergraph h = build_hypergraph(pair.a, pair.b, s);
                out[t].rado = is_rado(h).is_rado;
                for (const auto& k : kinds)
                    out[t].counts.push_back(count(h, k, cap, config.count_limit));
            } catch (const std::exception& e) {
                out[t].error = e.what();
            }
        });
        std::vector<Integer> totals(kinds.size());
        std::vector<int> used(kinds.size(), 0);
        for (std::size_t t = 0; t < trials; ++t) {
            if (!out[t].error.empty()) {
                ++row.errors;
                if (errors)
                    errors->push_back("n=" + std::to_string(row.n) + " trial " + std::to_string(t) + ": " +
                                      out[t].error);
                continue;
            }
            row.rado_count += out[t].rado ? 1 : 0;
            for (std::size_t i = 0; i < kinds.size(); ++i)
                if (!out[t].counts[i].truncated) {
                    totals[i] += out[t].counts[i].count;
                    ++used[i];
                }
        }
        for (std::size_t i = 0; i < kinds.size(); ++i)
            row.mean_counts.push_back(used[i] ? Rational(totals[i]) / used[i] : Rational(0));
        row.wall_seconds = seconds_since(t0);
        rows.push_back(std::move(row));
    }
    return rows;
}

CommandOutput cmd_sweep(const ExperimentConfig& config, const RunOptions& options)
{
    const auto t0 = Clock::now();
    std::vector<std::string> errors;
    const auto rows = sweep_rows(config, options, &errors);
    const auto kinds = config_kinds(config);
    std::ostringstream csv, dat;
    csv << "# schema=1\n"
        << "n,p,trials,rado_count,rado_fraction,errors";
    for (const auto& k : kinds)
        csv << "," << csv_field("mean_" + k.label());
    csv << "\n";
    dat << "# schema=1\n# n rado_fraction\n";
    std::vector<PlotPoint> pts;
    nlohmann::json timing_rows = nlohmann::json::array();
    for (const auto& r : rows) {
        const Rational f = r.rado_fraction();
        csv << r.n << "," << to_string(r.p) << "," << r.trials << "," << r.rado_count << "," << fixed(f, 6) << ","
            << r.errors;
        for (const auto& m : r.mean_counts)
            csv << "," << to_string(m);
        csv << "\n";
        dat << r.n << " " << fixed(f, 6) << "\n";
        pts.push_back({static_cast<double>(r.n), to_decimal(f).convert_to<double>()});
        timing_rows.push_back({{"n", r.n}, {"wall_seconds", r.wall_seconds}});
    }
    CommandOutput out;
    out.artifacts.push_back({"sweep.csv", csv.str()});
    out.artifacts.push_back({"sweep.dat", dat.str()});
    out.artifacts.push_back({"sweep.svg", render_log_x_plot(pts, "P[(A,B)-Rado] along the sweep", "n", "rado fraction")});
    nlohmann::json err = errors;
    out.artifacts.push_back({"sweep.json", dump({{"provenance", provenance(config, "sweep")}, {"errors", err}})});
    std::ostringstream sum;
    for (const auto& r : rows)
        sum << "n=" << r.n << " p=" << fixed(r.p, 8) << " rado " << r.rado_count << "/" << r.trials << " errors "
            << r.errors << "\n";
    out.summary = sum.str();
    out.exit_code = errors.empty() ? kExitOk : kExitPartial;
    out.timing["rows"] = timing_rows;
    out.timing["sweep_seconds"] = seconds_since(t0);
    out.timing["threads"] = options.threads;
    return out;
}

CommandOutput run_command(const std::string& name, const ExperimentConfig& config, const RunOptions& options)
{
    if (name == "params")
        return cmd_params(config);
    if (name == "sample")
        return cmd_sample(config, options);
    if (name == "check")
        return cmd_check(config, options);
    if (name == "minimal")
        return cmd_minimal(config, options);
    if (name == "audit")
        return cmd_audit(config, options);
    if (name == "expect")
        return cmd_expect(config, options);
    if (name == "sweep")
        return cmd_sweep(config, options);
    throw ConfigError("unknown command '" + name + "'");
}

void write_output(const CommandOutput& output, const std::string& dir)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw Error("cannot create output directory " + dir + ": " + ec.message());
    auto write = [&](const std::string& name, const std::string& content) {
        const fs::path path = fs::path(dir) / name;
        std::ofstream f(path, std::ios::binary);
        if (!f || !(f << content))
            throw Error("cannot write " + path.string());
    };
    for (const auto& a : output.artifacts)
        write(a.name, a.content);
    write("timing.json", dump(output.timing));
}

}  // namespace rado
