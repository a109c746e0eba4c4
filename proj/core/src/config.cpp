#include "rado/config.hpp"

#include "rado/errors.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace rado {

namespace {

const std::set<std::string>& known_keys()
{
    static const std::set<std::string> keys = {
        "A",     "B",     "equations", "order_by_m", "n",    "n_grid", "p",                  "c",
        "exponent", "trials", "seed_base", "cap", "kinds", "set", "input", "irredundancy_bound",
        "count_limit", "out"};
    return keys;
}

std::string scalar(const nlohmann::json& doc, const std::string& key)
{
    const auto& v = doc.at(key);
    if (!v.is_string())
        throw ConfigError("config key '" + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<std::string> list(const nlohmann::json& doc, const std::string& key)
{
    const auto& v = doc.at(key);
    if (!v.is_array())
        throw ConfigError("config key '" + key + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& x : v) {
        if (!x.is_string())
            throw ConfigError("config key '" + key + "' must be an array of strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

Rational number(const std::string& key, const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw ConfigError("config key '" + key + "': " + e.what());
    }
}

long long integer(const std::string& key, const std::string& text, long long lo)
{
    const Rational r = number(key, text);
    if (!is_integer(r))
        throw ConfigError("config key '" + key + "' must be an integer, got '" + text + "'");
    if (r < lo || r > Rational(std::numeric_limits<long long>::max()))
        throw ConfigError("config key '" + key + "' out of range: " + text);
    return boost::multiprecision::numerator(r).convert_to<long long>();
}

std::uint64_t unsigned64(const std::string& key, const std::string& text)
{
    const Rational r = number(key, text);
    if (!is_integer(r) || r < 0 || r > Rational(Integer(std::numeric_limits<std::uint64_t>::max())))
        throw ConfigError("config key '" + key + "' must be an integer in [0, 2^64)");
    return boost::multiprecision::numerator(r).convert_to<std::uint64_t>();
}

}  // namespace

ExperimentConfig parse_config(const nlohmann::json& doc)
{
    if (!doc.is_object())
        throw ConfigError("config must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (!known_keys().count(key))
            throw ConfigError("unknown config key '" + key + "'");

    ExperimentConfig c;
    if (doc.contains("A"))
        c.a = scalar(doc, "A");
    if (doc.contains("B"))
        c.b = scalar(doc, "B");
    if (doc.contains("equations"))
        c.equations = list(doc, "equations");
    if (doc.contains("order_by_m")) {
        const std::string v = scalar(doc, "order_by_m");
        if (v != "true" && v != "false")
            throw ConfigError("config key 'order_by_m' must be \"true\" or \"false\"");
        c.order_by_m = v == "true";
    }
    if (!c.equations.empty() && !c.a.empty())
        throw ConfigError("give either 'A'/'B' or 'equations', not both");
    if (!c.equations.empty() && c.equations.size() < 2)
        throw ConfigError("'equations' needs at least two systems");
    if (!c.b.empty() && c.a.empty())
        throw ConfigError("'B' given without 'A'");

    if (doc.contains("n"))
        c.n = integer("n", scalar(doc, "n"), 1);
    if (doc.contains("n_grid")) {
        for (const auto& s : list(doc, "n_grid"))
            c.n_grid.push_back(integer("n_grid", s, 1));
        if (c.n_grid.empty())
            throw ConfigError("'n_grid' must not be empty");
        if (!std::is_sorted(c.n_grid.begin(), c.n_grid.end()) ||
            std::adjacent_find(c.n_grid.begin(), c.n_grid.end()) != c.n_grid.end())
            throw ConfigError("'n_grid' must be strictly ascending");
    }
    if (doc.contains("p")) {
        c.p = number("p", scalar(doc, "p"));
        if (*c.p < 0 || *c.p > 1)
            throw ConfigError("'p' must lie in [0,1]");
    }
    if (doc.contains("c")) {
        c.c = number("c", scalar(doc, "c"));
        if (c.c < 0)
            throw ConfigError("'c' must be non-negative");
    }
    if (doc.contains("exponent")) {
        const std::string e = scalar(doc, "exponent");
        if (e != "auto")
            c.exponent = number("exponent", e);
    }
    if (doc.contains("trials"))
        c.trials = static_cast<int>(integer("trials", scalar(doc, "trials"), 1));
    if (doc.contains("seed_base"))
        c.seed_base = unsigned64("seed_base", scalar(doc, "seed_base"));
    if (doc.contains("cap")) {
        const std::string v = scalar(doc, "cap");
        if (v != "auto")
            c.cap = static_cast<int>(integer("cap", v, 1));
    }
    if (doc.contains("kinds"))
        c.kinds = list(doc, "kinds");
    if (doc.contains("set")) {
        std::vector<long long> s;
        for (const auto& x : list(doc, "set"))
            s.push_back(integer("set", x, 1));
        c.set = s;
    }
    if (doc.contains("input"))
        c.input = scalar(doc, "input");
    if (doc.contains("irredundancy_bound"))
        c.irredundancy_bound = integer("irredundancy_bound", scalar(doc, "irredundancy_bound"), 1);
    if (doc.contains("count_limit"))
        c.count_limit = static_cast<std::size_t>(integer("count_limit", scalar(doc, "count_limit"), 1));
    if (doc.contains("out"))
        c.out = scalar(doc, "out");
    return c;
}

ExperimentConfig parse_config_text(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(doc);
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

nlohmann::json ExperimentConfig::to_json() const
{
    nlohmann::json j = nlohmann::json::object();
    auto strings = [](const auto& xs) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& x : xs)
            a.push_back(std::to_string(x));
        return a;
    };
    if (!a.empty())
        j["A"] = a;
    if (!b.empty())
        j["B"] = b;
    if (!equations.empty()) {
        j["equations"] = equations;
        j["order_by_m"] = order_by_m ? "true" : "false";
    }
    if (n)
        j["n"] = std::to_string(*n);
    if (!n_grid.empty())
        j["n_grid"] = strings(n_grid);
    if (p)
        j["p"] = to_string(*p);
    j["c"] = to_string(c);
    j["exponent"] = exponent ? to_string(*exponent) : "auto";
    j["trials"] = std::to_string(trials);
    j["seed_base"] = std::to_string(seed_base);
    j["cap"] = cap ? std::to_string(*cap) : "auto";
    if (!kinds.empty())
        j["kinds"] = kinds;
    if (set)
        j["set"] = strings(*set);
    if (!input.empty())
        j["input"] = input;
    j["irredundancy_bound"] = std::to_string(irredundancy_bound);
    j["count_limit"] = std::to_string(count_limit);
    return j;
}

}  // namespace rado
