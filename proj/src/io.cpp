#include "hk/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hk {

using nlohmann::json;

namespace {

std::vector<std::pair<int, int>> edges_from(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edges must be pairs [i,j]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return edges;
}

} // namespace

Graph graph_from_json(const std::string& text) {
    json j = json::parse(text);
    return Graph(j.at("vertices").get<int>(), edges_from(j));
}

Quiver quiver_from_json(const std::string& text) {
    json j = json::parse(text);
    int r = j.at("vertices").get<int>();
    std::vector<long> v, w;
    if (j.contains("v")) v = j["v"].get<std::vector<long>>();
    if (j.contains("w")) w = j["w"].get<std::vector<long>>();
    return Quiver(r, edges_from(j), std::move(v), std::move(w));
}

std::string betti_to_json(const BettiPoly& p) {
    json j;
    j["family"] = p.family;
    json params = json::object();
    for (auto& [k, v] : p.params) params[k] = v;
    j["params"] = params;
    j["dim_shift"] = p.dim_shift;
    std::vector<std::string> coeffs;
    coeffs.reserve(p.coeffs.size());
    for (auto& c : p.coeffs) coeffs.push_back(to_decimal(c));
    j["coefficients"] = coeffs;
    return j.dump(2) + "\n";
}

std::string betti_to_csv(const BettiPoly& p) {
    std::ostringstream os;
    os << "degree,coefficient\n";
    for (size_t i = 0; i < p.coeffs.size(); ++i)
        if (p.coeffs[i] != 0) os << i << "," << to_decimal(p.coeffs[i]) << "\n";
    return os.str();
}

std::string laurent_to_csv(const UniLaurent& a) {
    std::ostringstream os;
    os << "degree,coefficient\n";
    for (auto& [e, c] : a.terms()) {
        check(c.get_den() == 1, "laurent_to_csv: non-integer coefficient");
        os << e << "," << c.get_num().get_str() << "\n";
    }
    return os.str();
}

std::string laurent_to_json(const UniLaurent& a, const std::string& family,
                            const std::map<std::string, long>& params) {
    json j;
    j["family"] = family;
    json pj = json::object();
    for (auto& [k, v] : params) pj[k] = v;
    j["params"] = pj;
    json terms = json::object();
    for (auto& [e, c] : a.terms()) {
        check(c.get_den() == 1, "laurent_to_json: non-integer coefficient");
        terms[std::to_string(e)] = c.get_num().get_str();
    }
    j["terms"] = terms;
    return j.dump(2) + "\n";
}

UniLaurent laurent_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    UniLaurent out("q");
    bool first = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == "degree,coefficient") continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("CSV row without a comma: " + line);
        long deg = std::stol(line.substr(0, comma));
        ExactInt c(line.substr(comma + 1), 10);
        out.add_term(deg, ExactRat(c));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

} // namespace hk
