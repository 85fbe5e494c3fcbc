#include "wh3/algebra_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace wh3 {

nlohmann::ordered_json presentation_to_json(const Presentation& p) {
    nlohmann::ordered_json j;
    j["name"] = p.name;
    auto gens = nlohmann::ordered_json::array();
    auto order = nlohmann::ordered_json::array();
    for (const auto& g : p.alphabet.generators()) {
        nlohmann::ordered_json gj;
        gj["name"] = g.name;
        gj["parity"] = g.parity == Parity::odd ? "odd" : "even";
        gj["rank"] = g.rank;
        gj["weight"] = g.weight;
        gens.push_back(std::move(gj));
        order.push_back(g.name);
    }
    j["generators"] = std::move(gens);
    auto rels = nlohmann::ordered_json::array();
    for (const auto& r : p.relations) rels.push_back(r.to_string(p.alphabet));
    j["relations"] = std::move(rels);
    j["order"] = std::move(order);
    return j;
}

Presentation presentation_from_json(const nlohmann::json& j) {
    try {
        Presentation p;
        p.name = j.value("name", std::string("algebra"));
        std::vector<Generator> gens;
        for (const auto& gj : j.at("generators")) {
            Generator g;
            g.name = gj.at("name").get<std::string>();
            const std::string parity = gj.value("parity", std::string("even"));
            if (parity != "even" && parity != "odd")
                throw PresentationError("generator " + g.name + ": parity must be even or odd");
            g.parity = parity == "odd" ? Parity::odd : Parity::even;
            g.rank = gj.value("rank", static_cast<int>(gens.size()));
            g.weight = gj.value("weight", 0);
            gens.push_back(std::move(g));
        }
        if (j.contains("order")) {
            std::map<std::string, int> rank;
            for (const auto& n : j.at("order")) rank.emplace(n.get<std::string>(), static_cast<int>(rank.size()));
            if (rank.size() != gens.size()) throw PresentationError("order must list every generator once");
            for (auto& g : gens) {
                auto it = rank.find(g.name);
                if (it == rank.end()) throw PresentationError("order does not list " + g.name);
                g.rank = it->second;
            }
        }
        p.alphabet = Alphabet(std::move(gens));
        for (const auto& r : j.at("relations")) p.relations.push_back(parse_element(r.get<std::string>(), p.alphabet));
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw PresentationError(std::string("malformed algebra file: ") + e.what());
    }
}

Presentation read_algebra_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw PresentationError("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw PresentationError(path.string() + ": " + e.what());
    }
    return presentation_from_json(j);
}

void write_algebra_file(const std::filesystem::path& path, const Presentation& p) {
    std::ofstream out(path);
    if (!out) throw PresentationError("cannot write " + path.string());
    out << presentation_to_json(p).dump(2) << "\n";
}

}  // namespace wh3
