#include "treelab/report.hpp"

#include <json.hpp>

#include <stdexcept>

namespace treelab {

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        j["rows"].push_back({{"case", r.case_name},
                             {"lhs", r.lhs},
                             {"rhs", r.rhs},
                             {"relation", r.relation},
                             {"pass", r.pass}});
    }
    j["pass"] = pass();
    return j.dump(2) + "\n";
}

std::string Report::to_tsv() const {
    std::string out = "case\tlhs\trhs\trelation\tpass\n";
    for (const auto& r : rows)
        out += r.case_name + "\t" + r.lhs + "\t" + r.rhs + "\t" + r.relation + "\t" +
               (r.pass ? "true" : "false") + "\n";
    return out;
}

std::string Report::render(const std::string& format) const {
    if (format == "json") return to_json();
    if (format == "tsv") return to_tsv();
    throw std::invalid_argument("unknown report format: " + format);
}

} // namespace treelab
