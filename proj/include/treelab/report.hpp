#pragma once

#include <map>
#include <string>
#include <vector>

namespace treelab {

/// One asserted comparison: both sides rendered exactly (rationals or
/// counts, never decimals).
struct ReportRow {
    std::string case_name;
    std::string lhs;
    std::string rhs;
    std::string relation; // "<=", "<", "==", ...
    bool pass = false;
};

/// Machine-readable verification report. Rows keep insertion order, which is
/// deterministic given (config, seed).
struct Report {
    std::string command;
    std::map<std::string, std::string> params;
    std::vector<ReportRow> rows;

    void add(std::string case_name, std::string lhs, std::string rhs,
             std::string relation, bool pass) {
        rows.push_back({std::move(case_name), std::move(lhs), std::move(rhs),
                        std::move(relation), pass});
    }

    bool pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }

    std::string to_json() const;
    std::string to_tsv() const;
    std::string render(const std::string& format) const; // "json" | "tsv"
};

} // namespace treelab
