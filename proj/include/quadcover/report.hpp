#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadcover/bicanonical.hpp"
#include "quadcover/canonical_ring.hpp"
#include "quadcover/cover_types.hpp"

#include <json.hpp>

// Table artifacts reproducing the classification, the bicanonical-map
// degrees and the canonical-ring generator counts over a parameter grid.
// Every row is recomputed from the splitting machinery and compared against
// the closed-form expected value; the PASS column records the comparison.

namespace quadcover {

struct RunConfig {
    int m_max = 12;
    int n_max = 5;
    std::optional<TypeId> type_filter;
    std::string format = "text";  // text, csv, json, latex
    bool oracle = false;
};

struct TableRow {
    std::vector<std::string> cells;
    bool pass = true;
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::string> latex_columns;  // column subset/order for LaTeX
    std::vector<TableRow> rows;

    bool all_pass() const;
};

Table classification_table(const RunConfig& config);
Table bicanonical_table(const RunConfig& config);
Table generators_table(const RunConfig& config);

std::string to_text(const Table& table);
std::string to_csv(const Table& table);
std::string to_latex(const Table& table);
nlohmann::json to_json(const Table& table, const RunConfig& config);

// Minimal CSV reader for round-tripping emitted tables.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

// Documented JSON shape of one cover: type, parameters, group, branch
// classes, splitting summands with characters, invariants.
nlohmann::json descriptor_json(const CoverDescriptor& c);

nlohmann::json divisor_json(const DivisorClass& d);

}  // namespace quadcover
