#include "quadcover/report.hpp"

#include <algorithm>
#include <sstream>

namespace quadcover {

bool Table::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.pass; });
}

namespace {

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::vector<CoverDescriptor> grid(const RunConfig& config) {
    std::vector<CoverDescriptor> covers = all_covers(config.m_max);
    if (config.type_filter) {
        std::erase_if(covers,
                      [&](const CoverDescriptor& c) { return c.type != *config.type_filter; });
    }
    return covers;
}

std::string m_cell(const CoverDescriptor& c) {
    return has_m_parameter(c.type) ? std::to_string(c.m) : "-";
}

std::string e_cell(const CoverDescriptor& c) {
    return has_e_parameter(c.type) ? std::to_string(c.e) : "-";
}

std::string branch_cell(const CoverDescriptor& c, const DivisorClass& d) {
    if (c.singular_base) return "-";
    if (d.on_plane && d.a == 2) return "conic";
    if (d.on_plane && d.a == 4) return "quartic";
    return d.str();
}

}  // namespace

Table classification_table(const RunConfig& config) {
    Table table;
    table.name = "classification";
    table.columns = {"Type", "m", "e",   "W",          "G", "D1",         "D2",
                     "p_g",  "q", "K^2", "p_g(table)", "q(table)", "status"};
    table.latex_columns = {"Type", "W", "p_g", "G", "D1", "D2", "q"};
    for (const CoverDescriptor& c : grid(config)) {
        const SurfaceInvariants computed = invariants(c);
        const SurfaceInvariants expected = expected_invariants(c.type, c.m, c.e);
        const bool pass = computed.p_g == expected.p_g && computed.q == expected.q &&
                          computed.K2 == expected.K2 && computed.chi == expected.chi;
        TableRow row;
        row.cells = {to_string(c.type),
                     m_cell(c),
                     e_cell(c),
                     c.base_name,
                     to_string(c.group),
                     branch_cell(c, c.branch1),
                     branch_cell(c, c.branch2),
                     std::to_string(computed.p_g),
                     std::to_string(computed.q),
                     std::to_string(computed.K2),
                     std::to_string(expected.p_g),
                     std::to_string(expected.q),
                     pass ? "PASS" : "FAIL"};
        row.pass = pass;
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace {

struct ExpectedBicanonical {
    int degree;
    bool birational;
    bool embedding;
};

ExpectedBicanonical expected_bicanonical(TypeId t) {
    switch (t) {
        case TypeId::T1:
        case TypeId::T2:
        case TypeId::T3:
        case TypeId::T4:
        case TypeId::T5_2:
        case TypeId::T6_2: return {1, true, true};
        case TypeId::T9:
        case TypeId::T10:
        case TypeId::T11:
        case TypeId::T12: return {1, true, false};
        case TypeId::T8_1: return {4, false, false};
        default: return {2, false, false};  // 5.1, 6.1, 7, 8.2
    }
}

}  // namespace

Table bicanonical_table(const RunConfig& config) {
    Table table;
    table.name = "bicanonical";
    table.columns = {"Type",     "m",         "e",        "degree", "birational",
                     "embedding", "pencil",   "obstr_h1", "deg(thm)", "status"};
    table.latex_columns = {"Type", "degree", "birational", "embedding", "pencil"};
    for (const CoverDescriptor& c : grid(config)) {
        const BicanonicalReport report = factor_degree(c);
        const ExpectedBicanonical expected = expected_bicanonical(c.type);
        const std::optional<int> pencil = genus2_pencil(c);
        bool pass = report.degree == expected.degree && report.birational == expected.birational &&
                    report.embedding == expected.embedding;
        if (c.singular_base) pass = pass && report.obstruction_h1 == 1;
        TableRow row;
        row.cells = {to_string(c.type),
                     m_cell(c),
                     e_cell(c),
                     std::to_string(report.degree),
                     yes_no(report.birational),
                     yes_no(report.embedding),
                     pencil ? std::to_string(*pencil) : "-",
                     report.obstruction_h1 ? std::to_string(*report.obstruction_h1) : "-",
                     std::to_string(expected.degree),
                     pass ? "PASS" : "FAIL"};
        row.pass = pass;
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table generators_table(const RunConfig& config) {
    Table table;
    table.name = "generators";
    table.columns = {"Type", "m",    "e",          "p_g",   "q",          "deg2",
                     "2p_g-4-q",     "deg3", "delta(thm)", "gen_deg", "status"};
    table.latex_columns = {"Type", "p_g", "q", "2p_g-4-q", "delta(thm)"};
    for (const CoverDescriptor& c : grid(config)) {
        const SurfaceInvariants inv = invariants(c);
        const long long formula2 = 2 * inv.p_g - 4 - inv.q;
        const long long formula3 = delta(c);
        std::string deg2 = "-", deg3 = "-";
        bool pass = formula2 == deg2_extra_generators(4, inv.p_g, inv.q);
        if (!c.singular_base) {
            const long long gamma1 = gamma_coker(c, 1).coker_dim;
            const long long gamma2 = gamma_coker(c, 2).coker_dim;
            deg2 = std::to_string(gamma1);
            deg3 = std::to_string(gamma2);
            pass = pass && gamma1 == formula2 && gamma2 == formula3;
        }
        const GeneratorProfile profile = generator_profile(c);
        TableRow row;
        row.cells = {to_string(c.type),
                     m_cell(c),
                     e_cell(c),
                     std::to_string(inv.p_g),
                     std::to_string(inv.q),
                     deg2,
                     std::to_string(formula2),
                     deg3,
                     std::to_string(formula3),
                     std::to_string(profile.generated_in_degree),
                     pass ? "PASS" : "FAIL"};
        row.pass = pass;
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string to_text(const Table& table) {
    std::vector<std::size_t> widths(table.columns.size());
    for (std::size_t i = 0; i < table.columns.size(); ++i) widths[i] = table.columns[i].size();
    for (const TableRow& row : table.rows)
        for (std::size_t i = 0; i < row.cells.size(); ++i)
            widths[i] = std::max(widths[i], row.cells[i].size());

    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << cells[i];
            if (i + 1 < cells.size()) out << std::string(widths[i] - cells[i].size() + 2, ' ');
        }
        out << '\n';
    };
    emit(table.columns);
    for (const TableRow& row : table.rows) emit(row.cells);
    return out.str();
}

namespace {

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_csv(const Table& table) {
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << csv_escape(cells[i]);
        }
        out << '\n';
    };
    emit(table.columns);
    for (const TableRow& row : table.rows) emit(row.cells);
    return out.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.push_back(std::move(cell));
            cell.clear();
        } else if (c == '\n') {
            row.push_back(std::move(cell));
            cell.clear();
            rows.push_back(std::move(row));
            row.clear();
        } else {
            cell += c;
        }
    }
    if (!cell.empty() || !row.empty()) {
        row.push_back(std::move(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string latex_escape(const std::string& cell) {
    std::string out;
    for (char c : cell) {
        switch (c) {
            case '_':
            case '&':
            case '%':
            case '#': out += '\\'; out += c; break;
            case '^': out += "\\^{}"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string to_latex(const Table& table) {
    const std::vector<std::string>& cols =
        table.latex_columns.empty() ? table.columns : table.latex_columns;
    std::vector<std::size_t> index;
    for (const std::string& name : cols) {
        auto it = std::find(table.columns.begin(), table.columns.end(), name);
        if (it == table.columns.end())
            throw std::logic_error("LaTeX column \"" + name + "\" missing from table " + table.name);
        index.push_back(static_cast<std::size_t>(it - table.columns.begin()));
    }
    std::ostringstream out;
    out << "\\begin{tabular}{" << std::string(cols.size(), 'c') << "}\n\\hline\n";
    for (std::size_t i = 0; i < cols.size(); ++i)
        out << (i ? " & " : "") << latex_escape(cols[i]);
    out << " \\\\\n\\hline\n";
    for (const TableRow& row : table.rows) {
        for (std::size_t i = 0; i < index.size(); ++i)
            out << (i ? " & " : "") << latex_escape(row.cells[index[i]]);
        out << " \\\\\n";
    }
    out << "\\hline\n\\end{tabular}\n";
    return out.str();
}

nlohmann::json to_json(const Table& table, const RunConfig& config) {
    nlohmann::json rows = nlohmann::json::array();
    for (const TableRow& row : table.rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = row.cells[i];
        obj["pass"] = row.pass;
        rows.push_back(std::move(obj));
    }
    nlohmann::json cfg = {{"m_max", config.m_max},
                          {"n_max", config.n_max},
                          {"format", config.format},
                          {"oracle", config.oracle},
                          {"kind", table.name}};
    if (config.type_filter) cfg["type"] = to_string(*config.type_filter);
    return nlohmann::json{{"command", "table"},
                          {"config", std::move(cfg)},
                          {"rows", std::move(rows)},
                          {"pass", table.all_pass()}};
}

nlohmann::json divisor_json(const DivisorClass& d) {
    if (d.on_plane) return nlohmann::json{{"d", d.a}};
    return nlohmann::json{{"a", d.a}, {"b", d.b}};
}

nlohmann::json descriptor_json(const CoverDescriptor& c) {
    nlohmann::json out;
    out["type"] = to_string(c.type);
    if (has_m_parameter(c.type) || c.m != 0) out["m"] = c.m;
    if (has_e_parameter(c.type)) out["e"] = c.e;
    out["group"] = to_string(c.group);
    out["base"] = c.base_name;
    out["surface"] = c.surface.name();
    out["hyperplane"] = divisor_json(c.hyperplane);

    const SheafSplitting split = c.singular_base ? y_splitting(c) : splitting(c);
    nlohmann::json summands = nlohmann::json::array();
    for (int i = 0; i < 4; ++i)
        summands.push_back(nlohmann::json{{"class", split.summands[i].str()},
                                          {"character", character_label(c.group, i)}});
    out["splitting"] = std::move(summands);

    if (c.singular_base) {
        nlohmann::json exceptional = nlohmann::json::array();
        for (const ExceptionalComponent& f : c.resolution.exceptional)
            exceptional.push_back(nlohmann::json{{"pullback_multiplicity", f.pullback_multiplicity},
                                                 {"self_intersection", f.self_intersection.str()},
                                                 {"canonical_correction", f.canonical_correction}});
        out["resolution"] = nlohmann::json{{"crepant", c.resolution.crepant},
                                           {"fiber_point_count", c.resolution.fiber_point_count},
                                           {"exceptional", std::move(exceptional)}};
    } else {
        out["D1"] = divisor_json(c.branch1);
        out["D2"] = divisor_json(c.branch2);
    }

    const SurfaceInvariants inv = invariants(c);
    out["invariants"] =
        nlohmann::json{{"p_g", inv.p_g}, {"q", inv.q}, {"K2", inv.K2}, {"chi", inv.chi}};
    return out;
}

}  // namespace quadcover
