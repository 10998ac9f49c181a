#include <doctest.h>

#include <algorithm>

#include "quadcover/report.hpp"

using namespace quadcover;

namespace {

std::size_t column_index(const Table& table, const std::string& name) {
    auto it = std::find(table.columns.begin(), table.columns.end(), name);
    REQUIRE(it != table.columns.end());
    return static_cast<std::size_t>(it - table.columns.begin());
}

}  // namespace

TEST_CASE("classification table") {
    RunConfig config;
    config.m_max = 5;
    const Table table = classification_table(config);
    CHECK(table.rows.size() >= 40);
    CHECK(table.all_pass());
    // Every row carries the recomputed and the tabulated values.
    const std::size_t pg = column_index(table, "p_g");
    const std::size_t pg_expected = column_index(table, "p_g(table)");
    for (const TableRow& row : table.rows) CHECK(row.cells[pg] == row.cells[pg_expected]);
}

TEST_CASE("bicanonical table matches the degree classification") {
    RunConfig config;
    config.m_max = 6;
    const Table table = bicanonical_table(config);
    CHECK(table.all_pass());
    const std::size_t type_col = column_index(table, "Type");
    const std::size_t degree_col = column_index(table, "degree");
    for (const TableRow& row : table.rows) {
        const std::string& type = row.cells[type_col];
        const std::string& degree = row.cells[degree_col];
        if (type == "8.1")
            CHECK(degree == "4");
        else if (type == "5.1" || type == "6.1" || type == "7" || type == "8.2")
            CHECK(degree == "2");
        else
            CHECK(degree == "1");
    }
}

TEST_CASE("generator table delta column") {
    RunConfig config;
    config.m_max = 6;
    config.type_filter = TypeId::T7;
    const Table table = generators_table(config);
    CHECK(table.all_pass());
    REQUIRE(table.rows.size() == 6);
    const std::size_t delta_col = column_index(table, "delta(thm)");
    std::vector<std::string> deltas;
    for (const TableRow& row : table.rows) deltas.push_back(row.cells[delta_col]);
    CHECK(deltas == std::vector<std::string>{"4", "9", "14", "19", "24", "29"});
}

TEST_CASE("CSV round trip re-verifies") {
    RunConfig config;
    config.m_max = 4;
    const Table table = classification_table(config);
    const auto parsed = parse_csv(to_csv(table));
    REQUIRE(parsed.size() == table.rows.size() + 1);
    CHECK(parsed[0] == table.columns);

    const std::size_t type_col = column_index(table, "Type");
    const std::size_t m_col = column_index(table, "m");
    const std::size_t e_col = column_index(table, "e");
    const std::size_t pg_col = column_index(table, "p_g");
    const std::size_t q_col = column_index(table, "q");
    const std::size_t status_col = column_index(table, "status");
    for (std::size_t i = 1; i < parsed.size(); ++i) {
        const std::vector<std::string>& row = parsed[i];
        const auto type = parse_type_id(row[type_col]);
        REQUIRE(type.has_value());
        std::optional<int> m, e;
        if (row[m_col] != "-") m = std::stoi(row[m_col]);
        if (row[e_col] != "-") e = std::stoi(row[e_col]);
        const CoverDescriptor c = make_cover(*type, m, e);
        const SurfaceInvariants inv = invariants(c);
        const SurfaceInvariants expected = expected_invariants(c.type, c.m, c.e);
        const bool recomputed_pass = inv.p_g == expected.p_g && inv.q == expected.q;
        CHECK(row[pg_col] == std::to_string(inv.p_g));
        CHECK(row[q_col] == std::to_string(inv.q));
        CHECK((row[status_col] == "PASS") == recomputed_pass);
    }
}

TEST_CASE("JSON round trip re-verifies") {
    RunConfig config;
    config.m_max = 4;
    const Table table = generators_table(config);
    const nlohmann::json doc = nlohmann::json::parse(to_json(table, config).dump());
    CHECK(doc.at("command") == "table");
    CHECK(doc.at("pass") == table.all_pass());
    CHECK(doc.at("config").at("m_max") == 4);
    REQUIRE(doc.at("rows").size() == table.rows.size());
    for (const auto& row : doc.at("rows")) {
        const auto type = parse_type_id(row.at("Type").get<std::string>());
        REQUIRE(type.has_value());
        std::optional<int> m, e;
        if (row.at("m").get<std::string>() != "-") m = std::stoi(row.at("m").get<std::string>());
        if (row.at("e").get<std::string>() != "-") e = std::stoi(row.at("e").get<std::string>());
        const CoverDescriptor c = make_cover(*type, m, e);
        const SurfaceInvariants inv = invariants(c);
        CHECK(row.at("2p_g-4-q").get<std::string>() == std::to_string(2 * inv.p_g - 4 - inv.q));
        CHECK(row.at("delta(thm)").get<std::string>() == std::to_string(delta(c)));
        CHECK(row.at("pass").get<bool>());
    }
}

TEST_CASE("LaTeX emission mirrors the classification column order") {
    RunConfig config;
    config.m_max = 2;
    const std::string latex = to_latex(classification_table(config));
    CHECK(latex.find("\\begin{tabular}") != std::string::npos);
    CHECK(latex.find("Type & W & p\\_g & G & D1 & D2 & q") != std::string::npos);
    CHECK(latex.find("1 & P2 & 3 & Z4 & conic & quartic & 0") != std::string::npos);
}

TEST_CASE("CSV escaping survives commas") {
    const auto parsed = parse_csv("a,\"S(3,2)\",c\nx,\"he said \"\"hi\"\"\",z\n");
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0] == std::vector<std::string>{"a", "S(3,2)", "c"});
    CHECK(parsed[1] == std::vector<std::string>{"x", "he said \"hi\"", "z"});
}

TEST_CASE("descriptor JSON shape") {
    const nlohmann::json t7 = descriptor_json(make_cover(TypeId::T7, 3));
    CHECK(t7.at("type") == "7");
    CHECK(t7.at("m") == 3);
    CHECK(t7.at("group") == "Z2xZ2");
    CHECK(t7.at("D1").at("b") == 8);
    CHECK(t7.at("D2").at("a") == 6);
    CHECK(t7.at("splitting").size() == 4);
    CHECK(t7.at("invariants").at("q") == 3);
    CHECK_FALSE(t7.contains("resolution"));

    const nlohmann::json t12 = descriptor_json(make_cover(TypeId::T12));
    CHECK(t12.at("resolution").at("crepant") == false);
    CHECK(t12.at("resolution").at("exceptional")[0].at("self_intersection") == "-1/2");
    CHECK_FALSE(t12.contains("D1"));

    const nlohmann::json t1 = descriptor_json(make_cover(TypeId::T1));
    CHECK(t1.at("D1").at("d") == 2);
    CHECK(t1.at("surface") == "P2");
}
