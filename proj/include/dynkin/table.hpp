#pragma once

// The per-type data table: principal index, difference D, McKay degrees
// (a, b) and the ratio D / (b * rank), all computed from root systems.

#include "dynkin/rational.hpp"
#include "dynkin/rootsys.hpp"
#include "dynkin/sl2index.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynkin {

struct TableCell {
    Rational value;
    std::string closed_form;  // empty for exceptional columns and rank-independent cells

    friend bool operator==(const TableCell&, const TableCell&) = default;
};

struct TableColumn {
    std::string label;  // "A_n", "E_6", ...
    LieType type;       // the sample type the values were computed on
    std::array<TableCell, 5> cells;

    friend bool operator==(const TableColumn&, const TableColumn&) = default;
};

inline const std::array<std::string, 5>& table_row_names() {
    static const std::array<std::string, 5> names{"principal index", "D", "a", "b", "D/(b*rk)"};
    return names;
}

inline TableColumn compute_table_column(const std::string& label, const LieType& type,
                                        const std::array<std::string, 5>& closed_forms = {}) {
    const RootSystem rs(type);
    const auto principal = principal_index(rs);
    const auto diff = difference_d(rs);
    if (!principal.agree() || !diff.agree()) {
        throw std::logic_error("index routes disagree for " + type.name());
    }
    const McKayData m = mckay_data(rs);
    TableColumn col{label, type, {}};
    const std::array<Rational, 5> values{principal.value, diff.value, Rational(m.a), Rational(m.b),
                                         diff.value / (m.b * type.rank)};
    for (std::size_t i = 0; i < 5; ++i) col.cells[i] = {values[i], closed_forms[i]};
    return col;
}

/// All nine columns; classical series are evaluated at the sample rank and
/// carry the closed form in n wherever the entry depends on it.
inline std::vector<TableColumn> build_table(int sample_rank) {
    if (sample_rank < 4) {
        throw std::invalid_argument("sample rank must be at least 4 so that C_n and D_n are defined");
    }
    const int n = sample_rank;
    std::vector<TableColumn> cols;
    cols.push_back(compute_table_column(
        "A_n", {Family::A, n}, {"C(n+2,3)", "C(n+1,2)", "", "n+1", ""}));
    cols.push_back(compute_table_column(
        "B_n", {Family::B, n}, {"1/2 C(2n+2,3)", "2n^2", "", "2n", ""}));
    cols.push_back(compute_table_column(
        "C_n", {Family::C, n}, {"C(2n+1,3)", "4n(n-1)", "", "2n-2", ""}));
    cols.push_back(compute_table_column(
        "D_n", {Family::D, n}, {"1/2 C(2n,3)", "2n(n-2)", "", "2n-4", ""}));
    for (const auto& t : exceptional_types()) {
        cols.push_back(compute_table_column(std::string(1, family_letter(t.family)) + "_" +
                                                std::to_string(t.rank),
                                            t));
    }
    return cols;
}

}  // namespace dynkin
