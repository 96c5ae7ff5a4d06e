#pragma once

// Commands behind the dynkin executable.  Every command renders into a
// string plus an exit code, so main() stays a thin shell and the tests can
// drive the whole command line in-process.

#include "dynkin/dynkin.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynkin::cli {

using json = nlohmann::ordered_json;

enum Exit : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

struct Output {
    std::string out;
    std::string err;
    int code = exit_ok;
};

inline std::string rational_json(const Rational& r) { return to_string(r); }

inline std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

inline ClassicalKind parse_kind(const std::string& s) {
    const std::string k = lower(trim(s));
    if (k == "sl") return ClassicalKind::SL;
    if (k == "sp") return ClassicalKind::SP;
    if (k == "so") return ClassicalKind::SO;
    throw std::invalid_argument("unknown classical kind '" + s + "' (expected sl, sp or so)");
}

/// An algebra named either abstractly ("C3", "E6") or as a matrix algebra
/// ("sp6", "so13").  Matrix labels fix the vector representation that
/// partitions refer to; so3, so4 and so6 carry no Cartan type of their own.
struct Algebra {
    std::string label;
    std::optional<LieType> type;
    std::optional<ClassicalKind> kind;
    int dim = 0;
};

inline Algebra parse_algebra(const std::string& text) {
    const std::string s = lower(trim(text));
    for (const auto& [prefix, kind] : {std::pair{"sl", ClassicalKind::SL}, std::pair{"sp", ClassicalKind::SP},
                                       std::pair{"so", ClassicalKind::SO}}) {
        if (s.rfind(prefix, 0) != 0) continue;
        std::string digits = s.substr(2);
        if (!digits.empty() && digits[0] == '_') digits.erase(0, 1);
        if (digits.empty() || digits.size() > 6 ||
            !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw std::invalid_argument("cannot parse algebra '" + text + "'");
        }
        const int n = std::stoi(digits);
        Algebra a{text, std::nullopt, kind, n};
        switch (kind) {
        case ClassicalKind::SL:
            if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");
            a.type = LieType{Family::A, n - 1};
            break;
        case ClassicalKind::SP:
            if (n < 2 || n % 2) throw std::invalid_argument("sp_n needs even n >= 2");
            a.type = n == 2 ? LieType{Family::A, 1} : LieType{Family::C, n / 2};
            break;
        case ClassicalKind::SO:
            if (n < 3) throw std::invalid_argument("so_n needs n >= 3");
            if (n % 2 && n >= 5) a.type = LieType{Family::B, (n - 1) / 2};
            if (n % 2 == 0 && n >= 8) a.type = LieType{Family::D, n / 2};
            break;
        }
        return a;
    }
    Algebra a{text, LieType::parse(trim(text)), std::nullopt, 0};
    if (const auto form = matrix_form(*a.type)) {
        a.kind = form->first;
        a.dim = form->second;
    }
    return a;
}

/// Comma-separated nonnegative integers of any size.
inline HighestWeight parse_weight(const std::string& text) {
    std::vector<Integer> coords;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty() || item.size() > 4000 ||
            !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw std::invalid_argument("bad weight coordinate '" + item + "' in '" + text + "'");
        }
        coords.emplace_back(item);
    }
    if (coords.empty()) throw std::invalid_argument("empty weight");
    return HighestWeight(std::move(coords));
}

// ---------------------------------------------------------------- index

struct IndexResult {
    Algebra algebra;
    Partition partition;
    std::string via;
    IndexReport report;
    bool principal = false;
};

inline IndexResult compute_index(const Algebra& alg, const Partition& p, const std::string& via) {
    IndexResult res{alg, p, via, {}, false};
    const bool all = via == "all";
    auto principal_routes = [&] {
        const auto pr = principal_index(RootSystem(*alg.type));
        for (const auto& [name, v] : pr.routes) {
            if (!res.report.routes.contains(name)) res.report.add(name, v);
        }
        res.principal = true;
    };
    if (alg.kind) {
        if (via == "simplest") {
            throw std::invalid_argument("--via simplest applies to exceptional algebras; " + alg.label +
                                        " is classical");
        }
        if (p.size() != alg.dim) {
            throw std::invalid_argument("partition " + p.str() + " has size " + std::to_string(p.size()) +
                                        ", " + alg.label + " acts on dimension " + std::to_string(alg.dim));
        }
        if (all || via == "partition") res.report.add("partition", sl2_index_classical(*alg.kind, p));
        if (all || via == "adjoint") {
            detail::require_nonzero_admissible(*alg.kind, p);
            if (*alg.kind == ClassicalKind::SO && alg.dim <= 2) {
                throw std::invalid_argument("adjoint route undefined for so_2");
            }
            res.report.add("adjoint-branching", index_via_adjoint(*alg.kind, p));
        }
        const bool same_form = alg.type && matrix_form(*alg.type) == std::pair{*alg.kind, alg.dim};
        if (all && same_form && p == principal_partition(*alg.type)) principal_routes();
        return res;
    }
    if (via == "partition" || via == "adjoint") {
        throw std::invalid_argument("--via " + via + " needs a classical algebra; use simplest for " +
                                    alg.label);
    }
    res.report.add("simplest-rep", index_via_simplest_rep(*alg.type, p));
    if (all) {
        const RootSystem rs(*alg.type);
        const auto hw = HighestWeight::fundamental(rs.rank(), simplest_rep(*alg.type).fundamental);
        if (p == principal_jordan_type(rs, hw)) principal_routes();
    }
    return res;
}

inline json index_json(const IndexResult& r) {
    json routes = json::object();
    for (const auto& [name, v] : r.report.routes) routes[name] = rational_json(v);
    json j;
    j["algebra"] = r.algebra.label;
    j["type"] = r.algebra.type ? json(r.algebra.type->name()) : json(nullptr);
    j["kind"] = r.algebra.kind ? json(kind_name(*r.algebra.kind)) : json(nullptr);
    j["partition"] = r.partition.str();
    j["via"] = r.via;
    j["value"] = rational_json(r.report.value);
    j["routes"] = routes;
    j["agree"] = r.report.agree();
    j["principal"] = r.principal;
    return j;
}

inline std::string render_index(const IndexResult& r, const std::string& format) {
    std::ostringstream os;
    if (format == "json") return index_json(r).dump(2) + "\n";
    if (format == "csv") {
        os << "route,value\n";
        for (const auto& [name, v] : r.report.routes) os << name << "," << to_string(v) << "\n";
        return os.str();
    }
    os << "index of (" << r.partition.str() << ") in " << r.algebra.label << ": " << to_string(r.report.value)
       << (r.report.agree() ? "" : "  (routes DISAGREE)") << "\n\n";
    os << "| route | value |\n|---|---|\n";
    for (const auto& [name, v] : r.report.routes) os << "| " << name << " | " << to_string(v) << " |\n";
    return os.str();
}

// ---------------------------------------------------------------- rep-index

inline json rep_index_json(const Algebra& alg, const HighestWeight& w, const RepIndexReport& rep) {
    std::string ws;
    for (std::size_t i = 0; i < w.coords.size(); ++i) ws += (i ? "," : "") + w.coords[i].str();
    json j;
    j["algebra"] = alg.label;
    j["type"] = alg.type->name();
    j["weight"] = ws;
    j["dimension"] = rep.dimension.str();
    j["index"] = rational_json(rep.index);
    j["is_integer"] = rep.is_integer;
    return j;
}

inline std::string render_fields(const json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    std::ostringstream os;
    if (format == "md") os << "| field | value |\n|---|---|\n";
    if (format == "csv") os << "field,value\n";
    for (const auto& [key, v] : j.items()) {
        const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        if (format == "md") {
            os << "| " << key << " | " << s << " |\n";
        } else {
            os << key << "," << (s.find(',') != std::string::npos ? "\"" + s + "\"" : s) << "\n";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- table

inline json table_json(const std::vector<TableColumn>& cols, int sample_rank) {
    json j;
    j["sample_rank"] = sample_rank;
    j["rows"] = table_row_names();
    json columns = json::array();
    for (const auto& col : cols) {
        json c;
        c["label"] = col.label;
        c["type"] = col.type.name();
        json cells = json::array();
        for (const auto& cell : col.cells) {
            json x;
            x["value"] = rational_json(cell.value);
            if (!cell.closed_form.empty()) x["closed_form"] = cell.closed_form;
            cells.push_back(x);
        }
        c["cells"] = cells;
        columns.push_back(c);
    }
    j["columns"] = columns;
    return j;
}

/// Columns are the algebras, rows follow table_row_names(); classical cells
/// read "closed form = value at the sample rank".
inline std::string table_markdown(const json& t) {
    std::ostringstream os;
    os << "|  |";
    for (const auto& c : t["columns"]) os << " " << c["label"].get<std::string>() << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < t["columns"].size(); ++i) os << "---|";
    os << "\n| sample |";
    for (const auto& c : t["columns"]) os << " " << c["type"].get<std::string>() << " |";
    os << "\n";
    for (std::size_t r = 0; r < t["rows"].size(); ++r) {
        os << "| " << t["rows"][r].get<std::string>() << " |";
        for (const auto& c : t["columns"]) {
            const auto& cell = c["cells"][r];
            os << " ";
            if (cell.contains("closed_form")) os << cell["closed_form"].get<std::string>() << " = ";
            os << cell["value"].get<std::string>() << " |";
        }
        os << "\n";
    }
    return os.str();
}

inline std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string t = trim(line);
    if (t.size() < 2 || t.front() != '|' || t.back() != '|') {
        throw std::invalid_argument("not a table row: " + line);
    }
    std::stringstream in(t.substr(1, t.size() - 2));
    std::string cell;
    while (std::getline(in, cell, '|')) cells.push_back(trim(cell));
    return cells;
}

/// Inverse of table_markdown: recovers the JSON document.
inline json table_from_markdown(const std::string& md) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream in(md);
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        rows.push_back(split_row(line));
    }
    if (rows.size() < 3 || rows[2].empty() || rows[2][0] != "sample") {
        throw std::invalid_argument("markdown table lacks the header or sample row");
    }
    const std::size_t ncols = rows[0].size() - 1;
    json columns = json::array();
    std::optional<int> sample_rank;
    for (std::size_t c = 1; c <= ncols; ++c) {
        json col;
        col["label"] = rows[0][c];
        col["type"] = rows[2][c];
        if (rows[0][c] == "A_n") sample_rank = LieType::parse(rows[2][c]).rank;
        json cells = json::array();
        for (std::size_t r = 3; r < rows.size(); ++r) {
            const std::string& text = rows[r].at(c);
            json x;
            const auto eq = text.rfind(" = ");
            if (eq == std::string::npos) {
                x["value"] = text;
            } else {
                x["value"] = text.substr(eq + 3);
                x["closed_form"] = text.substr(0, eq);
            }
            cells.push_back(x);
        }
        col["cells"] = cells;
        columns.push_back(col);
    }
    json row_names = json::array();
    for (std::size_t r = 3; r < rows.size(); ++r) row_names.push_back(rows[r][0]);
    json j;
    j["sample_rank"] = sample_rank ? json(*sample_rank) : json(nullptr);
    j["rows"] = row_names;
    j["columns"] = columns;
    return j;
}

inline std::string render_table(int sample_rank, const std::string& format) {
    const json t = table_json(build_table(sample_rank), sample_rank);
    if (format == "json") return t.dump(2) + "\n";
    if (format == "md") return table_markdown(t);
    std::ostringstream os;
    os << "column,sample,row,value,closed_form\n";
    for (const auto& c : t["columns"]) {
        for (std::size_t r = 0; r < t["rows"].size(); ++r) {
            const auto& cell = c["cells"][r];
            os << c["label"].get<std::string>() << "," << c["type"].get<std::string>() << ","
               << t["rows"][r].get<std::string>() << "," << cell["value"].get<std::string>() << ","
               << (cell.contains("closed_form") ? "\"" + cell["closed_form"].get<std::string>() + "\"" : "")
               << "\n";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- verify

inline json verify_json(const std::vector<CheckResult>& results) {
    json checks = json::array();
    bool passed = true;
    for (const auto& r : results) {
        json c;
        c["name"] = r.name;
        c["count"] = r.count;
        c["passed"] = r.passed();
        c["failures"] = r.failures;
        checks.push_back(c);
        passed = passed && r.passed();
    }
    json j;
    j["passed"] = passed;
    j["checks"] = checks;
    return j;
}

inline std::string render_verify(const std::vector<CheckResult>& results, const std::string& format) {
    if (format == "json") return verify_json(results).dump(2) + "\n";
    std::ostringstream os;
    if (format == "csv") {
        os << "check,count,passed,failures\n";
        for (const auto& r : results) {
            os << r.name << "," << r.count << "," << (r.passed() ? "true" : "false") << "," << r.failures.size()
               << "\n";
        }
        return os.str();
    }
    os << "| check | instances | result |\n|---|---|---|\n";
    for (const auto& r : results) {
        os << "| " << r.name << " | " << r.count << " | " << (r.passed() ? "PASS" : "FAIL") << " |\n";
    }
    for (const auto& r : results) {
        for (const auto& f : r.failures) os << "\n" << r.name << ": " << f;
    }
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
    os << "\n" << results.size() << " check families, " << (ok ? "all passed" : "FAILURES") << "\n";
    return os.str();
}

// ---------------------------------------------------------------- poset

inline json poset_json(const OrbitPoset& poset) {
    json nodes = json::array();
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        const auto idx = poset.index(i);
        json n;
        n["id"] = i;
        n["partition"] = poset.nodes[i].str();
        n["index"] = idx ? rational_json(*idx) : std::string("0");
        n["zero"] = !idx.has_value();
        nodes.push_back(n);
    }
    json covers = json::array();
    for (const auto& [u, l] : poset.covers) covers.push_back({u, l});
    json j;
    j["kind"] = kind_name(poset.kind);
    j["n"] = poset.n;
    j["nodes"] = nodes;
    j["covers"] = covers;
    return j;
}

// ---------------------------------------------------------------- sweep

inline json identity_json(const IdentityInstance& inst) {
    json j;
    j["family"] = kind_name(inst.family);
    j["partition"] = inst.partition.str();
    j["lhs"] = rational_json(inst.lhs);
    j["rhs"] = rational_json(inst.rhs);
    j["holds"] = inst.holds;
    return j;
}

// ---------------------------------------------------------------- front end

/// Flat `key = value` config file whose keys are the verify options, written
/// with hyphens or underscores (max_classical_rank = 12, only = routes).
class VerifyConfigFile : public CLI::ConfigTOML {
public:
    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        auto items = CLI::ConfigTOML::from_config(input);
        for (auto& item : items) {
            if (item.name == "++" || item.name == "--") continue;
            std::replace(item.name.begin(), item.name.end(), '_', '-');
            if (item.parents.empty()) item.parents = {"verify"};
        }
        return items;
    }
};

/// Parses and runs one command line; args excludes the program name.
inline Output run(const std::vector<std::string>& args) {
    Output result;
    std::ostringstream out;
    std::ostringstream err;

    CLI::App app{"Exact Dynkin indices of representations and sl2-subalgebras", "dynkin"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"json", "csv", "md"};

    auto* table = app.add_subcommand("table", "per-type table of principal index, D, a, b, D/(b*rk)");
    int table_n = 5;
    std::string table_format = "md";
    table->add_option("--n", table_n, "sample rank for the classical series (>= 4)")->capture_default_str();
    table->add_option("--format", table_format)->check(CLI::IsMember(formats))->capture_default_str();

    auto* index = app.add_subcommand("index", "index of the sl2 attached to a nilpotent with given Jordan type");
    std::string algebra;
    std::string partition;
    std::string via = "all";
    std::string index_format = "json";
    index->add_option("--algebra", algebra, "sl8, sp6, so13, C3, E6, ...")->required();
    index->add_option("--partition", partition, "Jordan type, comma separated")->required();
    index->add_option("--via", via)
        ->check(CLI::IsMember({"partition", "adjoint", "simplest", "all"}))
        ->capture_default_str();
    index->add_option("--format", index_format)->check(CLI::IsMember(formats))->capture_default_str();

    auto* rep_index = app.add_subcommand("rep-index", "dimension and Dynkin index of an irreducible module");
    std::string rep_algebra;
    std::string weight;
    std::string rep_format = "json";
    rep_index->add_option("--algebra", rep_algebra, "A2, E6, sp6, ...")->required();
    rep_index->add_option("--weight", weight, "highest weight in fundamental weights, comma separated")
        ->required();
    rep_index->add_option("--format", rep_format)->check(CLI::IsMember(formats))->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the verification sweeps");
    VerifyConfig cfg;
    std::vector<std::string> only;
    std::string verify_format = "md";
    app.set_config("--config", "", "key = value file with verify options");
    app.config_formatter(std::make_shared<VerifyConfigFile>());
    verify->fallthrough();
    verify->allow_config_extras(CLI::config_extras_mode::error);
    app.allow_config_extras(CLI::config_extras_mode::error);
    verify->add_option("--only", only, "check families to run (repeat or comma separate)")->delimiter(',');
    verify->add_option("--max-classical-rank", cfg.max_classical_rank)->capture_default_str();
    verify->add_option("--max-partition-size", cfg.max_partition_size)->capture_default_str();
    verify->add_option("--max-identity-n", cfg.max_identity_n)->capture_default_str();
    verify->add_option("--max-comparable-n", cfg.max_comparable_n)->capture_default_str();
    verify->add_option("--max-integrality-rank", cfg.max_integrality_rank)->capture_default_str();
    verify->add_option("--max-integrality-coord", cfg.max_integrality_coord)->capture_default_str();
    verify->add_option("--max-minimal-n", cfg.max_minimal_n)->capture_default_str();
    verify->add_option("--format", verify_format)->check(CLI::IsMember(formats))->capture_default_str();

    auto* poset = app.add_subcommand("poset", "orbit closure poset with the index of every orbit");
    std::string poset_kind;
    int poset_n = 0;
    std::string poset_format = "dot";
    poset->add_option("--kind", poset_kind)->required()->check(CLI::IsMember({"sl", "sp", "so"}));
    poset->add_option("--n", poset_n, "dimension of V")->required();
    poset->add_option("--format", poset_format)->check(CLI::IsMember({"dot", "json"}))->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "identity sweep as JSON lines");
    std::vector<std::string> sweep_kinds{"sl", "sp", "so"};
    int sweep_n = 12;
    sweep->add_option("--kind", sweep_kinds, "sl, sp, so (default all)")
        ->delimiter(',')
        ->check(CLI::IsMember({"sl", "sp", "so"}));
    sweep->add_option("--max-identity-n", sweep_n)->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.code = code == 0 ? exit_ok : exit_usage;
        return result;
    }

    try {
        if (*table) {
            result.out = render_table(table_n, table_format);
        } else if (*index) {
            const auto res = compute_index(parse_algebra(algebra), Partition::parse(partition), via);
            result.out = render_index(res, index_format);
            if (!res.report.agree()) {
                result.err = "routes disagree\n";
                result.code = exit_failure;
            }
        } else if (*rep_index) {
            const Algebra alg = parse_algebra(rep_algebra);
            if (!alg.type) {
                throw std::invalid_argument(alg.label + " has no Cartan type here; use its abstract label");
            }
            const HighestWeight w = parse_weight(weight);
            const auto rep = dynkin_index_irrep(RootSystem(*alg.type), w);
            result.out = render_fields(rep_index_json(alg, w, rep), rep_format);
            if (!rep.is_integer) {
                result.err = "index is not an integer\n";
                result.code = exit_failure;
            }
        } else if (*verify) {
            cfg.only.insert(only.begin(), only.end());
            const auto results = run_verify(cfg);
            result.out = render_verify(results, verify_format);
            for (const auto& r : results) {
                if (!r.passed()) result.code = exit_failure;
            }
        } else if (*poset) {
            const auto p = build_poset(parse_kind(poset_kind), poset_n);
            result.out = poset_format == "dot" ? to_dot(p) : poset_json(p).dump(2) + "\n";
        } else if (*sweep) {
            std::ostringstream os;
            for (const auto& k : sweep_kinds) {
                for (const auto& inst : identity_sweep(parse_kind(k), sweep_n)) {
                    os << identity_json(inst).dump() << "\n";
                    if (!inst.holds) result.code = exit_failure;
                }
            }
            result.out = os.str();
        }
    } catch (const std::invalid_argument& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.code = exit_usage;
    } catch (const std::exception& e) {
        // anything else is an internal inconsistency
        result.err = std::string("inconsistency: ") + e.what() + "\n";
        result.code = exit_failure;
    }
    return result;
}

}  // namespace dynkin::cli
