// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Expected values are closed forms or literals written out here, never read
// back from the library's own tables.

#include "dynkin/dynkin.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace dynkin;

namespace {

struct Tally {
    long checked = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failures.size() < 10) failures.push_back(what);
    }
};

Integer c(long m, long k) {
    if (k < 0 || m < k) return 0;
    Integer r = 1;
    for (long i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

std::string show(const Rational& r) { return r.str(); }

// ---------------------------------------------------------------- 1

void per_type_table(Tally& t) {
    struct Expected {
        LieType type;
        Rational principal;
        Rational d;
    };
    std::vector<Expected> cases;
    for (long n = 2; n <= 10; ++n) {
        cases.push_back({{Family::A, int(n)}, Rational(c(n + 2, 3)), Rational(c(n + 1, 2))});
        cases.push_back({{Family::B, int(n)}, Rational(c(2 * n + 2, 3), 2), Rational(2 * n * n)});
        cases.push_back({{Family::C, int(n)}, Rational(c(2 * n + 1, 3)), Rational(4 * n * (n - 1))});
        if (n >= 4) cases.push_back({{Family::D, int(n)}, Rational(c(2 * n, 3), 2), Rational(2 * n * (n - 2))});
    }
    cases.push_back({{Family::E, 6}, 156, 72});
    cases.push_back({{Family::E, 7}, 399, 168});
    cases.push_back({{Family::E, 8}, 1240, 480});
    cases.push_back({{Family::F, 4}, 156, 96});
    cases.push_back({{Family::G, 2}, 28, 24});
    for (const auto& e : cases) {
        const RootSystem rs(e.type);
        const auto p = principal_index(rs);
        const auto d = difference_d(rs);
        t.expect(p.agree() && p.value == e.principal,
                 e.type.name() + " principal " + show(p.value) + " != " + show(e.principal));
        t.expect(d.agree() && d.value == e.d, e.type.name() + " D " + show(d.value) + " != " + show(e.d));
        // (a, b) are table data: check a + b = h + 2 and the subregular dimension identity
        const McKayData m = mckay_data(rs);
        t.expect(m.a + m.b == coxeter_number(rs) + 2, e.type.name() + " a + b != h + 2");
        t.expect(subregular_module(rs).dimension() == rs.dimension(),
                 e.type.name() + " subregular module has wrong dimension");
    }
    // the rendered table, at several sample ranks
    for (int n = 4; n <= 8; ++n) {
        const auto table = build_table(n);
        t.expect(table.size() == 9, "table has " + std::to_string(table.size()) + " columns");
        const std::vector<std::array<Rational, 5>> expected{
            {Rational(c(n + 2, 3)), Rational(c(n + 1, 2)), 2, n + 1, Rational(1, 2)},
            {Rational(c(2 * n + 2, 3), 2), 2 * n * n, 2, 2 * n, 1},
            {Rational(c(2 * n + 1, 3)), 4 * n * (n - 1), 4, 2 * n - 2, 2},
            {Rational(c(2 * n, 3), 2), 2 * n * (n - 2), 4, 2 * n - 4, 1},
            {156, 72, 6, 8, Rational(3, 2)},
            {399, 168, 8, 12, 2},
            {1240, 480, 12, 20, 3},
            {156, 96, 6, 8, 3},
            {28, 24, 4, 4, 3},
        };
        for (std::size_t col = 0; col < 9 && col < table.size(); ++col) {
            for (std::size_t row = 0; row < 5; ++row) {
                t.expect(table[col].cells[row].value == expected[col][row],
                         table[col].label + " row " + std::to_string(row) + " at n = " + std::to_string(n) +
                             ": " + show(table[col].cells[row].value));
            }
        }
    }
}

// ---------------------------------------------------------------- 2

void simplest_embeddings(Tally& t) {
    struct Case {
        LieType type;
        int fundamental;
        int dim;
        int index;
    };
    for (const auto& e : std::vector<Case>{{{Family::E, 6}, 1, 27, 6},
                                           {{Family::E, 7}, 7, 56, 12},
                                           {{Family::E, 8}, 8, 248, 30},
                                           {{Family::F, 4}, 4, 26, 3},
                                           {{Family::G, 2}, 1, 7, 1}}) {
        const RootSystem rs(e.type);
        const auto rep = dynkin_index_irrep(rs, HighestWeight::fundamental(e.type.rank, e.fundamental));
        t.expect(rep.dimension == e.dim, e.type.name() + " dimension " + rep.dimension.str());
        // the target's vector representation has index 1 (sl, sp) or 2 (so)
        const Rational embedding = rep.index / (e.type == LieType{Family::E, 6}   ? 1
                                                : e.type == LieType{Family::E, 7} ? 1
                                                                                  : 2);
        t.expect(embedding == e.index, e.type.name() + " embedding index " + show(embedding));
        t.expect(exceptional_simplest_embedding_index(e.type) == e.index, e.type.name() + " table lookup");
    }
}

// ---------------------------------------------------------------- 3

void route_equivalence(Tally& t) {
    for (auto kind : {ClassicalKind::SL, ClassicalKind::SP, ClassicalKind::SO}) {
        for (int n = 1; n <= 12; ++n) {
            if (kind == ClassicalKind::SP && n % 2) continue;
            if (kind == ClassicalKind::SO && n < 3) continue;
            for (const auto& p : enumerate_orbits(kind, n)) {
                if (p.is_zero()) continue;
                t.expect(sl2_index_classical(kind, p) == index_via_adjoint(kind, p),
                         kind_name(kind) + " (" + p.str() + ")");
            }
        }
    }
    // beyond the exhaustive range: random admissible partitions up to size 60
    std::mt19937 gen(12);
    for (int trial = 0; trial < 400; ++trial) {
        int n = std::uniform_int_distribution<int>(13, 60)(gen);
        std::vector<int> parts;
        while (n > 0) {
            parts.push_back(std::uniform_int_distribution<int>(1, n)(gen));
            n -= parts.back();
        }
        const Partition p(parts);
        for (auto kind : {ClassicalKind::SL, ClassicalKind::SP, ClassicalKind::SO}) {
            if (p.is_zero() || !validate_partition(kind, p)) continue;
            t.expect(sl2_index_classical(kind, p) == index_via_adjoint(kind, p),
                     kind_name(kind) + " random (" + p.str() + ")");
        }
    }
}

// ---------------------------------------------------------------- 4

void principal_triple(Tally& t) {
    for (const auto& type : types_up_to_rank(2, 10)) {
        const auto rep = principal_index(RootSystem(type));
        const bool have = rep.routes.contains("dual-coxeter") && rep.routes.contains("coroot-norm") &&
                          rep.routes.contains("kostant");
        t.expect(have && rep.agree(), type.name() + " principal routes");
    }
    const auto e8 = principal_index(RootSystem({Family::E, 8}));
    t.expect(e8.routes.at("kostant") == Rational(74400, 60) && e8.value == 1240, "E8 Kostant sum");
}

// ---------------------------------------------------------------- 5

void identity_sweeps(Tally& t) {
    for (auto kind : {ClassicalKind::SL, ClassicalKind::SP, ClassicalKind::SO}) {
        const auto sweep = identity_sweep(kind, 12);
        std::size_t expected = 0;
        for (int n = 1; n <= 12; ++n) {
            if (kind != ClassicalKind::SO || n != 2) expected += partitions_of(n).size();
        }
        t.expect(sweep.size() == expected, kind_name(kind) + " sweep stopped early");
        for (const auto& inst : sweep) {
            t.expect(inst.holds, kind_name(kind) + " (" + inst.partition.str() + ")");
        }
    }
}

// ---------------------------------------------------------------- 6

void monotonicity(Tally& t) {
    for (auto kind : {ClassicalKind::SL, ClassicalKind::SP, ClassicalKind::SO}) {
        for (int n = 2; n <= 12; ++n) {
            if (kind == ClassicalKind::SP && n % 2) continue;
            const auto poset = build_poset(kind, n);
            for (const auto& [u, l] : poset.covers) {
                if (poset.nodes[l].is_zero()) continue;
                t.expect(*poset.index(l) < *poset.index(u), kind_name(kind) + " cover (" +
                                                                poset.nodes[u].str() + ") > (" +
                                                                poset.nodes[l].str() + ")");
            }
            if (n <= 10) t.expect(comparability_check(kind, n), kind_name(kind) + std::to_string(n) + " pairs");
        }
    }
}

// ---------------------------------------------------------------- 7

void structural(Tally& t) {
    auto types = types_up_to_rank(1, 10);
    for (const auto& e : exceptional_types()) {
        if (std::find(types.begin(), types.end(), e) == types.end()) types.push_back(e);
    }
    for (const auto& type : types) {
        const RootSystem rs(type);
        const Rational rr = rs.inner(rs.rho(), rs.rho());
        t.expect(rr == Rational(rs.dimension()) * dual_coxeter_number(rs) / 12, type.name() + " strange formula");
        for (const auto& root : rs.positive_roots()) {
            t.expect(rs.inner(rs.rho_check(), RootSystem::to_rational(root.coords)) == root.height,
                     type.name() + " height pairing");
        }
    }
    std::vector<std::pair<LieType, LieType>> pairs{{{Family::F, 4}, {Family::E, 6}},
                                                   {{Family::G, 2}, {Family::D, 4}}};
    for (int n = 2; n <= 8; ++n) {
        pairs.push_back({{Family::C, n}, {Family::A, 2 * n - 1}});
        if (n >= 3) pairs.push_back({{Family::B, n}, {Family::D, n + 1}});
    }
    for (const auto& [folded, unfolded] : pairs) {
        const RootSystem a(folded);
        const RootSystem b(unfolded);
        const auto sa = height_sums(a);
        const auto sb = height_sums(b);
        t.expect(sa.long_sum + a.r() * sa.short_sum == sb.long_sum + sb.short_sum,
                 folded.name() + " vs " + unfolded.name());
    }
}

// ---------------------------------------------------------------- 8

void difference_bounds(Tally& t) {
    const auto report = difference_bounds_checks(50);
    for (const auto& v : report.violations) t.expect(false, v);
    std::set<std::string> equal_2h;
    std::set<std::string> equal_3b;
    for (const auto& row : report.rows) {
        const int n = row.type.rank;
        t.expect(row.d <= 2 * row.h * n && row.d <= 3 * row.b * n, row.type.name() + " bound");
        if (row.d == 2 * row.h * n) equal_2h.insert(row.type.name());
        if (row.d == 3 * row.b * n) equal_3b.insert(row.type.name());
        const Rational ratio = row.d / (row.b * n);
        switch (row.type.family) {
        case Family::A: t.expect(ratio == Rational(1, 2), row.type.name() + " ratio"); break;
        case Family::B: t.expect(ratio == 1, row.type.name() + " ratio"); break;
        case Family::C: t.expect(ratio == 2, row.type.name() + " ratio"); break;
        case Family::D: t.expect(ratio == 1, row.type.name() + " ratio"); break;
        default: break;
        }
        if (row.h % 2 == 0) t.expect(is_integer(row.d / n), row.type.name() + " D/rank");
    }
    const std::set<std::string> extremal{"E8", "F4", "G2"};
    t.expect(equal_2h == extremal, "equality set for 2h*rank");
    t.expect(equal_3b == extremal, "equality set for 3b*rank");
    // A 2..50, B 2..50, C 3..50, D 4..50 and the five exceptional types
    t.expect(report.rows.size() == 49 + 49 + 48 + 47 + 5, "row count " + std::to_string(report.rows.size()));
}

// ---------------------------------------------------------------- 9

void integrality(Tally& t) {
    auto types = types_up_to_rank(1, 6);
    types.push_back({Family::F, 4});
    types.push_back({Family::G, 2});
    types.push_back({Family::E, 6});
    for (const auto& type : types) {
        const RootSystem rs(type);
        const WeightForm form(rs);
        std::vector<Integer> w(type.rank, 0);
        while (true) {
            const auto rep = dynkin_index_irrep(form, HighestWeight(w));
            t.expect(is_integer(rep.index), type.name() + " index " + show(rep.index));
            std::size_t i = 0;
            while (i < w.size() && w[i] == 2) w[i++] = 0;
            if (i == w.size()) break;
            ++w[i];
        }
    }
}

// ---------------------------------------------------------------- 10

void minimal_orbits(Tally& t) {
    for (int n = 2; n <= 20; ++n) {
        std::vector<int> parts(n - 1, 1);
        parts[0] = 2;
        const Partition p(parts);
        t.expect(sl2_index_classical(ClassicalKind::SL, p) == 1, "sl" + std::to_string(n));
        if (n % 2 == 0) t.expect(sl2_index_classical(ClassicalKind::SP, p) == 1, "sp" + std::to_string(n));
        if (n >= 4) {
            std::vector<int> q(n - 2, 1);
            q[0] = q[1] = 2;
            t.expect(sl2_index_classical(ClassicalKind::SO, Partition(q)) == 1, "so" + std::to_string(n));
        }
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
        {"per-type table (principal index, D, a, b, D/(b*rk))", per_type_table},
        {"exceptional simplest-embedding indices", simplest_embeddings},
        {"partition route = adjoint route, n <= 12", route_equivalence},
        {"principal index routes agree", principal_triple},
        {"binomial identity sweeps, n <= 12", identity_sweeps},
        {"index strictly decreases down the closure order", monotonicity},
        {"strange formula, height pairing, unfolding", structural},
        {"bounds on D, ranks <= 50", difference_bounds},
        {"integral irrep indices, coords <= 2, rank <= 6", integrality},
        {"minimal orbits have index 1, N <= 20", minimal_orbits},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally tally;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            criteria[i].second(tally);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = error.empty() && tally.failures.empty() && tally.checked > 0;
        failed += !ok;
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << "  [" << tally.checked
             << " checks, " << static_cast<int>(secs * 1000) << " ms]";
        std::cout << line.str() << "\n";
        if (!error.empty()) std::cout << "      exception: " << error << "\n";
        for (const auto& f : tally.failures) std::cout << "      " << f << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
