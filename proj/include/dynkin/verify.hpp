#pragma once

// Verification sweeps over every invariant the library promises.  Each check
// family produces a count of instances examined and a list of
// counterexamples; an empty list means the family passed.

#include "dynkin/identities.hpp"
#include "dynkin/orbits.hpp"
#include "dynkin/rational.hpp"
#include "dynkin/reps.hpp"
#include "dynkin/rootsys.hpp"
#include "dynkin/sl2index.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynkin {

struct VerifyConfig {
    int max_classical_rank = 10;
    int max_partition_size = 12;
    int max_identity_n = 12;
    int max_comparable_n = 10;
    int max_integrality_rank = 6;
    int max_integrality_coord = 2;
    int max_minimal_n = 20;
    std::set<std::string> only;  // empty: every family

    void validate() const {
        for (int bound : {max_classical_rank, max_partition_size, max_identity_n, max_comparable_n,
                          max_integrality_rank, max_minimal_n}) {
            if (bound < 2) throw std::invalid_argument("verification bounds must be >= 2");
        }
        if (max_integrality_coord < 0) throw std::invalid_argument("integrality bound must be >= 0");
    }
};

struct CheckResult {
    std::string name;
    long count = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

namespace detail {

class Checker {
public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& what) {
        ++result_.count;
        if (!ok && result_.failures.size() < 20) result_.failures.push_back(what());
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

inline std::vector<LieType> all_types(int max_rank) {
    auto types = types_up_to_rank(1, max_rank);
    for (const auto& t : exceptional_types()) {
        if (std::find(types.begin(), types.end(), t) == types.end()) types.push_back(t);
    }
    return types;
}

inline std::vector<ClassicalKind> classical_kinds() {
    return {ClassicalKind::SL, ClassicalKind::SP, ClassicalKind::SO};
}

inline CheckResult check_roots(const VerifyConfig& cfg) {
    Checker c("roots");
    for (const auto& t : all_types(cfg.max_classical_rank)) {
        const RootSystem rs(t);
        const auto& theta = rs.theta().coords;
        c.expect(rs.inner(theta, theta) == 2, [&] { return t.name() + ": (theta, theta) != 2"; });
        for (const auto& root : rs.positive_roots()) {
            const Rational len = rs.inner(root.coords, root.coords);
            c.expect(len == (root.is_long ? Rational(2) : Rational(2, rs.r())),
                     [&] { return t.name() + ": root of squared length " + len.str(); });
            c.expect(rs.inner(rs.rho_check(), RootSystem::to_rational(root.coords)) == root.height,
                     [&] { return t.name() + ": (rho^vee, gamma) != height(gamma)"; });
        }
        const auto ex = exponents(rs);
        int total = 0;
        for (int m : ex) total += 2 * m + 1;
        c.expect(total == rs.dimension() && ex.back() == coxeter_number(rs) - 1 &&
                     static_cast<int>(ex.size()) == t.rank,
                 [&] { return t.name() + ": exponents inconsistent with dim g and h"; });
        std::vector<int> closed;
        if (t.family == Family::A) {
            for (int m = 1; m <= t.rank; ++m) closed.push_back(m);
        } else if (t.family == Family::B || t.family == Family::C) {
            for (int m = 1; m <= 2 * t.rank - 1; m += 2) closed.push_back(m);
        }
        if (!closed.empty()) {
            c.expect(ex == closed, [&] { return t.name() + ": exponents differ from closed form"; });
        }
        c.expect(rho_check_norm_squared_twice(rs) ==
                     Rational(rs.dimension()) * dual_coxeter_of_dual(rs) * rs.r() / 6,
                 [&] { return t.name() + ": 2(rho^vee, rho^vee) != dim/6 h*(dual) r"; });
    }
    return c.take();
}

inline CheckResult check_strange(const VerifyConfig& cfg) {
    Checker c("strange-formula");
    for (const auto& t : all_types(cfg.max_classical_rank)) {
        c.expect(strange_formula_check(RootSystem(t)),
                 [&] { return t.name() + ": (rho, rho) != dim g h* / 12"; });
    }
    return c.take();
}

inline CheckResult check_unfolding(const VerifyConfig& cfg) {
    Checker c("unfolding");
    std::vector<LieType> folded;
    for (int n = 2; n <= cfg.max_classical_rank; ++n) {
        folded.push_back({Family::C, n});
        if (n >= 3) folded.push_back({Family::B, n});
    }
    folded.push_back({Family::F, 4});
    folded.push_back({Family::G, 2});
    for (const auto& t : folded) {
        const RootSystem rs(t);
        const LieType partner = *unfolding_partner(t);
        const auto sums = height_sums(rs);
        const auto psums = height_sums(RootSystem(partner));
        c.expect(sums.long_sum + rs.r() * sums.short_sum == psums.long_sum + psums.short_sum,
                 [&] { return t.name() + " vs " + partner.name() + ": height sums differ"; });
    }
    return c.take();
}

inline CheckResult check_principal(const VerifyConfig& cfg) {
    Checker c("principal");
    for (const auto& t : all_types(cfg.max_classical_rank)) {
        const auto rep = principal_index(RootSystem(t));
        c.expect(rep.agree() && is_integer(rep.value),
                 [&] { return t.name() + ": principal index routes disagree"; });
    }
    return c.take();
}

inline CheckResult check_difference(const VerifyConfig& cfg) {
    Checker c("difference");
    for (const auto& t : all_types(cfg.max_classical_rank)) {
        if (t.rank < 2) continue;
        const RootSystem rs(t);
        c.expect(difference_d(rs).agree(), [&] { return t.name() + ": routes for D disagree"; });
        c.expect(subregular_module(rs).dimension() == rs.dimension(),
                 [&] { return t.name() + ": subregular module has wrong dimension"; });
        const McKayData m = mckay_data(rs);
        const auto series = poincare_series(m, 2 * m.h);
        c.expect(m.a + m.b == m.h + 2 && series[0] == 1 &&
                     std::all_of(series.begin(), series.end(), [](const Integer& x) { return x >= 0; }),
                 [&] { return t.name() + ": McKay data inconsistent"; });
    }
    return c.take();
}

inline CheckResult check_reps(const VerifyConfig& cfg) {
    Checker c("representations");
    for (const auto& t : all_types(cfg.max_classical_rank)) {
        const RootSystem rs(t);
        const auto adj = dynkin_index_irrep(rs, highest_root_weight(rs));
        c.expect(adj.dimension == rs.dimension() && adj.index == adjoint_index(rs),
                 [&] { return t.name() + ": adjoint index != 2h*"; });
        if (const auto form = matrix_form(t)) {
            const auto v = dynkin_index_irrep(rs, HighestWeight::fundamental(t.rank, 1));
            c.expect(v.dimension == form->second && v.index == vector_rep_index(form->first),
                     [&] { return t.name() + ": index of the vector representation is wrong"; });
        }
    }
    for (const auto& t : exceptional_types()) {
        bool ok = true;
        try {
            exceptional_simplest_embedding_index(t);
        } catch (const std::logic_error&) {
            ok = false;
        }
        c.expect(ok, [&] { return t.name() + ": simplest embedding index disagrees with table"; });
    }
    return c.take();
}

inline CheckResult check_integrality(const VerifyConfig& cfg) {
    Checker c("integrality");
    const int bound = cfg.max_integrality_coord;
    for (const auto& t : all_types(cfg.max_integrality_rank)) {
        if (t.rank > cfg.max_integrality_rank) continue;
        const RootSystem rs(t);
        const WeightForm form(rs);
        std::vector<Integer> w(t.rank, 0);
        while (true) {
            const HighestWeight hw(w);
            c.expect(dynkin_index_irrep(form, hw).is_integer, [&] {
                std::string s = t.name() + ": non-integral index at (";
                for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].str();
                return s + ")";
            });
            std::size_t i = 0;
            while (i < w.size() && w[i] == bound) w[i++] = 0;
            if (i == w.size()) break;
            ++w[i];
        }
    }
    return c.take();
}

inline CheckResult check_routes(const VerifyConfig& cfg) {
    Checker c("routes");
    for (auto kind : classical_kinds()) {
        for (int n = 2; n <= cfg.max_partition_size; ++n) {
            if (kind == ClassicalKind::SP && n % 2) continue;
            if (kind == ClassicalKind::SO && n < 3) continue;
            for (const auto& p : enumerate_orbits(kind, n)) {
                if (p.is_zero()) continue;
                c.expect(sl2_index_classical(kind, p) == index_via_adjoint(kind, p), [&] {
                    return kind_name(kind) + "_" + std::to_string(n) + " (" + p.str() +
                           "): partition and adjoint routes differ";
                });
                const Rational value = sl2_index_classical(kind, p);
                c.expect(is_integer(value), [&] {
                    return kind_name(kind) + " (" + p.str() + "): half-integral index " + value.str();
                });
            }
        }
    }
    return c.take();
}

inline CheckResult check_minimal(const VerifyConfig& cfg) {
    Checker c("minimal-orbit");
    for (int n = 2; n <= cfg.max_minimal_n; ++n) {
        std::vector<int> parts(n - 1, 1);
        parts[0] = 2;
        const Partition p(parts);
        c.expect(sl2_index_classical(ClassicalKind::SL, p) == 1,
                 [&] { return "sl_" + std::to_string(n) + ": minimal index != 1"; });
        if (n % 2 == 0) {
            c.expect(sl2_index_classical(ClassicalKind::SP, p) == 1,
                     [&] { return "sp_" + std::to_string(n) + ": minimal index != 1"; });
        }
        if (n >= 4) {
            std::vector<int> q(n - 2, 1);
            q[0] = q[1] = 2;
            c.expect(sl2_index_classical(ClassicalKind::SO, Partition(q)) == 1,
                     [&] { return "so_" + std::to_string(n) + ": minimal index != 1"; });
        }
    }
    return c.take();
}

inline CheckResult check_identities(const VerifyConfig& cfg) {
    Checker c("identities");
    for (auto kind : classical_kinds()) {
        for (const auto& inst : identity_sweep(kind, cfg.max_identity_n)) {
            c.expect(inst.holds, [&] {
                return kind_name(kind) + " identity fails at (" + inst.partition.str() +
                       "): " + inst.lhs.str() + " != " + inst.rhs.str();
            });
        }
    }
    return c.take();
}

inline CheckResult check_monotonicity(const VerifyConfig& cfg) {
    Checker c("monotonicity");
    for (auto kind : classical_kinds()) {
        for (int n = 2; n <= cfg.max_partition_size; ++n) {
            if (kind == ClassicalKind::SP && n % 2) continue;
            c.expect(monotonicity_check(kind, n), [&] {
                return kind_name(kind) + "_" + std::to_string(n) + ": index not decreasing on a cover";
            });
            if (n <= cfg.max_comparable_n) {
                c.expect(comparability_check(kind, n), [&] {
                    return kind_name(kind) + "_" + std::to_string(n) +
                           ": index not decreasing on a comparable pair";
                });
            }
        }
    }
    return c.take();
}

inline CheckResult check_difference_bounds(const VerifyConfig& cfg) {
    const auto report = difference_bounds_checks(cfg.max_classical_rank);
    return {"difference-bounds", static_cast<long>(report.rows.size()), report.violations};
}

}  // namespace detail

/// Names accepted by VerifyConfig::only, in execution order.
inline const std::vector<std::pair<std::string, CheckResult (*)(const VerifyConfig&)>>&
check_families() {
    static const std::vector<std::pair<std::string, CheckResult (*)(const VerifyConfig&)>> f{
        {"roots", detail::check_roots},
        {"strange", detail::check_strange},
        {"unfolding", detail::check_unfolding},
        {"principal", detail::check_principal},
        {"difference", detail::check_difference},
        {"reps", detail::check_reps},
        {"integrality", detail::check_integrality},
        {"routes", detail::check_routes},
        {"minimal", detail::check_minimal},
        {"identities", detail::check_identities},
        {"monotonicity", detail::check_monotonicity},
        {"difference-bounds", detail::check_difference_bounds},
    };
    return f;
}

inline std::vector<CheckResult> run_verify(const VerifyConfig& cfg) {
    cfg.validate();
    for (const auto& name : cfg.only) {
        const auto& f = check_families();
        if (std::none_of(f.begin(), f.end(), [&](const auto& e) { return e.first == name; })) {
            throw std::invalid_argument("unknown check family '" + name + "'");
        }
    }
    std::vector<CheckResult> out;
    for (const auto& [name, run] : check_families()) {
        if (!cfg.only.empty() && !cfg.only.contains(name)) continue;
        out.push_back(run(cfg));
        out.back().name = name;
    }
    return out;
}

}  // namespace dynkin
