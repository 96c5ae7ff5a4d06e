#pragma once

// Indices of sl2-subalgebras.
//
// A nilpotent element of a classical algebra g(V) is described by the
// partition of dim V given by its Jordan blocks; the associated sl2 acts on V
// as the sum of R_{lambda_i - 1}.  Everything here reduces to the index
// C(d+2, 3) of the irreducible module R_d, combined along several
// independent routes that must agree exactly.

#include "dynkin/rational.hpp"
#include "dynkin/reps.hpp"
#include "dynkin/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dynkin {

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;

    /// Parts in any order; they are sorted decreasingly.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("empty partition");
        for (int p : parts_) {
            if (p <= 0) throw std::invalid_argument("partition parts must be positive");
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (part, part, ..., part), count times.
    static Partition repeated(int part, int count) { return Partition(std::vector<int>(count, part)); }

    /// Comma-separated parts, e.g. "3,2,2,1".
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            const auto b = item.find_first_not_of(" \t");
            const auto e = item.find_last_not_of(" \t");
            if (b == std::string::npos) throw std::invalid_argument("empty part in '" + text + "'");
            item = item.substr(b, e - b + 1);
            if (!std::all_of(item.begin(), item.end(),
                             [](char c) { return c >= '0' && c <= '9'; }) ||
                item.size() > 6) {
                throw std::invalid_argument("bad part '" + item + "' in '" + text + "'");
            }
            parts.push_back(std::stoi(item));
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    /// All parts equal to 1: the zero nilpotent.
    bool is_zero() const { return parts_.front() == 1; }

    int multiplicity(int part) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Multiset of highest weights d, one entry per copy of R_d; kept sorted decreasingly.
class Sl2Module {
public:
    Sl2Module() = default;
    explicit Sl2Module(std::vector<int> components) : components_(std::move(components)) {
        for (int d : components_) {
            if (d < 0) throw std::invalid_argument("negative sl2 highest weight");
        }
        std::sort(components_.begin(), components_.end(), std::greater<>());
    }
    Sl2Module(std::initializer_list<int> c) : Sl2Module(std::vector<int>(c)) {}

    const std::vector<int>& components() const { return components_; }

    Integer dimension() const {
        Integer s = 0;
        for (int d : components_) s += d + 1;
        return s;
    }

    Sl2Module& operator+=(const Sl2Module& other) {
        std::vector<int> merged;
        merged.reserve(components_.size() + other.components_.size());
        std::merge(components_.begin(), components_.end(), other.components_.begin(),
                   other.components_.end(), std::back_inserter(merged), std::greater<>());
        components_ = std::move(merged);
        return *this;
    }

    friend Sl2Module operator+(Sl2Module a, const Sl2Module& b) { return a += b; }

    /// Removes one copy of R_d; throws if there is none.
    void remove_one(int d) {
        auto it = std::find(components_.begin(), components_.end(), d);
        if (it == components_.end()) {
            throw std::logic_error("module has no component R_" + std::to_string(d));
        }
        components_.erase(it);
    }

    friend bool operator==(const Sl2Module&, const Sl2Module&) = default;

private:
    std::vector<int> components_;
};

/// ind_D(sl2, M) = sum of C(d+2, 3).
inline Integer sl2_module_index(const Sl2Module& m) {
    Integer s = 0;
    for (int d : m.components()) s += choose3(d + 2);
    return s;
}

/// Parity conditions: sp needs odd parts with even multiplicity and even
/// size; so needs even parts with even multiplicity.
inline bool validate_partition(ClassicalKind kind, const Partition& p) {
    if (kind == ClassicalKind::SL) return true;
    if (kind == ClassicalKind::SP && p.size() % 2 != 0) return false;
    const int restricted = kind == ClassicalKind::SP ? 1 : 0;
    for (std::size_t i = 0; i < p.length();) {
        std::size_t j = i;
        while (j < p.length() && p[j] == p[i]) ++j;
        if (p[i] % 2 == restricted && (j - i) % 2 != 0) return false;
        i = j;
    }
    return true;
}

/// V restricted to the sl2: one R_{lambda_i - 1} per part.
inline Sl2Module branch_v(const Partition& p) {
    std::vector<int> c;
    for (int part : p.parts()) c.push_back(part - 1);
    return Sl2Module(std::move(c));
}

namespace detail {

inline void require_nonzero_admissible(ClassicalKind kind, const Partition& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("partition " + p.str() +
                                    " is the zero nilpotent; it has no sl2-subalgebra");
    }
    if (!validate_partition(kind, p)) {
        throw std::invalid_argument("partition " + p.str() + " violates the parity conditions for " +
                                    kind_name(kind) + "_" + std::to_string(p.size()));
    }
}

}  // namespace detail

/// Index of A1(e) in sl(V), sp(V) or so(V) from the Jordan type of e.
inline Rational sl2_index_classical(ClassicalKind kind, const Partition& p) {
    detail::require_nonzero_admissible(kind, p);
    Integer s = 0;
    for (int part : p.parts()) s += choose3(part + 1);
    return Rational(s, vector_rep_index(kind));
}

/// R_a (x) R_b = sum_{k=0}^{min(a,b)} R_{a+b-2k}.
inline Sl2Module clebsch_gordan(int a, int b) {
    std::vector<int> c;
    for (int k = 0; k <= std::min(a, b); ++k) c.push_back(a + b - 2 * k);
    return Sl2Module(std::move(c));
}

/// S^2(R_m) = R_{2m} + R_{2m-4} + ...
inline Sl2Module sym2(int m) {
    std::vector<int> c;
    for (int d = 2 * m; d >= 0; d -= 4) c.push_back(d);
    return Sl2Module(std::move(c));
}

/// Lambda^2(R_m) = R_{2m-2} + R_{2m-6} + ...
inline Sl2Module wedge2(int m) {
    std::vector<int> c;
    for (int d = 2 * m - 2; d >= 0; d -= 4) c.push_back(d);
    return Sl2Module(std::move(c));
}

/// g(V) restricted to A1(e): V (x) V* minus a trivial summand for sl,
/// S^2 V for sp and Lambda^2 V for so.
inline Sl2Module branch_adjoint(ClassicalKind kind, const Partition& p) {
    detail::require_nonzero_admissible(kind, p);
    const auto& parts = p.parts();
    Sl2Module out;
    if (kind == ClassicalKind::SL) {
        for (int a : parts) {
            for (int b : parts) out += clebsch_gordan(a - 1, b - 1);
        }
        out.remove_one(0);
        return out;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            out += clebsch_gordan(parts[i] - 1, parts[j] - 1);
        }
        out += kind == ClassicalKind::SP ? sym2(parts[i] - 1) : wedge2(parts[i] - 1);
    }
    return out;
}

/// h* of sl_N, sp_N, so_N as a function of N = dim V.
inline int classical_dual_coxeter(ClassicalKind kind, int n) {
    switch (kind) {
    case ClassicalKind::SL: return n;
    case ClassicalKind::SP: return n / 2 + 1;
    case ClassicalKind::SO: return n - 2;
    }
    return 0;
}

/// ind(A1(e) -> g) = ind_D(A1(e), g) / (2 h*(g)).
inline Rational index_via_adjoint(ClassicalKind kind, const Partition& p) {
    const int hstar = classical_dual_coxeter(kind, p.size());
    if (hstar <= 0) {
        throw std::invalid_argument(kind_name(kind) + "_" + std::to_string(p.size()) +
                                    " has no adjoint test module");
    }
    return Rational(sl2_module_index(branch_adjoint(kind, p)), 2 * hstar);
}

/// Index of A1(e) in an exceptional algebra, from the Jordan type of e in
/// the simplest representation.  The partition is user data; only its size
/// and the parity conditions of the target classical algebra are checked.
inline Rational index_via_simplest_rep(const LieType& type, const Partition& p) {
    const SimplestRep rep = simplest_rep(type);
    if (p.size() != rep.dimension) {
        throw std::invalid_argument("partition " + p.str() + " has size " +
                                    std::to_string(p.size()) + ", the simplest representation of " +
                                    type.name() + " has dimension " +
                                    std::to_string(rep.dimension));
    }
    const Rational in_target = sl2_index_classical(rep.target, p);
    const Rational value = in_target / tabulated_simplest_embedding_index(type);
    if (!is_integer(value)) {
        throw std::invalid_argument("partition " + p.str() + " gives non-integral index " +
                                    value.str() + "; it is not a Jordan type of a nilpotent in " +
                                    type.name());
    }
    return value;
}

/// One value computed along several routes.
struct IndexReport {
    Rational value;
    std::map<std::string, Rational> routes;

    void add(const std::string& route, const Rational& v) {
        if (routes.empty()) value = v;
        routes[route] = v;
    }

    bool agree() const {
        for (const auto& [name, v] : routes) {
            if (v != value) return false;
        }
        return true;
    }
};

/// Classical algebra g(V) for a classical type: kind and dim V.
inline std::optional<std::pair<ClassicalKind, int>> matrix_form(const LieType& type) {
    switch (type.family) {
    case Family::A: return std::pair{ClassicalKind::SL, type.rank + 1};
    case Family::B: return std::pair{ClassicalKind::SO, 2 * type.rank + 1};
    case Family::C: return std::pair{ClassicalKind::SP, 2 * type.rank};
    case Family::D: return std::pair{ClassicalKind::SO, 2 * type.rank};
    default: return std::nullopt;
    }
}

/// Jordan type of a principal nilpotent in the vector representation.
inline Partition principal_partition(const LieType& type) {
    const auto form = matrix_form(type);
    if (!form) throw std::invalid_argument(type.name() + " is not classical");
    if (type.family == Family::D) return Partition{2 * type.rank - 1, 1};
    return Partition{form->second};
}

/// Jordan type of a principal nilpotent acting on V(lambda).
///
/// The principal specialization of the Weyl character is
///   prod_{gamma > 0} (y^{a_gamma} - 1) / (y^{b_gamma} - 1),
/// with a_gamma = (lambda + rho, gamma^vee), b_gamma = (rho, gamma^vee); the
/// coefficient of y^k counts weights with h-eigenvalue 2k - (lambda, 2 rho^vee).
/// Peeling sl2 strings off that character gives the Jordan blocks.
inline Partition principal_jordan_type(const RootSystem& rs, const HighestWeight& w) {
    if (WeightForm(rs).weyl_dimension(w) > 1000000) {
        throw std::invalid_argument("representation too large for an explicit Jordan type");
    }
    std::vector<long> a;
    std::vector<long> b;
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
        const auto& cc = rs.coroot_coords(k);
        long sa = 0;
        long sb = 0;
        for (std::size_t j = 0; j < cc.size(); ++j) {
            sa += cc[j] * (static_cast<long>(w.coords[j]) + 1);
            sb += cc[j];
        }
        a.push_back(sa);
        b.push_back(sb);
    }
    long top = 0;
    for (std::size_t k = 0; k < a.size(); ++k) top += a[k] - b[k];

    std::vector<Integer> poly{1};
    for (long e : a) {
        std::vector<Integer> next(poly.size() + e, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + e] += poly[i];
            next[i] -= poly[i];
        }
        poly = std::move(next);
    }
    for (long e : b) {
        // exact division by y^e - 1, from the top coefficient down
        const std::size_t deg = poly.size() - 1;
        std::vector<Integer> q(deg - e + 1, 0);
        for (std::size_t i = q.size(); i-- > 0;) {
            q[i] = poly[i + e] + (i + e < q.size() ? q[i + e] : Integer(0));
        }
        for (long i = 0; i < e; ++i) {
            const Integer rem = poly[i] + (static_cast<std::size_t>(i) < q.size() ? q[i] : Integer(0));
            if (rem != 0) throw std::logic_error("graded character is not a polynomial");
        }
        poly = std::move(q);
    }
    if (static_cast<long>(poly.size()) - 1 != top) throw std::logic_error("graded character has wrong degree");

    // poly is palindromic; strings start where the multiplicity jumps.
    std::vector<int> parts;
    for (long k = top / 2; k >= 0; --k) {
        const Integer jump = poly[k] - (k > 0 ? poly[k - 1] : Integer(0));
        if (jump < 0) throw std::logic_error("graded character is not unimodal");
        for (Integer i = 0; i < jump; ++i) parts.push_back(static_cast<int>(top - 2 * k + 1));
    }
    return Partition(parts);
}

/// Principal sl2 index along every available route.
inline IndexReport principal_index(const RootSystem& rs) {
    IndexReport rep;
    const int hstar = dual_coxeter_number(rs);
    rep.add("dual-coxeter", Rational(rs.dimension()) * dual_coxeter_of_dual(rs) * rs.r() / 6);
    rep.add("coroot-norm", rho_check_norm_squared_twice(rs));
    const auto sums = height_sums(rs);
    rep.add("height-sum", Rational(sums.long_sum + rs.r() * sums.short_sum));
    Integer kostant = 0;
    for (int m : exponents(rs)) kostant += choose3(2 * m + 2);
    rep.add("kostant", Rational(kostant, 2 * hstar));
    if (const auto form = matrix_form(rs.type())) {
        const Partition p = principal_partition(rs.type());
        rep.add("partition", sl2_index_classical(form->first, p));
        rep.add("adjoint-branching", index_via_adjoint(form->first, p));
    } else {
        const SimplestRep simplest = simplest_rep(rs.type());
        const auto w = HighestWeight::fundamental(rs.rank(), simplest.fundamental);
        rep.add("simplest-rep", index_via_simplest_rep(rs.type(), principal_jordan_type(rs, w)));
    }
    return rep;
}

/// Degrees (a, b, h) with a + b = h + 2; a*b/2 is the order of the finite
/// subgroup of SL_2 attached to g.
struct McKayData {
    int a = 0;
    int b = 0;
    int h = 0;
    int group_order = 0;
};

inline McKayData mckay_data(const RootSystem& rs) {
    const LieType& t = rs.type();
    if (t.rank < 2) throw std::invalid_argument(t.name() + " has no subregular orbit");
    const int n = t.rank;
    std::pair<int, int> ab;
    switch (t.family) {
    case Family::A: ab = {2, n + 1}; break;
    case Family::B: ab = {2, 2 * n}; break;
    case Family::C: ab = {4, 2 * n - 2}; break;
    case Family::D: ab = {4, 2 * n - 4}; break;
    case Family::E: ab = n == 6 ? std::pair{6, 8} : n == 7 ? std::pair{8, 12} : std::pair{12, 20}; break;
    case Family::F: ab = {6, 8}; break;
    case Family::G: ab = {4, 4}; break;
    }
    // C_2 = B_2 lists (4, 2)
    if (ab.first > ab.second) std::swap(ab.first, ab.second);
    McKayData m{ab.first, ab.second, coxeter_number(rs), ab.first * ab.second / 2};
    if (m.a + m.b != m.h + 2) {
        throw std::logic_error("McKay data for " + t.name() + " violates a + b = h + 2");
    }
    return m;
}

inline McKayData mckay_data(const LieType& type) { return mckay_data(RootSystem(type)); }

/// Coefficients of (1 + T^h) / ((1 - T^a)(1 - T^b)) up to the given degree.
inline std::vector<Integer> poincare_series(const McKayData& m, int degree) {
    std::vector<Integer> c(degree + 1, 0);
    for (int i = 0; i * m.a <= degree; ++i) {
        for (int j = 0; i * m.a + j * m.b <= degree; ++j) {
            const int d = i * m.a + j * m.b;
            c[d] += 1;
            if (d + m.h <= degree) c[d + m.h] += 1;
        }
    }
    return c;
}

/// g restricted to a subregular sl2:
/// R_{2m_1} + ... + R_{2m_{n-1}} + R_{a-2} + R_{b-2} + R_{h-2}.
inline Sl2Module subregular_module(const RootSystem& rs) {
    const McKayData m = mckay_data(rs);
    const auto ex = exponents(rs);
    const std::size_t n = ex.size();
    if (ex.front() != 1 || ex.back() != m.h - 1 || !(ex[0] < ex[1]) || !(ex[n - 2] < ex[n - 1])) {
        throw std::logic_error("exponents of " + rs.type().name() +
                               " do not satisfy 1 = m_1 < m_2 <= ... <= m_{n-1} < m_n = h - 1");
    }
    std::vector<int> c;
    for (std::size_t i = 0; i + 1 < n; ++i) c.push_back(2 * ex[i]);
    c.push_back(m.a - 2);
    c.push_back(m.b - 2);
    c.push_back(m.h - 2);
    return Sl2Module(std::move(c));
}

/// Difference of the principal and subregular indices.
inline IndexReport difference_d(const RootSystem& rs) {
    const McKayData m = mckay_data(rs);
    const int hstar = dual_coxeter_number(rs);
    const Rational h_over_hstar(m.h, hstar);
    IndexReport rep;
    rep.add("closed-form",
            h_over_hstar * (Rational(binomial(m.h, 2)) + Rational((m.a - 2) * (m.b - 2), 4)));
    rep.add("group-order", h_over_hstar * Rational(m.h * (m.h - 2) + m.group_order, 2));
    rep.add("binomial",
            Rational(choose3(2 * m.h) - choose3(m.h) - choose3(m.a) - choose3(m.b), 2 * hstar));
    const Rational subregular(sl2_module_index(subregular_module(rs)), 2 * hstar);
    rep.add("module-difference", principal_index(rs).value - subregular);
    return rep;
}

/// Subregular sl2 index.
inline Rational subregular_index(const RootSystem& rs) {
    return Rational(sl2_module_index(subregular_module(rs)), 2 * dual_coxeter_number(rs));
}

/// One type's entry in the sweep of bounds on the principal/subregular difference.
struct DifferenceBoundsRow {
    LieType type;
    Rational d;
    int h = 0;
    int b = 0;
    Rational ratio;  // D / (b * rank)
    bool within_2h = false;
    bool equal_2h = false;
    bool within_3b = false;
    bool equal_3b = false;
};

struct DifferenceBoundsReport {
    std::vector<DifferenceBoundsRow> rows;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

/// Expected D / (b * rank) on the classical series.
inline std::optional<Rational> series_ratio(Family f) {
    switch (f) {
    case Family::A: return Rational(1, 2);
    case Family::B: return Rational(1);
    case Family::C: return Rational(2);
    case Family::D: return Rational(1);
    default: return std::nullopt;
    }
}

/// Checks D <= 2h*rank and D <= 3b*rank (equality exactly for G2, F4, E8),
/// the constant ratio D/(b*rank) per classical series, and integrality of
/// D/rank for even h, on all types of rank 2..max_rank plus the exceptional ones.
inline DifferenceBoundsReport difference_bounds_checks(int max_rank) {
    DifferenceBoundsReport report;
    auto fail = [&](const LieType& t, const std::string& what) {
        report.violations.push_back(t.name() + ": " + what);
    };
    auto types = types_up_to_rank(2, max_rank);
    for (const auto& t : exceptional_types()) {
        if (std::find(types.begin(), types.end(), t) == types.end()) types.push_back(t);
    }
    for (const auto& t : types) {
        const RootSystem rs(t);
        const auto diff = difference_d(rs);
        if (!diff.agree()) fail(t, "routes for D disagree");
        const McKayData m = mckay_data(rs);
        const int n = t.rank;
        DifferenceBoundsRow row{t, diff.value, m.h, m.b, diff.value / (m.b * n)};
        row.within_2h = row.d <= 2 * m.h * n;
        row.equal_2h = row.d == 2 * m.h * n;
        row.within_3b = row.d <= 3 * m.b * n;
        row.equal_3b = row.d == 3 * m.b * n;
        const bool extremal = t == LieType{Family::G, 2} || t == LieType{Family::F, 4} ||
                              t == LieType{Family::E, 8};
        if (!row.within_2h) fail(t, "D = " + row.d.str() + " exceeds 2h*rank");
        if (!row.within_3b) fail(t, "D = " + row.d.str() + " exceeds 3b*rank");
        if (row.equal_2h != extremal) fail(t, "equality in D <= 2h*rank is unexpected");
        if (row.equal_3b != extremal) fail(t, "equality in D <= 3b*rank is unexpected");
        if (const auto expected = series_ratio(t.family); expected && row.ratio != *expected) {
            fail(t, "D/(b*rank) = " + row.ratio.str() + ", expected " + expected->str());
        }
        if (m.h % 2 == 0 && !is_integer(row.d / n)) fail(t, "D/rank is not an integer");
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace dynkin
