#pragma once

// Root systems of the simple Lie algebras, built from Cartan data.
//
// Roots live in the simple-root basis as integer vectors.  The invariant form
// is a rational Gram matrix on the simple roots, scaled so that every long
// root has squared length 2.  Simple roots are numbered as in Bourbaki.

#include "dynkin/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dynkin {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

struct LieType {
    Family family;
    int rank;

    friend bool operator==(const LieType&, const LieType&) = default;

    bool is_exceptional() const {
        return family == Family::E || family == Family::F || family == Family::G;
    }

    bool is_simply_laced() const {
        return family == Family::A || family == Family::D || family == Family::E;
    }

    /// Throws std::invalid_argument unless the rank is allowed for the family.
    void validate() const {
        const auto fail = [&](const char* bound) {
            throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for type " +
                                        family_letter(family) + ": " + bound);
        };
        switch (family) {
        case Family::A: if (rank < 1) fail("need rank >= 1"); break;
        case Family::B: if (rank < 2) fail("need rank >= 2"); break;
        case Family::C: if (rank < 2) fail("need rank >= 2"); break;
        case Family::D: if (rank < 4) fail("need rank >= 4"); break;
        case Family::E: if (rank < 6 || rank > 8) fail("need rank 6, 7 or 8"); break;
        case Family::F: if (rank != 4) fail("need rank 4"); break;
        case Family::G: if (rank != 2) fail("need rank 2"); break;
        }
    }

    std::string name() const { return family_letter(family) + std::to_string(rank); }

    /// Accepts "E6", "e6", "E_6".
    static LieType parse(const std::string& text) {
        std::string s;
        for (char c : text) {
            if (c != '_' && !std::isspace(static_cast<unsigned char>(c))) s += c;
        }
        if (s.size() < 2) throw std::invalid_argument("cannot parse Lie type '" + text + "'");
        const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        if (letter < 'A' || letter > 'G') {
            throw std::invalid_argument("unknown family in '" + text + "'");
        }
        const std::string digits = s.substr(1);
        if (digits.empty() || digits.size() > 6 ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw std::invalid_argument("cannot parse rank in '" + text + "'");
        }
        LieType t{static_cast<Family>(letter - 'A'), std::stoi(digits)};
        t.validate();
        return t;
    }
};

/// Types that carry a table column: every exceptional type, and classical
/// series from the given rank range.
inline std::vector<LieType> exceptional_types() {
    return {{Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}};
}

/// All types of rank lo..hi, with the usual lower bounds C_n (n>=3) and D_n (n>=4).
inline std::vector<LieType> types_up_to_rank(int lo, int hi) {
    std::vector<LieType> out;
    for (int n = std::max(lo, 1); n <= hi; ++n) {
        out.push_back({Family::A, n});
        if (n >= 2) out.push_back({Family::B, n});
        if (n >= 3) out.push_back({Family::C, n});
        if (n >= 4) out.push_back({Family::D, n});
    }
    for (auto t : exceptional_types()) {
        if (t.rank >= lo && t.rank <= hi) out.push_back(t);
    }
    return out;
}

struct Root {
    std::vector<int> coords;  // simple-root basis
    int height = 0;
    bool is_long = true;
};

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<int>>;

/// Cartan matrix with entries a_ij = <alpha_i^vee, alpha_j>.
inline IntMatrix cartan_matrix(const LieType& type) {
    type.validate();
    const int n = type.rank;
    IntMatrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j, int aij = -1, int aji = -1) {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    switch (type.family) {
    case Family::A:
        for (int i = 1; i < n; ++i) link(i, i + 1);
        break;
    case Family::B:
        for (int i = 1; i < n - 1; ++i) link(i, i + 1);
        link(n - 1, n, -1, -2);  // alpha_n short
        break;
    case Family::C:
        for (int i = 1; i < n - 1; ++i) link(i, i + 1);
        link(n - 1, n, -2, -1);  // alpha_n long
        break;
    case Family::D:
        for (int i = 1; i < n - 1; ++i) link(i, i + 1);
        link(n - 2, n);
        break;
    case Family::E:
        link(1, 3);
        link(2, 4);
        for (int i = 3; i < n; ++i) link(i, i + 1);
        break;
    case Family::F:
        link(1, 2);
        link(2, 3, -1, -2);  // alpha_3, alpha_4 short
        link(3, 4);
        break;
    case Family::G:
        link(1, 2, -3, -1);  // alpha_1 short
        break;
    }
    return a;
}

namespace detail {

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/// Squared lengths of the simple roots, normalized so the longest is 2.
inline RationalVector simple_root_lengths(const IntMatrix& a) {
    const std::size_t n = a.size();
    RationalVector len(n, Rational(0));
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> todo;
    len[0] = 1;
    seen[0] = true;
    todo.push(0);
    while (!todo.empty()) {
        const auto i = todo.front();
        todo.pop();
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || a[i][j] == 0 || seen[j]) continue;
            // a_ij * len_i = a_ji * len_j
            len[j] = len[i] * a[i][j] / a[j][i];
            seen[j] = true;
            todo.push(j);
        }
    }
    const Rational longest = *std::max_element(len.begin(), len.end());
    for (auto& l : len) l = l * 2 / longest;
    return len;
}

}  // namespace detail

class RootSystem {
public:
    explicit RootSystem(LieType type) : type_(type), cartan_(cartan_matrix(type)) {
        const int n = type_.rank;
        lengths_ = detail::simple_root_lengths(cartan_);
        gram_.assign(n, RationalVector(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) gram_[i][j] = Rational(cartan_[i][j]) * lengths_[i] / 2;
        }
        // Integer copy of the form, scaled by the lcm of denominators, for fast length tests.
        Integer scale = 1;
        for (const auto& row : gram_) {
            for (const auto& g : row) scale = boost::multiprecision::lcm(scale, denominator(g));
        }
        scale_ = static_cast<std::int64_t>(scale);
        scaled_gram_.assign(n, std::vector<std::int64_t>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                scaled_gram_[i][j] = static_cast<std::int64_t>(to_integer(gram_[i][j] * scale));
            }
        }
        generate_roots();
        finish_invariants();
    }

    const LieType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const IntMatrix& cartan() const { return cartan_; }
    const RationalMatrix& gram() const { return gram_; }
    /// Squared lengths (alpha_i, alpha_i) of the simple roots.
    const RationalVector& simple_lengths() const { return lengths_; }
    const std::vector<Root>& positive_roots() const { return roots_; }
    const Root& theta() const { return roots_[theta_]; }
    const Root& theta_short() const { return roots_[theta_short_]; }
    int r() const { return r_; }
    const RationalVector& rho() const { return rho_; }
    const RationalVector& rho_check() const { return rho_check_; }
    int dimension() const { return rank() + 2 * static_cast<int>(roots_.size()); }

    /// Coordinates of gamma^vee in the simple-coroot basis.
    const std::vector<int>& coroot_coords(std::size_t root_index) const {
        return coroots_[root_index];
    }

    Rational inner(const RationalVector& x, const RationalVector& y) const {
        Rational s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < rank(); ++j) {
                if (y[j] != 0) s += x[i] * gram_[i][j] * y[j];
            }
        }
        return s;
    }

    Rational inner(const std::vector<int>& x, const std::vector<int>& y) const {
        return Rational(scaled_inner(x, y), scale_);
    }

    static RationalVector to_rational(const std::vector<int>& v) {
        return RationalVector(v.begin(), v.end());
    }

private:
    std::int64_t scaled_inner(const std::vector<int>& x, const std::vector<int>& y) const {
        std::int64_t s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < rank(); ++j) s += x[i] * scaled_gram_[i][j] * y[j];
        }
        return s;
    }

    void generate_roots() {
        const int n = rank();
        std::unordered_map<std::vector<int>, std::size_t, detail::VectorHash> index;
        std::vector<std::vector<int>> all;
        for (int i = 0; i < n; ++i) {
            std::vector<int> e(n, 0);
            e[i] = 1;
            index.emplace(e, all.size());
            all.push_back(e);
        }
        std::size_t level_begin = 0;
        while (level_begin < all.size()) {
            const std::size_t level_end = all.size();
            for (std::size_t k = level_begin; k < level_end; ++k) {
                for (int i = 0; i < n; ++i) {
                    std::vector<int> beta = all[k];
                    int pairing = 0;
                    for (int j = 0; j < n; ++j) pairing += cartan_[i][j] * beta[j];
                    // p = length of the alpha_i-string below beta
                    int p = 0;
                    std::vector<int> down = beta;
                    while (down[i] > 0) {
                        --down[i];
                        if (!index.contains(down)) break;
                        ++p;
                    }
                    if (p - pairing > 0) {
                        ++beta[i];
                        if (!index.contains(beta)) {
                            index.emplace(beta, all.size());
                            all.push_back(std::move(beta));
                        }
                    }
                }
            }
            level_begin = level_end;
        }

        const std::int64_t long_len = 2 * scale_;
        roots_.reserve(all.size());
        for (auto& v : all) {
            Root root;
            root.height = std::accumulate(v.begin(), v.end(), 0);
            root.is_long = scaled_inner(v, v) == long_len;
            root.coords = std::move(v);
            roots_.push_back(std::move(root));
        }
    }

    void finish_invariants() {
        const int n = rank();
        theta_ = 0;
        std::optional<std::size_t> short_top;
        for (std::size_t k = 0; k < roots_.size(); ++k) {
            if (roots_[k].height > roots_[theta_].height) theta_ = k;
            if (!roots_[k].is_long &&
                (!short_top || roots_[k].height > roots_[*short_top].height)) {
                short_top = k;
            }
        }
        theta_short_ = short_top.value_or(theta_);
        r_ = static_cast<int>(to_integer(Rational(2) / inner(theta_short().coords,
                                                               theta_short().coords)));

        // Squared lengths are 2 (long) or 2/r (short), so gamma / (gamma, gamma)
        // is gamma / 2 or r gamma / 2: accumulate both sums in machine integers.
        std::vector<std::int64_t> sum_all(n, 0);
        std::vector<std::int64_t> sum_check(n, 0);
        coroots_.reserve(roots_.size());
        for (const auto& root : roots_) {
            const std::int64_t len = scaled_inner(root.coords, root.coords);
            const std::int64_t weight = root.is_long ? 1 : r_;
            std::vector<int> coroot(n);
            for (int j = 0; j < n; ++j) {
                if (root.coords[j] == 0) continue;
                sum_all[j] += root.coords[j];
                sum_check[j] += weight * root.coords[j];
                coroot[j] = static_cast<int>(root.coords[j] * scaled_gram_[j][j] / len);
            }
            coroots_.push_back(std::move(coroot));
        }
        rho_.assign(n, Rational(0));
        rho_check_.assign(n, Rational(0));
        for (int j = 0; j < n; ++j) {
            rho_[j] = Rational(sum_all[j], 2);
            rho_check_[j] = Rational(sum_check[j], 2);
        }
    }

    LieType type_;
    IntMatrix cartan_;
    RationalVector lengths_;
    RationalMatrix gram_;
    std::int64_t scale_ = 1;
    std::vector<std::vector<std::int64_t>> scaled_gram_;
    std::vector<Root> roots_;
    std::vector<std::vector<int>> coroots_;
    std::size_t theta_ = 0;
    std::size_t theta_short_ = 0;
    int r_ = 1;
    RationalVector rho_;
    RationalVector rho_check_;
};

inline RootSystem build(LieType type) { return RootSystem(type); }

/// h = height(theta) + 1.
inline int coxeter_number(const RootSystem& rs) { return rs.theta().height + 1; }

/// h* = 1 + (rho, theta^vee).
inline int dual_coxeter_number(const RootSystem& rs) {
    const auto& theta = RootSystem::to_rational(rs.theta().coords);
    const Rational pairing = 2 * rs.inner(rs.rho(), theta) / rs.inner(theta, theta);
    return 1 + static_cast<int>(to_integer(pairing));
}

/// h*(g^vee) = 1 + height(theta_s).
inline int dual_coxeter_of_dual(const RootSystem& rs) { return 1 + rs.theta_short().height; }

/// Exponents as the conjugate of the root-height distribution, ascending.
inline std::vector<int> exponents(const RootSystem& rs) {
    const int h = coxeter_number(rs);
    std::vector<int> count(h + 1, 0);
    for (const auto& root : rs.positive_roots()) ++count[root.height];
    std::vector<int> out;
    for (int m = 1; m < h; ++m) {
        for (int c = count[m] - count[m + 1]; c > 0; --c) out.push_back(m);
    }
    return out;
}

struct HeightSums {
    Integer long_sum;
    Integer short_sum;
};

/// Height sums over long and short positive roots.  Simply-laced systems
/// report every root as short, so that long_sum + r * short_sum is uniform.
inline HeightSums height_sums(const RootSystem& rs) {
    HeightSums out{0, 0};
    const bool all_short = rs.type().is_simply_laced();
    for (const auto& root : rs.positive_roots()) {
        if (root.is_long && !all_short) {
            out.long_sum += root.height;
        } else {
            out.short_sum += root.height;
        }
    }
    return out;
}

/// 2 (rho^vee, rho^vee).
inline Rational rho_check_norm_squared_twice(const RootSystem& rs) {
    return 2 * rs.inner(rs.rho_check(), rs.rho_check());
}

/// (rho, rho) == dim g * h* / 12 with long roots of squared length 2.
inline bool strange_formula_check(const RootSystem& rs) {
    return rs.inner(rs.rho(), rs.rho()) ==
           Rational(rs.dimension()) * dual_coxeter_number(rs) / 12;
}

/// Simply-laced partner obtained by unfolding a multiply-laced diagram.
inline std::optional<LieType> unfolding_partner(const LieType& type) {
    switch (type.family) {
    case Family::C: return LieType{Family::A, 2 * type.rank - 1};
    case Family::B: return LieType{Family::D, type.rank + 1};
    case Family::F: return LieType{Family::E, 6};
    case Family::G: return LieType{Family::D, 4};
    default: return std::nullopt;
    }
}

}  // namespace dynkin
