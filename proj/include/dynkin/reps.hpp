#pragma once

// Dynkin indices of irreducible representations and embedding indices.

#include "dynkin/rational.hpp"
#include "dynkin/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynkin {

/// Dominant integral weight in the fundamental-weight basis.
struct HighestWeight {
    std::vector<Integer> coords;

    HighestWeight() = default;
    explicit HighestWeight(std::vector<Integer> c) : coords(std::move(c)) {
        for (const auto& x : coords) {
            if (x < 0) throw std::invalid_argument("highest weight has a negative coordinate");
        }
    }
    HighestWeight(std::initializer_list<int> c) : HighestWeight(std::vector<Integer>(c.begin(), c.end())) {}

    /// Fundamental weight omega_i, 1-based as in Bourbaki.
    static HighestWeight fundamental(int rank, int i) {
        std::vector<Integer> c(rank, 0);
        c.at(i - 1) = 1;
        return HighestWeight(std::move(c));
    }

    bool is_zero() const {
        for (const auto& x : coords) {
            if (x != 0) return false;
        }
        return true;
    }
};

struct RepIndexReport {
    Integer dimension;
    Rational index;
    bool is_integer = true;
    bool is_trivial = false;
};

namespace detail {

inline RationalMatrix inverse(const IntMatrix& a) {
    const std::size_t n = a.size();
    RationalMatrix m(n, RationalVector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular Cartan matrix");
        std::swap(m[pivot], m[col]);
        const Rational inv = 1 / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational f = m[row][col];
            for (std::size_t k = col; k < 2 * n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    RationalMatrix out(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
    }
    return out;
}

}  // namespace detail

/// Precomputed pairings of fundamental weights for one root system.
///
/// Holding one of these across a sweep avoids inverting the Cartan matrix
/// for every weight.
class WeightForm {
public:
    explicit WeightForm(const RootSystem& rs) : rs_(&rs) {
        const int n = rs.rank();
        const auto inv = detail::inverse(rs.cartan());
        // (omega_i, alpha_k) = delta_ik len_i / 2, and omega_j = sum_k inv[k][j] alpha_k.
        omega_gram_.assign(n, RationalVector(n));
        omega_two_rho_.assign(n, Rational(0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                omega_gram_[i][j] = inv[i][j] * rs.simple_lengths()[i] / 2;
            }
            omega_two_rho_[i] = rs.rho()[i] * rs.simple_lengths()[i];
        }
        // rho = sum_i omega_i, so (rho + lambda, gamma^vee) = sum_j corootcoord_j (c_j + 1).
        rho_denominator_ = 1;
        for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
            int s = 0;
            for (int c : rs.coroot_coords(k)) s += c;
            rho_denominator_ *= s;
        }
        // Integer copies scaled by the common denominator, for casimir().
        form_scale_ = 1;
        for (int i = 0; i < n; ++i) {
            form_scale_ = boost::multiprecision::lcm(form_scale_, denominator(omega_two_rho_[i]));
            for (int j = 0; j < n; ++j) {
                form_scale_ = boost::multiprecision::lcm(form_scale_, denominator(omega_gram_[i][j]));
            }
        }
        scaled_gram_.assign(n, std::vector<Integer>(n));
        scaled_two_rho_.assign(n, Integer(0));
        for (int i = 0; i < n; ++i) {
            scaled_two_rho_[i] = to_integer(omega_two_rho_[i] * form_scale_);
            for (int j = 0; j < n; ++j) scaled_gram_[i][j] = to_integer(omega_gram_[i][j] * form_scale_);
        }
    }

    const RootSystem& roots() const { return *rs_; }

    /// (omega_i, omega_j).
    const RationalMatrix& omega_gram() const { return omega_gram_; }

    void check(const HighestWeight& w) const {
        if (static_cast<int>(w.coords.size()) != rs_->rank()) {
            throw std::invalid_argument("highest weight has " + std::to_string(w.coords.size()) +
                                        " coordinates, rank of " + rs_->type().name() + " is " +
                                        std::to_string(rs_->rank()));
        }
    }

    Integer weyl_dimension(const HighestWeight& w) const {
        check(w);
        // Factors are usually tiny; batch them in a machine word before
        // multiplying into the big integer.
        constexpr std::uint64_t word_limit = std::uint64_t(1) << 31;
        const bool small = std::all_of(w.coords.begin(), w.coords.end(),
                                       [](const Integer& c) { return c < 1000000; });
        Integer num = 1;
        std::uint64_t batch = 1;
        for (std::size_t k = 0; k < rs_->positive_roots().size(); ++k) {
            const auto& cc = rs_->coroot_coords(k);
            if (small) {
                std::uint64_t s = 0;
                for (std::size_t j = 0; j < cc.size(); ++j) {
                    if (cc[j] != 0) s += cc[j] * (static_cast<std::uint64_t>(w.coords[j]) + 1);
                }
                if (batch >= word_limit || s >= word_limit) {
                    num *= batch;
                    batch = 1;
                }
                batch *= s;
                continue;
            }
            Integer s = 0;
            for (std::size_t j = 0; j < cc.size(); ++j) {
                if (cc[j] != 0) s += cc[j] * (w.coords[j] + 1);
            }
            num *= s;
        }
        num *= batch;
        return num / rho_denominator_;
    }

    /// (lambda, lambda + 2 rho).
    Rational casimir(const HighestWeight& w) const {
        check(w);
        const int n = rs_->rank();
        Integer s = 0;
        for (int i = 0; i < n; ++i) {
            if (w.coords[i] == 0) continue;
            Integer row = scaled_two_rho_[i];
            for (int j = 0; j < n; ++j) {
                if (w.coords[j] != 0) row += scaled_gram_[i][j] * w.coords[j];
            }
            s += row * w.coords[i];
        }
        return Rational(s, form_scale_);
    }

private:
    const RootSystem* rs_;
    RationalMatrix omega_gram_;
    RationalVector omega_two_rho_;
    Integer rho_denominator_;
    Integer form_scale_;
    std::vector<std::vector<Integer>> scaled_gram_;
    std::vector<Integer> scaled_two_rho_;
};

inline Integer weyl_dimension(const RootSystem& rs, const HighestWeight& w) {
    return WeightForm(rs).weyl_dimension(w);
}

inline RepIndexReport dynkin_index_irrep(const WeightForm& form, const HighestWeight& w) {
    RepIndexReport rep;
    rep.dimension = form.weyl_dimension(w);
    rep.index = Rational(rep.dimension) * form.casimir(w) / form.roots().dimension();
    rep.is_integer = is_integer(rep.index);
    rep.is_trivial = w.is_zero();
    return rep;
}

/// ind_D(g, V_lambda) = dim V_lambda / dim g * (lambda, lambda + 2 rho).
/// The zero weight yields the trivial module with index 0.
inline RepIndexReport dynkin_index_irrep(const RootSystem& rs, const HighestWeight& w) {
    return dynkin_index_irrep(WeightForm(rs), w);
}

/// Highest root as a weight: theta's pairings with the simple coroots.
inline HighestWeight highest_root_weight(const RootSystem& rs) {
    std::vector<Integer> c(rs.rank(), 0);
    const auto& theta = rs.theta().coords;
    for (int i = 0; i < rs.rank(); ++i) {
        int s = 0;
        for (int j = 0; j < rs.rank(); ++j) s += rs.cartan()[i][j] * theta[j];
        c[i] = s;
    }
    return HighestWeight(std::move(c));
}

/// ind_D(g, ad) = 2 h*.
inline int adjoint_index(const RootSystem& rs) { return 2 * dual_coxeter_number(rs); }

/// ind(s -> g) = ind_D(s, M) / ind_D(g, M).
inline Rational embedding_index_via_module(const Rational& index_s, const Rational& index_g) {
    if (index_g == 0) {
        throw std::invalid_argument("test module is trivial for g (index 0)");
    }
    return index_s / index_g;
}

/// ind_D(s, M) == ind_D(s, g) * ind_D(g, M) / (2 h*(g)).
inline bool chained_index_check(const RootSystem& g, const Rational& index_s_in_g,
                            const Rational& index_g_in_m, const Rational& index_s_in_m) {
    return index_s_in_m == index_s_in_g * index_g_in_m / (2 * dual_coxeter_number(g));
}

enum class ClassicalKind { SL, SP, SO };

inline std::string kind_name(ClassicalKind k) {
    switch (k) {
    case ClassicalKind::SL: return "sl";
    case ClassicalKind::SP: return "sp";
    case ClassicalKind::SO: return "so";
    }
    return "?";
}

/// ind_D(g(V), V): 1 for sl and sp, 2 for so.
inline int vector_rep_index(ClassicalKind k) { return k == ClassicalKind::SO ? 2 : 1; }

/// The smallest faithful representation of an exceptional algebra and the
/// classical algebra it lands in.
struct SimplestRep {
    LieType type;
    int fundamental;  // Bourbaki label
    int dimension;
    ClassicalKind target;
};

inline SimplestRep simplest_rep(const LieType& type) {
    if (type == LieType{Family::E, 6}) return {type, 1, 27, ClassicalKind::SL};
    if (type == LieType{Family::E, 7}) return {type, 7, 56, ClassicalKind::SP};
    if (type == LieType{Family::E, 8}) return {type, 8, 248, ClassicalKind::SO};
    if (type == LieType{Family::F, 4}) return {type, 4, 26, ClassicalKind::SO};
    if (type == LieType{Family::G, 2}) return {type, 1, 7, ClassicalKind::SO};
    throw std::invalid_argument(type.name() + " is not exceptional");
}

/// Tabulated index of the embedding of an exceptional algebra through its
/// simplest representation.
inline int tabulated_simplest_embedding_index(const LieType& type) {
    if (type == LieType{Family::E, 6}) return 6;
    if (type == LieType{Family::E, 7}) return 12;
    if (type == LieType{Family::E, 8}) return 30;
    if (type == LieType{Family::F, 4}) return 3;
    if (type == LieType{Family::G, 2}) return 1;
    throw std::invalid_argument(type.name() + " is not exceptional");
}

/// Recomputes the simplest-embedding index from the irrep index of the
/// simplest representation and checks it against the table.
inline Integer exceptional_simplest_embedding_index(const LieType& type) {
    const SimplestRep rep = simplest_rep(type);
    const RootSystem rs(type);
    const auto report =
        dynkin_index_irrep(rs, HighestWeight::fundamental(type.rank, rep.fundamental));
    if (report.dimension != rep.dimension) {
        throw std::logic_error("fundamental weight " + std::to_string(rep.fundamental) + " of " +
                               type.name() + " has dimension " + report.dimension.str());
    }
    const Integer computed =
        to_integer(embedding_index_via_module(report.index, vector_rep_index(rep.target)));
    if (computed != tabulated_simplest_embedding_index(type)) {
        throw std::logic_error("simplest embedding index of " + type.name() + " computed as " +
                               computed.str());
    }
    return computed;
}

}  // namespace dynkin
