#pragma once

// Binomial identities obtained by computing the index of an sl2 in sl(V),
// sp(V) and so(V) through V and through the adjoint module.  They are formal
// in the parts, so they are evaluated on every partition, admissible or not.

#include "dynkin/orbits.hpp"
#include "dynkin/rational.hpp"
#include "dynkin/sl2index.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynkin {

/// sum_i C(lambda_i + 1, 3).
inline Integer identity_lhs(const Partition& p) {
    Integer s = 0;
    for (int part : p.parts()) s += choose3(part + 1);
    return s;
}

namespace detail {

/// sum_{i<j} sum_{k=0}^{lambda_j - 1} C(lambda_i + lambda_j - 2k, 3).
inline Integer cross_terms(const Partition& p) {
    Integer s = 0;
    for (std::size_t i = 0; i < p.length(); ++i) {
        for (std::size_t j = i + 1; j < p.length(); ++j) {
            for (int k = 0; k <= p[j] - 1; ++k) s += choose3(p[i] + p[j] - 2 * k);
        }
    }
    return s;
}

}  // namespace detail

/// (1 / 2N) sum_{i,j} sum_{k=0}^{min(lambda_i, lambda_j) - 1} C(lambda_i + lambda_j - 2k, 3).
inline Rational identity_rhs_sl(const Partition& p) {
    Integer s = 0;
    for (int a : p.parts()) {
        for (int b : p.parts()) {
            for (int k = 0; k <= std::min(a, b) - 1; ++k) s += choose3(a + b - 2 * k);
        }
    }
    return Rational(s, 2 * p.size());
}

/// Symplectic form: denominator N + 2, diagonal terms from S^2.
inline Rational identity_rhs_sp(const Partition& p) {
    Integer s = detail::cross_terms(p);
    for (int part : p.parts()) {
        for (int k = 0; k <= (part - 1) / 2; ++k) s += choose3(2 * part - 4 * k);
    }
    return Rational(s, p.size() + 2);
}

/// Orthogonal form: denominator N - 2, diagonal terms from Lambda^2.
inline Rational identity_rhs_so(const Partition& p) {
    if (p.size() == 2) {
        throw std::invalid_argument("orthogonal identity is undefined for partitions of 2");
    }
    Integer s = detail::cross_terms(p);
    for (int part : p.parts()) {
        for (int k = 1; k <= part / 2; ++k) s += choose3(2 * part + 2 - 4 * k);
    }
    return Rational(s, p.size() - 2);
}

struct IdentityInstance {
    ClassicalKind family;
    Partition partition;
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

inline Rational identity_rhs(ClassicalKind family, const Partition& p) {
    switch (family) {
    case ClassicalKind::SL: return identity_rhs_sl(p);
    case ClassicalKind::SP: return identity_rhs_sp(p);
    case ClassicalKind::SO: return identity_rhs_so(p);
    }
    throw std::logic_error("unknown family");
}

inline IdentityInstance evaluate_identity(ClassicalKind family, const Partition& p) {
    IdentityInstance inst{family, p, Rational(identity_lhs(p)), identity_rhs(family, p)};
    inst.holds = inst.lhs == inst.rhs;
    return inst;
}

/// Evaluates the identity on every partition of every n <= max_n (skipping
/// n = 2 for so) and stops at the first counterexample, which is then the
/// last instance returned.
inline std::vector<IdentityInstance> identity_sweep(ClassicalKind family, int max_n) {
    if (max_n < 1) throw std::invalid_argument("sweep needs max_n >= 1");
    std::vector<IdentityInstance> out;
    for (int n = 1; n <= max_n; ++n) {
        if (family == ClassicalKind::SO && n == 2) continue;
        for (const auto& p : partitions_of(n)) {
            out.push_back(evaluate_identity(family, p));
            if (!out.back().holds) return out;
        }
    }
    return out;
}

}  // namespace dynkin
