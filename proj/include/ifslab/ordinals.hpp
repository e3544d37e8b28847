#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ifslab/geometry.hpp"

namespace ifslab {

/// Ordinal below omega^omega in Cantor normal form (strictly decreasing
/// exponents, positive coefficients), plus a dedicated marker for
/// omega^omega itself -- the one ordinal beyond finite CNF that the
/// constructions need.
struct CnfOrdinal {
    bool omega_omega = false;
    // (exponent, coefficient), exponents strictly decreasing, coefficients >= 1.
    std::vector<std::pair<std::uint32_t, std::uint64_t>> terms;

    static CnfOrdinal zero();
    static CnfOrdinal natural(std::uint64_t n);
    static CnfOrdinal omega();
    static CnfOrdinal omega_power(std::uint32_t exp, std::uint64_t coeff = 1);
    static CnfOrdinal omega_omega_marker();

    bool is_zero() const { return !omega_omega && terms.empty(); }
    bool is_marker() const { return omega_omega; }
    bool is_finite() const;
    bool is_limit() const;  // nonzero with no constant term (the marker counts)
    std::uint32_t leading_exponent() const;  // 0 for finite ordinals
};

/// Total order; the marker compares above every finite-CNF value.
int cnf_compare(const CnfOrdinal& a, const CnfOrdinal& b);

/// Ordinal addition (left argument absorbs its small terms). Not defined for
/// the marker.
CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b);

/// Does omega^k divide gamma? (0 is divisible by everything.)
bool cnf_divisible(const CnfOrdinal& gamma, std::uint32_t k);

/// Grammar: terms joined by '+', each `w^a*c`, `w^a`, `w*c`, `w`, or a
/// natural; the whole string may also be `w^w` or `0`.
CnfOrdinal parse_cnf(const std::string& text);
std::string format_cnf(const CnfOrdinal& value);

/// The set {gamma <= beta : omega^level divides gamma} with the order
/// topology; level 0 is the full interval [0, beta]. Represented
/// intensionally -- the underlying sets are infinite.
struct OrdinalSpace {
    CnfOrdinal beta;
    std::uint32_t level = 0;
    bool empty = false;

    static OrdinalSpace interval(CnfOrdinal beta);  // [0, beta] at level 0
};

/// Accumulation points: the largest multiple of omega^{level+1} that is <=
/// beta, at level + 1; empty when no positive multiple exists (finite
/// discrete spaces have empty derivative).
OrdinalSpace cb_derivative(const OrdinalSpace& space);

bool ordinal_space_is_discrete(const OrdinalSpace& space);

/// Membership of gamma in the space; at positive levels 0 is excluded (it is
/// never an accumulation point).
bool ordinal_space_contains(const OrdinalSpace& space, const CnfOrdinal& gamma);

/// Cantor-Bendixson height of [0, beta]: the leading exponent for finite-CNF
/// beta, omega for the marker, 0 for beta = 0.
CnfOrdinal height(const CnfOrdinal& beta);

enum class FractalClassification { obstructed_limit_height, unobstructed };

/// Spaces whose height is a limit ordinal are obstructed (they cannot carry a
/// topological self-map system); "unobstructed" makes no positive claim.
FractalClassification classify_topological_fractal(const CnfOrdinal& beta);

/// Order-reversing embedding of [0, beta] into [0, 1]: the top ordinal sits
/// at 0 and cluster blocks converge toward it, every infinite descent
/// truncated to `depth` blocks. For the marker, block n is a copy of
/// (omega^{n-1}, omega^n] placed inside [1/(n+1), 1/n]. Labels carry each
/// point's exact CNF string.
PointCloud embed_in_unit_interval(const CnfOrdinal& beta, std::size_t depth);

}  // namespace ifslab
