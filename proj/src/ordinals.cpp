#include "ifslab/ordinals.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ifslab {

namespace {

void validate_terms(const CnfOrdinal& v) {
    for (std::size_t i = 0; i < v.terms.size(); ++i) {
        if (v.terms[i].second == 0) {
            throw std::invalid_argument("CNF coefficients must be positive");
        }
        if (i > 0 && v.terms[i - 1].first <= v.terms[i].first) {
            throw std::invalid_argument("CNF exponents must strictly decrease");
        }
    }
}

}  // namespace

CnfOrdinal CnfOrdinal::zero() { return {}; }

CnfOrdinal CnfOrdinal::natural(std::uint64_t n) {
    CnfOrdinal v;
    if (n > 0) v.terms.push_back({0, n});
    return v;
}

CnfOrdinal CnfOrdinal::omega() { return omega_power(1); }

CnfOrdinal CnfOrdinal::omega_power(std::uint32_t exp, std::uint64_t coeff) {
    if (coeff == 0) return zero();
    CnfOrdinal v;
    v.terms.push_back({exp, coeff});
    return v;
}

CnfOrdinal CnfOrdinal::omega_omega_marker() {
    CnfOrdinal v;
    v.omega_omega = true;
    return v;
}

bool CnfOrdinal::is_finite() const {
    return !omega_omega && (terms.empty() || terms.front().first == 0);
}

bool CnfOrdinal::is_limit() const {
    if (omega_omega) return true;
    if (terms.empty()) return false;
    return terms.back().first >= 1;
}

std::uint32_t CnfOrdinal::leading_exponent() const {
    if (omega_omega) {
        throw std::invalid_argument("the omega^omega marker has no CNF exponent");
    }
    return terms.empty() ? 0 : terms.front().first;
}

int cnf_compare(const CnfOrdinal& a, const CnfOrdinal& b) {
    if (a.omega_omega || b.omega_omega) {
        if (a.omega_omega && b.omega_omega) return 0;
        return a.omega_omega ? 1 : -1;
    }
    const std::size_t n = std::min(a.terms.size(), b.terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.terms[i].first != b.terms[i].first) {
            return a.terms[i].first > b.terms[i].first ? 1 : -1;
        }
        if (a.terms[i].second != b.terms[i].second) {
            return a.terms[i].second > b.terms[i].second ? 1 : -1;
        }
    }
    if (a.terms.size() != b.terms.size()) {
        return a.terms.size() > b.terms.size() ? 1 : -1;
    }
    return 0;
}

CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b) {
    if (a.omega_omega || b.omega_omega) {
        throw std::invalid_argument("addition is not defined for the marker");
    }
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const std::uint32_t lead = b.terms.front().first;
    CnfOrdinal out;
    for (const auto& t : a.terms) {
        if (t.first > lead) out.terms.push_back(t);
    }
    // A surviving a-term of the same exponent merges with b's leading term.
    std::size_t b_start = 0;
    for (const auto& t : a.terms) {
        if (t.first == lead) {
            out.terms.push_back({lead, t.second + b.terms.front().second});
            b_start = 1;
            break;
        }
    }
    for (std::size_t i = b_start; i < b.terms.size(); ++i) {
        out.terms.push_back(b.terms[i]);
    }
    validate_terms(out);
    return out;
}

bool cnf_divisible(const CnfOrdinal& gamma, std::uint32_t k) {
    if (gamma.omega_omega) return true;
    if (gamma.is_zero()) return true;
    return gamma.terms.back().first >= k;
}

std::string format_cnf(const CnfOrdinal& value) {
    if (value.omega_omega) return "w^w";
    if (value.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < value.terms.size(); ++i) {
        const auto [exp, coeff] = value.terms[i];
        if (i > 0) out += " + ";
        if (exp == 0) {
            out += std::to_string(coeff);
            continue;
        }
        out += (exp == 1) ? "w" : "w^" + std::to_string(exp);
        if (coeff != 1) out += "*" + std::to_string(coeff);
    }
    return out;
}

CnfOrdinal parse_cnf(const std::string& text) {
    auto strip = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        if (b == std::string::npos) return std::string();
        return s.substr(b, e - b + 1);
    };
    const std::string whole = strip(text);
    if (whole.empty()) {
        throw std::invalid_argument("empty ordinal string");
    }
    if (whole == "w^w") return CnfOrdinal::omega_omega_marker();
    if (whole == "0") return CnfOrdinal::zero();

    auto parse_nat = [&](const std::string& s) -> std::uint64_t {
        if (s.empty() ||
            !std::all_of(s.begin(), s.end(),
                         [](unsigned char c) { return std::isdigit(c); })) {
            throw std::invalid_argument("expected a natural number, got '" + s + "'");
        }
        return std::stoull(s);
    };

    CnfOrdinal out;
    std::size_t pos = 0;
    while (pos <= whole.size()) {
        const std::size_t next = whole.find('+', pos);
        const std::string term =
            strip(whole.substr(pos, next == std::string::npos ? std::string::npos
                                                              : next - pos));
        if (term.empty()) {
            throw std::invalid_argument("empty term in ordinal string");
        }
        std::uint32_t exp = 0;
        std::uint64_t coeff = 0;
        if (term[0] == 'w') {
            std::size_t p = 1;
            exp = 1;
            if (p < term.size() && term[p] == '^') {
                const std::size_t star = term.find('*', p);
                const std::string e = strip(term.substr(
                    p + 1, star == std::string::npos ? std::string::npos
                                                     : star - p - 1));
                exp = static_cast<std::uint32_t>(parse_nat(e));
                p = (star == std::string::npos) ? term.size() : star;
            }
            coeff = 1;
            if (p < term.size() && term[p] == '*') {
                coeff = parse_nat(strip(term.substr(p + 1)));
            } else if (p < term.size() && term[p] != '^') {
                throw std::invalid_argument("malformed term '" + term + "'");
            }
            if (exp == 0) {
                throw std::invalid_argument("w^0 terms must be written as naturals");
            }
        } else {
            coeff = parse_nat(term);
            exp = 0;
        }
        if (coeff > 0) out.terms.push_back({exp, coeff});
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    validate_terms(out);
    return out;
}

OrdinalSpace OrdinalSpace::interval(CnfOrdinal beta) {
    OrdinalSpace s;
    s.beta = std::move(beta);
    return s;
}

OrdinalSpace cb_derivative(const OrdinalSpace& space) {
    OrdinalSpace out;
    out.level = space.level + 1;
    if (space.empty) {
        out.empty = true;
        return out;
    }
    if (space.beta.omega_omega) {
        out.beta = CnfOrdinal::omega_omega_marker();
        return out;
    }
    // Largest multiple of omega^{level+1} below beta: drop the small terms.
    for (const auto& t : space.beta.terms) {
        if (t.first >= out.level) out.beta.terms.push_back(t);
    }
    if (out.beta.is_zero()) out.empty = true;
    return out;
}

bool ordinal_space_is_discrete(const OrdinalSpace& space) {
    if (space.empty) return true;
    if (space.beta.omega_omega) return false;
    return space.beta.leading_exponent() <= space.level;
}

bool ordinal_space_contains(const OrdinalSpace& space, const CnfOrdinal& gamma) {
    if (space.empty) return false;
    if (cnf_compare(gamma, space.beta) > 0) return false;
    if (!cnf_divisible(gamma, space.level)) return false;
    if (space.level > 0 && gamma.is_zero()) return false;
    return true;
}

CnfOrdinal height(const CnfOrdinal& beta) {
    if (beta.omega_omega) return CnfOrdinal::omega();
    if (beta.is_zero()) return CnfOrdinal::zero();
    return CnfOrdinal::natural(beta.leading_exponent());
}

FractalClassification classify_topological_fractal(const CnfOrdinal& beta) {
    return height(beta).is_limit() ? FractalClassification::obstructed_limit_height
                                   : FractalClassification::unobstructed;
}

namespace {

struct EmbeddedPoint {
    CnfOrdinal ordinal;
    double x;
};

CnfOrdinal one_plus(const CnfOrdinal& gamma) {
    if (gamma.is_finite()) {
        const std::uint64_t v = gamma.is_zero() ? 0 : gamma.terms.front().second;
        return CnfOrdinal::natural(v + 1);
    }
    return gamma;  // 1 + gamma = gamma for infinite gamma
}

void embed_rec(const CnfOrdinal& beta, std::size_t depth, double lo, double hi,
               std::vector<EmbeddedPoint>& out) {
    if (beta.is_zero()) {
        out.push_back({beta, hi});
        return;
    }
    if (beta.is_finite()) {
        const std::uint64_t m = beta.terms.front().second;
        for (std::uint64_t g = 0; g <= m; ++g) {
            out.push_back({CnfOrdinal::natural(g),
                           hi - (hi - lo) * static_cast<double>(g) /
                               static_cast<double>(m)});
        }
        return;
    }
    const double span = hi - lo;
    if (!beta.is_limit()) {
        // Successor block: the top c points are isolated; they occupy the low
        // third, the infinite part [0, delta] the upper half.
        const std::uint64_t c = beta.terms.back().second;
        CnfOrdinal delta = beta;
        delta.terms.pop_back();
        for (std::uint64_t i = 1; i <= c; ++i) {
            out.push_back({cnf_add(delta, CnfOrdinal::natural(i)),
                           lo + (span / 3.0) * static_cast<double>(c - i) /
                               static_cast<double>(c)});
        }
        embed_rec(delta, depth, lo + span / 2.0, hi, out);
        return;
    }

    // Limit: peel one omega^e off the last term; the tail blocks
    // (delta + omega^{e-1} (j-1), delta + omega^{e-1} j] converge to beta.
    const std::uint32_t e = beta.terms.back().first;
    CnfOrdinal delta = beta;
    if (delta.terms.back().second == 1) {
        delta.terms.pop_back();
    } else {
        delta.terms.back().second -= 1;
    }
    out.push_back({beta, lo});
    double region = span;
    if (!delta.is_zero()) {
        region = span / 2.0;
        embed_rec(delta, depth, lo + 0.55 * span, hi, out);
    }
    for (std::size_t j = 1; j <= depth; ++j) {
        const double raw_lo = lo + region / static_cast<double>(j + 1);
        const double raw_hi = lo + region / static_cast<double>(j);
        const double inset = (raw_hi - raw_lo) / 5.0;
        const double b_lo = raw_lo + inset;
        const double b_hi = raw_hi - inset;
        if (e == 1) {
            out.push_back({cnf_add(delta, CnfOrdinal::natural(j)),
                           0.5 * (b_lo + b_hi)});
            continue;
        }
        const CnfOrdinal base =
            (j == 1) ? delta
                     : cnf_add(delta, CnfOrdinal::omega_power(
                                          e - 1, static_cast<std::uint64_t>(j - 1)));
        std::vector<EmbeddedPoint> block;
        embed_rec(CnfOrdinal::omega_power(e - 1), depth, b_lo, b_hi, block);
        for (EmbeddedPoint& p : block) {
            out.push_back({cnf_add(base, one_plus(p.ordinal)), p.x});
        }
    }
}

}  // namespace

PointCloud embed_in_unit_interval(const CnfOrdinal& beta, std::size_t depth) {
    if (depth < 1) {
        throw std::invalid_argument("embedding depth must be at least 1");
    }
    std::vector<EmbeddedPoint> pts;
    if (beta.omega_omega) {
        pts.push_back({CnfOrdinal::omega_omega_marker(), 0.0});
        for (std::size_t n = 1; n <= depth; ++n) {
            const double raw_lo = 1.0 / static_cast<double>(n + 1);
            const double raw_hi = 1.0 / static_cast<double>(n);
            const double inset = (raw_hi - raw_lo) / 5.0;
            std::vector<EmbeddedPoint> block;
            embed_rec(CnfOrdinal::omega_power(static_cast<std::uint32_t>(n)), depth,
                      raw_lo + inset, raw_hi - inset, block);
            const CnfOrdinal base =
                (n == 1) ? CnfOrdinal::zero()
                         : CnfOrdinal::omega_power(static_cast<std::uint32_t>(n - 1));
            for (EmbeddedPoint& p : block) {
                pts.push_back({cnf_add(base, one_plus(p.ordinal)), p.x});
            }
        }
    } else {
        embed_rec(beta, depth, 0.0, 1.0, pts);
    }

    std::sort(pts.begin(), pts.end(),
              [](const EmbeddedPoint& a, const EmbeddedPoint& b) { return a.x < b.x; });
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].x == pts[i - 1].x) {
            throw std::runtime_error(
                "embedding depth exceeds double precision at this scale");
        }
    }

    PointCloud cloud;
    cloud.resolution = 1.0 / static_cast<double>(depth + 1);
    cloud.points.reserve(pts.size());
    cloud.labels.reserve(pts.size());
    for (const EmbeddedPoint& p : pts) {
        cloud.points.push_back({p.x, 0.0});
        cloud.labels.push_back(format_cnf(p.ordinal));
    }
    return cloud;
}

}  // namespace ifslab
