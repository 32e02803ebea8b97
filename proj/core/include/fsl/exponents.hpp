#ifndef FSL_EXPONENTS_HPP
#define FSL_EXPONENTS_HPP

#include <cmath>
#include <limits>
#include <string>

#include "fsl/errors.hpp"

namespace fsl {

/// A Lebesgue exponent p in [1, inf], stored as its reciprocal 1/p in [0, 1].
/// The reciprocal is the primary representation: it is finite for p = inf,
/// and all the exponent arithmetic in this project is affine in 1/p.
class LebesgueExponent {
public:
    LebesgueExponent() = default;

    static LebesgueExponent from_p(double p) {
        if (std::isnan(p) || p < 1.0)
            throw InvalidArgumentError("exponent p must satisfy 1 <= p <= inf, got " +
                                       std::to_string(p));
        LebesgueExponent e;
        e.inv_ = std::isinf(p) ? 0.0 : 1.0 / p;
        return e;
    }

    static LebesgueExponent from_reciprocal(double inv) {
        if (!(inv >= 0.0 && inv <= 1.0))
            throw InvalidArgumentError("reciprocal exponent must lie in [0, 1], got " +
                                       std::to_string(inv));
        LebesgueExponent e;
        e.inv_ = inv;
        return e;
    }

    static LebesgueExponent infinity() { return from_reciprocal(0.0); }

    double reciprocal() const { return inv_; }

    double p() const {
        return inv_ == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / inv_;
    }

    bool is_infinite() const { return inv_ == 0.0; }

    /// Conjugate exponent p' with 1/p + 1/p' = 1.
    LebesgueExponent dual() const { return from_reciprocal(1.0 - inv_); }

    friend bool operator==(LebesgueExponent a, LebesgueExponent b) {
        return a.inv_ == b.inv_;
    }

private:
    double inv_ = 1.0;  // default: p = 1
};

/// Formats p as the CLI and CSV files expect: "inf" or a plain decimal.
std::string format_exponent(LebesgueExponent e);

/// Parses "inf" (case-insensitive) or a decimal number, validating p >= 1.
LebesgueExponent parse_exponent(const std::string& text);

/// An (1/p, 1/q) pair in the unit square.
struct ExponentPair {
    LebesgueExponent p;
    LebesgueExponent q;

    static ExponentPair from_pq(double p_val, double q_val) {
        return {LebesgueExponent::from_p(p_val), LebesgueExponent::from_p(q_val)};
    }

    static ExponentPair from_reciprocals(double inv_p, double inv_q) {
        return {LebesgueExponent::from_reciprocal(inv_p),
                LebesgueExponent::from_reciprocal(inv_q)};
    }

    double inv_p() const { return p.reciprocal(); }
    double inv_q() const { return q.reciprocal(); }

    /// True when 1/p + 1/q = 1 within `tol` (the duality line).
    bool on_duality_line(double tol = 1e-12) const {
        return std::abs(inv_p() + inv_q() - 1.0) <= tol;
    }
};

}  // namespace fsl

#endif  // FSL_EXPONENTS_HPP
