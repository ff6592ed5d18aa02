#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "torus/errors.hpp"

namespace torus {

// Element of a real multiquadratic field: a finite sum
//
//     c_1 + c_{r_1} sqrt(r_1) + ... + c_{r_t} sqrt(r_t)
//
// with rational coefficients c and pairwise distinct squarefree radicands
// r > 1. Distinct squarefree square roots are linearly independent over Q,
// so equality and the zero test are decided coefficientwise.
//
// Addition, multiplication and division are closed: sqrt(a)*sqrt(b) is
// renormalized through gcd square extraction and division rationalizes the
// denominator by conjugation, one prime at a time.
class ExactScalar {
public:
    using TermMap = std::map<unsigned long, mpq_class>; // radicand -> coefficient, radicand 1 = rational part

    ExactScalar() = default;
    ExactScalar(long v);                // NOLINT: implicit by design
    ExactScalar(const mpq_class& v);    // NOLINT
    ExactScalar(const mpz_class& v);    // NOLINT

    // coeff * sqrt(radicand); radicand >= 1, square part is extracted here.
    static ExactScalar sqrt_term(const mpq_class& coeff, unsigned long radicand);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // Throws Error if the value has irrational terms.
    mpq_class as_rational() const;
    mpq_class rational_part() const;

    // Exact sign (-1, 0, +1); nonzero values are separated from zero by
    // interval evaluation at increasing precision.
    int sign() const;
    double to_double() const;

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator/(const ExactScalar& o) const;
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

    bool operator==(const ExactScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    // Total order usable as a container key. Term-lexicographic, NOT the
    // numeric order; use sign() on a difference for numeric comparisons.
    std::strong_ordering key_order(const ExactScalar& o) const;

    const TermMap& terms() const { return terms_; }
    std::vector<unsigned long> radicands() const; // excluding 1
    std::string str() const;

private:
    void prune();
    TermMap terms_;
};

inline ExactScalar operator*(long a, const ExactScalar& b) { return ExactScalar(a) * b; }

// Strict-weak-order functor for std::map keys.
struct ExactKeyLess {
    bool operator()(const ExactScalar& a, const ExactScalar& b) const {
        return a.key_order(b) == std::strong_ordering::less;
    }
};

enum class ScalarMode { ExactRational, QuadIrrational, Float64 };

// Declares which scalars a lattice or form is allowed to carry.
// QuadIrrational fixes the permitted radicands up front; values produced by
// parsing are validated against the declared span. eps_eq is the equality
// tolerance used by Float64-mode operations.
struct ScalarField {
    ScalarMode mode = ScalarMode::ExactRational;
    std::vector<unsigned long> radicands;
    double eps_eq = 1e-9;

    bool exact() const { return mode != ScalarMode::Float64; }
    void validate(const ExactScalar& v) const;

    static ScalarField rational();
    static ScalarField quadirr(std::vector<unsigned long> rads);
    static ScalarField float64(double eps = 1e-9);

    std::string str() const;
};

// Parses scalar literals of the config format: sums of terms
// "p/q", "p/q*sqrt(s)", "sqrt(s)", e.g. "3/2", "1/2*sqrt(2)+1", "-sqrt(5)".
ExactScalar parse_exact_scalar(const std::string& text);

} // namespace torus
