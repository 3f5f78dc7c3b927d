#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wres/algebra/ring.hpp"

namespace wres {

using Rational = mpq_class;
using Integer = mpz_class;

struct Term {
    Monomial mono;
    Rational coef;
};

// Immutable-by-convention sparse polynomial over Q. Terms are kept sorted by
// degrevlex, largest first, with no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial constant(Ring ring, const Rational& c);
    static Polynomial variable(Ring ring, std::size_t i);
    static Polynomial monomial(Ring ring, Monomial m, const Rational& c = 1);
    // Sorts and combines like terms; zero coefficients are dropped.
    static Polynomial fromTerms(Ring ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isOne()); }
    bool isOne() const { return terms_.size() == 1 && terms_[0].mono.isOne() && terms_[0].coef == 1; }
    Rational constantTerm() const;
    std::uint64_t totalDegree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
    Exponent degreeIn(std::size_t var) const;
    bool involves(std::size_t var) const { return degreeIn(var) > 0; }

    // Leading term under an arbitrary order (linear scan unless degrevlex).
    const Term& leadingTerm(const MonomialOrder& order) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Rational& c) const;
    Polynomial timesMonomial(const Monomial& m, const Rational& c = 1) const;
    Polynomial pow(unsigned long n) const;
    Polynomial derivative(std::size_t var) const;
    // Scaled so the coefficients are coprime integers with positive leading coefficient.
    Polynomial primitive() const;
    Polynomial monic(const MonomialOrder& order) const;

    // Substitute images[i] (all in `target`) for variable i.
    Polynomial substitute(const std::vector<Polynomial>& images, const Ring& target) const;
    // Relabel: variable i goes to target variable index[i].
    Polynomial relabel(const std::vector<std::size_t>& index, const Ring& target) const;
    // Exact division by a monomial dividing every term.
    Polynomial divideMonomial(const Monomial& m) const;
    // Largest monomial dividing every term.
    Monomial monomialContent() const;

    std::string toString() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    // Total order on polynomials of one ring, used for canonical sorting.
    friend int comparePolynomials(const Polynomial& a, const Polynomial& b, const MonomialOrder& order);

private:
    Polynomial(Ring ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}

    Ring ring_;
    std::vector<Term> terms_;
};

std::string rationalToString(const Rational& q);

// q with f = q*g, or nullopt when g does not divide f.
std::optional<Polynomial> exactDivide(const Polynomial& f, const Polynomial& g);

} // namespace wres
