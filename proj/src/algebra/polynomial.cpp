#include "wres/algebra/polynomial.hpp"

#include <algorithm>

#include "wres/error.hpp"

namespace wres {

namespace {

const MonomialOrder kCanonical = MonomialOrder::degrevlex();

bool canonicalGreater(const Term& a, const Term& b) {
    return kCanonical.compare(a.mono, b.mono) > 0;
}

// Sorted descending, like monomials combined, zeros removed.
std::vector<Term> normalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), canonicalGreater);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coef += t.coef;
        } else {
            if (!out.empty() && out.back().coef == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coef == 0) out.pop_back();
    return out;
}

std::vector<Term> mergeAdd(const std::vector<Term>& a, const std::vector<Term>& b, bool negateB) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size()) c = -1;
        else if (j == b.size()) c = 1;
        else c = kCanonical.compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j]);
            if (negateB) out.back().coef = -out.back().coef;
            ++j;
        } else {
            Rational s = negateB ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
            if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

std::string rationalToString(const Rational& q) {
    return q.get_str();
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back(Term{Monomial(ring->size()), c});
    return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
    Monomial m = Monomial::variable(ring->size(), i);
    return Polynomial(ring, {Term{std::move(m), 1}});
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back(Term{std::move(m), c});
    return p;
}

Polynomial Polynomial::fromTerms(Ring ring, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.mono.size() != ring->size()) throw Error(ErrorKind::ArityMismatch, "monomial arity differs from ring");
    return Polynomial(std::move(ring), normalize(std::move(terms)));
}

Rational Polynomial::constantTerm() const {
    if (!terms_.empty() && terms_.back().mono.isOne()) return terms_.back().coef;
    return 0;
}

Exponent Polynomial::degreeIn(std::size_t var) const {
    Exponent d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

const Term& Polynomial::leadingTerm(const MonomialOrder& order) const {
    if (terms_.empty()) throw Error(ErrorKind::PreconditionViolation, "leading term of zero polynomial");
    if (order == kCanonical) return terms_.front();
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (order.compare(terms_[i].mono, terms_[best].mono) > 0) best = i;
    return terms_[best];
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    requireSameRing(ring_, o.ring_, "add");
    if (o.isZero()) return *this;
    if (isZero()) return o;
    return Polynomial(ring_, mergeAdd(terms_, o.terms_, false));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    requireSameRing(ring_, o.ring_, "subtract");
    if (o.isZero()) return *this;
    return Polynomial(ring_, mergeAdd(terms_, o.terms_, true));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    requireSameRing(ring_, o.ring_, "multiply");
    if (isZero() || o.isZero()) return Polynomial(ring_);
    const Polynomial& a = terms_.size() <= o.terms_.size() ? *this : o;
    const Polynomial& b = terms_.size() <= o.terms_.size() ? o : *this;
    if (a.terms_.size() == 1) return b.timesMonomial(a.terms_[0].mono, a.terms_[0].coef);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) prod.push_back(Term{s.mono * t.mono, s.coef * t.coef});
    return Polynomial(ring_, normalize(std::move(prod)));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

Polynomial Polynomial::timesMonomial(const Monomial& m, const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(Term{t.mono * m, t.coef * c});
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned long n) const {
    Polynomial result = constant(ring_, 1);
    if (n == 0) return result;
    if (terms_.size() == 1) {
        Rational c;
        mpz_pow_ui(c.get_num_mpz_t(), terms_[0].coef.get_num_mpz_t(), n);
        mpz_pow_ui(c.get_den_mpz_t(), terms_[0].coef.get_den_mpz_t(), n);
        return monomial(ring_, terms_[0].mono.pow(static_cast<Exponent>(n)), c);
    }
    Polynomial base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Exponent e = t.mono[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        out.push_back(Term{std::move(m), t.coef * e});
    }
    return Polynomial(ring_, normalize(std::move(out)));
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty()) return *this;
    Integer num = 0, den = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
    }
    Rational f(den, num);
    f.canonicalize();
    if (terms_.front().coef < 0) f = -f;
    return scaled(f);
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    return scaled(1 / leadingTerm(order).coef);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, const Ring& target) const {
    if (images.size() != ring_->size()) throw Error(ErrorKind::ArityMismatch, "substitution arity");
    for (const auto& im : images) requireSameRing(im.ring(), target, "substitute");
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
        auto& ps = powers[i];
        if (ps.empty()) {
            ps.push_back(constant(target, 1));
            ps.push_back(images[i]);
        }
        while (ps.size() <= e) ps.push_back(ps.back() * images[i]);
        return ps[e];
    };
    std::vector<Term> acc;
    for (const auto& t : terms_) {
        Polynomial p = constant(target, t.coef);
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (t.mono[i]) p = p * power(i, t.mono[i]);
        acc.insert(acc.end(), p.terms_.begin(), p.terms_.end());
    }
    return Polynomial(target, normalize(std::move(acc)));
}

Polynomial Polynomial::relabel(const std::vector<std::size_t>& index, const Ring& target) const {
    if (index.size() != ring_->size()) throw Error(ErrorKind::ArityMismatch, "relabel arity");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<Exponent> e(target->size(), 0);
        for (std::size_t i = 0; i < index.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (index[i] >= target->size()) throw Error(ErrorKind::ArityMismatch, "relabel drops a used variable");
            e[index[i]] += t.mono[i];
        }
        out.push_back(Term{Monomial(e), t.coef});
    }
    return Polynomial(target, normalize(std::move(out)));
}

Polynomial Polynomial::divideMonomial(const Monomial& m) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!m.divides(t.mono)) throw Error(ErrorKind::PreconditionViolation, "inexact monomial division");
        out.push_back(Term{t.mono / m, t.coef});
    }
    return Polynomial(ring_, std::move(out));
}

Monomial Polynomial::monomialContent() const {
    if (terms_.empty()) return Monomial(ring_ ? ring_->size() : 0);
    std::vector<Exponent> e(terms_[0].mono.exponents().begin(), terms_[0].mono.exponents().end());
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], t.mono[i]);
    return Monomial(e);
}

std::string Polynomial::toString() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coef;
        if (c < 0) {
            s += "-";
            c = -c;
        } else if (!first) {
            s += "+";
        }
        first = false;
        bool needStar = false;
        if (c != 1 || t.mono.isOne()) {
            s += c.get_str();
            needStar = true;
        }
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (!t.mono[i]) continue;
            if (needStar) s += "*";
            s += ring_->variable(i);
            if (t.mono[i] > 1) s += "^" + std::to_string(t.mono[i]);
            needStar = true;
        }
    }
    return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!sameRing(a.ring_, b.ring_) && !(a.terms_.empty())) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
}

int comparePolynomials(const Polynomial& a, const Polynomial& b, const MonomialOrder& order) {
    auto sa = a.terms_;
    auto sb = b.terms_;
    if (!(order == kCanonical)) {
        auto cmp = [&](const Term& x, const Term& y) { return order.compare(x.mono, y.mono) > 0; };
        std::sort(sa.begin(), sa.end(), cmp);
        std::sort(sb.begin(), sb.end(), cmp);
    }
    std::size_t n = std::min(sa.size(), sb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = order.compare(sa[i].mono, sb[i].mono)) return c;
        if (sa[i].coef != sb[i].coef) return sa[i].coef < sb[i].coef ? -1 : 1;
    }
    if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
    return 0;
}

std::optional<Polynomial> exactDivide(const Polynomial& f, const Polynomial& g) {
    requireSameRing(f.ring(), g.ring(), "exactDivide");
    if (g.isZero()) throw Error(ErrorKind::PreconditionViolation, "division by zero polynomial");
    const Term& lt = g.terms().front();
    Polynomial r = f;
    std::vector<Term> q;
    while (!r.isZero()) {
        const Term& head = r.terms().front();
        if (!lt.mono.divides(head.mono)) return std::nullopt;
        Monomial m = head.mono / lt.mono;
        Rational c = head.coef / lt.coef;
        r = r - g.timesMonomial(m, c);
        q.push_back(Term{std::move(m), std::move(c)});
    }
    return Polynomial::fromTerms(f.ring(), std::move(q));
}

} // namespace wres
