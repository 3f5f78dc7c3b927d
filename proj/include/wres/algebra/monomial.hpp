#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace wres {

using Exponent = std::uint32_t;

// Dense exponent vector with cached total degree and a divisibility mask
// (bit i set iff variable i mod 64 occurs).
class Monomial {
public:
    using Storage = boost::container::small_vector<Exponent, 8>;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    Monomial(std::initializer_list<Exponent> e) : exps_(e) { refresh(); }
    explicit Monomial(const std::vector<Exponent>& e) : exps_(e.begin(), e.end()) { refresh(); }

    static Monomial variable(std::size_t nvars, std::size_t i, Exponent e = 1) {
        Monomial m(nvars);
        m.exps_[i] = e;
        m.refresh();
        return m;
    }

    std::size_t size() const { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::uint64_t degree() const { return degree_; }
    std::uint64_t mask() const { return mask_; }
    bool isOne() const { return degree_ == 0; }
    const Storage& exponents() const { return exps_; }

    void set(std::size_t i, Exponent e) {
        exps_[i] = e;
        refresh();
    }

    bool divides(const Monomial& o) const {
        if (mask_ & ~o.mask_) return false;
        if (degree_ > o.degree_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    bool coprime(const Monomial& o) const {
        if ((mask_ & o.mask_) == 0) return true;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] && o.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.exps_.resize(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + o.exps_[i];
        r.degree_ = degree_ + o.degree_;
        r.mask_ = mask_ | o.mask_;
        return r;
    }

    // Requires o | *this.
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        r.exps_.resize(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - o.exps_[i];
        r.refresh();
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        r.exps_.resize(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] > o.exps_[i] ? exps_[i] : o.exps_[i];
        r.refresh();
        return r;
    }

    Monomial pow(Exponent k) const {
        Monomial r;
        r.exps_.resize(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] * k;
        r.refresh();
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
        return h;
    }

private:
    void refresh() {
        degree_ = 0;
        mask_ = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            degree_ += exps_[i];
            if (exps_[i]) mask_ |= std::uint64_t{1} << (i % 64);
        }
    }

    Storage exps_;
    std::uint64_t degree_ = 0;
    std::uint64_t mask_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace wres
