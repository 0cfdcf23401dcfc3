#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>

#include "g2ps/frac.hpp"

namespace g2ps {

// Element of the multiplicative group generated by roots of unity, rational
// powers of Q (a formal square root of the prime power q) and free variables
// with rational exponents:
//
//     zeta(t) * Q^h * prod_i v_i^{e_i},   zeta(t) = e^{2*pi*i*t}, t in [0,1).
//
// The representation is canonical, so equality is structural and the text
// serialization is a bijection with the group.
class Scalar {
public:
    Scalar() = default; // identity

    static Scalar one() { return Scalar(); }
    static Scalar zeta(const Frac& t); // e^{2*pi*i*t}
    static Scalar minus_one() { return zeta(Frac(1, 2)); }
    static Scalar Q(const Frac& e = Frac(1)); // q^{e/2}
    static Scalar q(const Frac& e = Frac(1)); // q^e
    static Scalar nu(const Frac& e = Frac(1)); // q^{-e}
    static Scalar var(const std::string& name, const Frac& e = Frac(1));

    const Frac& torsion() const { return torsion_; }
    const Frac& q_half() const { return q_half_; }
    const std::map<std::string, Frac>& vars() const { return vars_; }

    bool is_one() const { return torsion_.is_zero() && q_half_.is_zero() && vars_.empty(); }
    bool has_vars() const { return !vars_.empty(); }
    bool mentions(const std::string& name) const { return vars_.count(name) != 0; }

    Scalar inv() const;
    Scalar pow(const Frac& e) const;
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    // Replaces every occurrence of the named variable by `value`.
    // Rejects substitutions where `value` itself mentions the variable.
    Scalar substitute(const std::string& name, const Scalar& value) const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.torsion_ == b.torsion_ && a.q_half_ == b.q_half_ && a.vars_ == b.vars_;
    }
    friend bool operator<(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    Frac torsion_; // in [0,1)
    Frac q_half_;
    std::map<std::string, Frac> vars_; // no zero exponents
    void prune();
};

using TorusPoint = std::array<Scalar, 2>;

std::string str(const TorusPoint& t);
bool mentions(const TorusPoint& t, const std::string& name);
TorusPoint substitute(const TorusPoint& t, const std::string& name, const Scalar& value);

} // namespace g2ps
