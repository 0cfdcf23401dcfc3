#include "g2ps/scalar.hpp"

#include <stdexcept>

namespace g2ps {

Scalar Scalar::zeta(const Frac& t) {
    Scalar s;
    s.torsion_ = t.mod_one();
    return s;
}

Scalar Scalar::Q(const Frac& e) {
    Scalar s;
    s.q_half_ = e;
    return s;
}

Scalar Scalar::q(const Frac& e) { return Q(e * Frac(2)); }

Scalar Scalar::nu(const Frac& e) { return q(-e); }

Scalar Scalar::var(const std::string& name, const Frac& e) {
    if (name.empty()) throw std::invalid_argument("Scalar: empty variable name");
    Scalar s;
    if (!e.is_zero()) s.vars_[name] = e;
    return s;
}

void Scalar::prune() {
    for (auto it = vars_.begin(); it != vars_.end();) {
        if (it->second.is_zero())
            it = vars_.erase(it);
        else
            ++it;
    }
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.torsion_ = (a.torsion_ + b.torsion_).mod_one();
    r.q_half_ = a.q_half_ + b.q_half_;
    r.vars_ = a.vars_;
    for (const auto& [name, e] : b.vars_) r.vars_[name] += e;
    r.prune();
    return r;
}

Scalar Scalar::inv() const { return pow(Frac(-1)); }

Scalar Scalar::pow(const Frac& e) const {
    Scalar r;
    r.torsion_ = (torsion_ * e).mod_one();
    r.q_half_ = q_half_ * e;
    for (const auto& [name, x] : vars_) r.vars_[name] = x * e;
    r.prune();
    return r;
}

Scalar Scalar::substitute(const std::string& name, const Scalar& value) const {
    if (value.mentions(name))
        throw std::invalid_argument("Scalar::substitute: value mentions the substituted variable");
    auto it = vars_.find(name);
    if (it == vars_.end()) return *this;
    Frac e = it->second;
    Scalar rest = *this;
    rest.vars_.erase(name);
    return rest * value.pow(e);
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.torsion_ != b.torsion_) return a.torsion_ < b.torsion_;
    if (a.q_half_ != b.q_half_) return a.q_half_ < b.q_half_;
    return a.vars_ < b.vars_;
}

namespace {

std::string exp_str(const Frac& e) {
    if (e.is_integer()) return e.str();
    return "(" + e.str() + ")";
}

} // namespace

std::string Scalar::str() const {
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (!out.empty()) out += "*";
        out += piece;
    };
    if (!torsion_.is_zero()) {
        if (torsion_ == Frac(1, 2))
            append("-1");
        else
            append("zeta(" + torsion_.str() + ")");
    }
    if (!q_half_.is_zero()) append("Q^" + exp_str(q_half_));
    for (const auto& [name, e] : vars_) append(name + "^" + exp_str(e));
    if (out.empty()) return "1";
    return out;
}

std::string str(const TorusPoint& t) { return "(" + t[0].str() + "," + t[1].str() + ")"; }

bool mentions(const TorusPoint& t, const std::string& name) {
    return t[0].mentions(name) || t[1].mentions(name);
}

TorusPoint substitute(const TorusPoint& t, const std::string& name, const Scalar& value) {
    return {t[0].substitute(name, value), t[1].substitute(name, value)};
}

} // namespace g2ps
