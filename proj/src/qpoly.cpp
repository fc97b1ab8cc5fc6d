#include "hq/qpoly.hpp"

#include "hq/error.hpp"

#include <algorithm>
#include <ostream>

namespace hq {

QPoly::QPoly(std::vector<Quat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<Quat> coeffs) : coeffs_(coeffs) { trim(); }

QPoly::QPoly(const Quat& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

QPoly QPoly::monomial(unsigned n, const Quat& c) {
    if (c.is_zero()) return {};
    std::vector<Quat> v(n + 1);
    v[n] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Quat QPoly::coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Quat(); }

std::optional<std::size_t> QPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

bool QPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == Quat(1); }

bool QPoly::is_real() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Quat& q) { return q.is_real(); });
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    trim();
    return *this;
}

QPoly operator+(QPoly f, const QPoly& g) { return f += g; }
QPoly operator-(QPoly f, const QPoly& g) { return f -= g; }

QPoly operator-(const QPoly& f) {
    std::vector<Quat> v;
    v.reserve(f.size());
    for (const auto& c : f.coeffs()) v.push_back(-c);
    return QPoly(std::move(v));
}

QPoly operator*(const QPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Quat> v(f.size() + g.size() - 1);
    for (std::size_t a = 0; a < f.size(); ++a) {
        if (f.coeffs()[a].is_zero()) continue;
        for (std::size_t b = 0; b < g.size(); ++b) v[a + b] += f.coeffs()[a] * g.coeffs()[b];
    }
    return QPoly(std::move(v));
}

QPoly operator*(const Quat& c, const QPoly& f) {
    std::vector<Quat> v;
    v.reserve(f.size());
    for (const auto& fk : f.coeffs()) v.push_back(c * fk);
    return QPoly(std::move(v));
}

QPoly operator*(const QPoly& f, const Quat& c) {
    std::vector<Quat> v;
    v.reserve(f.size());
    for (const auto& fk : f.coeffs()) v.push_back(fk * c);
    return QPoly(std::move(v));
}

QPoly sharp(const QPoly& f) {
    std::vector<Quat> v;
    v.reserve(f.size());
    for (const auto& c : f.coeffs()) v.push_back(c.conj());
    return QPoly(std::move(v));
}

// Horner: sum a^k f_k = f_0 + a (f_1 + a (f_2 + ...)).
Quat eval_left(const QPoly& f, const Quat& a) {
    Quat acc;
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = *it + a * acc;
    return acc;
}

Quat eval_right(const QPoly& f, const Quat& a) {
    Quat acc;
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = *it + acc * a;
    return acc;
}

// Synthetic division: with q = L_a f, q_{n-1} = f_n and q_{k-1} = f_k + a q_k;
// the remainder f_0 + a q_0 is the left value.
DivMod<Quat> divmod_left(const QPoly& f, const Quat& a) {
    const auto& c = f.coeffs();
    if (c.size() <= 1) return {QPoly(), f.coeff(0)};
    std::vector<Quat> q(c.size() - 1);
    Quat carry;
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
        carry = c[k] + a * carry;
        q[k - 1] = carry;
    }
    return {QPoly(std::move(q)), c[0] + a * carry};
}

DivMod<Quat> divmod_right(const QPoly& f, const Quat& a) {
    const auto& c = f.coeffs();
    if (c.size() <= 1) return {QPoly(), f.coeff(0)};
    std::vector<Quat> q(c.size() - 1);
    Quat carry;
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
        carry = c[k] + carry * a;
        q[k - 1] = carry;
    }
    return {QPoly(std::move(q)), c[0] + carry * a};
}

DivMod<QPoly> divmod_poly_left(const QPoly& f, const QPoly& g) {
    if (g.is_zero()) throw ZeroDivision("polynomial division by zero polynomial");
    const std::size_t dg = *g.degree();
    const Quat lead_inv = inv(g.coeffs().back());
    QPoly rem = f;
    std::vector<Quat> quot(f.size() > dg ? f.size() - dg : 0);
    while (!rem.is_zero() && *rem.degree() >= dg) {
        const std::size_t shift = *rem.degree() - dg;
        const Quat t = lead_inv * rem.coeffs().back();
        quot[shift] = t;
        rem -= g * QPoly::monomial(static_cast<unsigned>(shift), t);
    }
    return {QPoly(std::move(quot)), rem};
}

DivMod<QPoly> divmod_poly_right(const QPoly& f, const QPoly& g) {
    if (g.is_zero()) throw ZeroDivision("polynomial division by zero polynomial");
    const std::size_t dg = *g.degree();
    const Quat lead_inv = inv(g.coeffs().back());
    QPoly rem = f;
    std::vector<Quat> quot(f.size() > dg ? f.size() - dg : 0);
    while (!rem.is_zero() && *rem.degree() >= dg) {
        const std::size_t shift = *rem.degree() - dg;
        const Quat t = rem.coeffs().back() * lead_inv;
        quot[shift] = t;
        rem -= QPoly::monomial(static_cast<unsigned>(shift), t) * g;
    }
    return {QPoly(std::move(quot)), rem};
}

bool in_right_ideal(const QPoly& f, const QPoly& p) { return divmod_poly_left(f, p).remainder.is_zero(); }

bool in_left_ideal(const QPoly& f, const QPoly& q) { return divmod_poly_right(f, q).remainder.is_zero(); }

std::optional<QPoly> two_sided_quotient(const QPoly& f, const QPoly& p, const QPoly& q) {
    auto left = divmod_poly_left(f, p);
    if (!left.remainder.is_zero()) return std::nullopt;
    auto right = divmod_poly_right(left.quotient, q);
    if (!right.remainder.is_zero()) return std::nullopt;
    return std::move(right.quotient);
}

Quat eval_left_product_formula(const QPoly& g, const QPoly& f, const Quat& a) {
    const Quat ga = eval_left(g, a);
    if (ga.is_zero()) return {};
    return ga * eval_left(f, inv(ga) * a * ga);
}

Quat eval_right_product_formula(const QPoly& g, const QPoly& f, const Quat& a) {
    const Quat fa = eval_right(f, a);
    if (fa.is_zero()) return {};
    return eval_right(g, fa * a * inv(fa)) * fa;
}

std::string to_string(const QPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t n = 0; n < f.size(); ++n) {
        const Quat& c = f.coeffs()[n];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string zpart;
        if (n == 1) zpart = "z";
        if (n > 1) zpart = "z^" + std::to_string(n);
        if (n > 0 && c == Quat(1)) {
            out += zpart;
            continue;
        }
        const std::string s = to_string(c);
        const int parts = (sgn(c.w) != 0) + (sgn(c.x) != 0) + (sgn(c.y) != 0) + (sgn(c.z) != 0);
        if (parts > 1 || s[0] == '-' || (n > 0 && s.find('/') != std::string::npos))
            out += "(" + s + ")";
        else
            out += s;
        out += zpart;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const QPoly& f) { return os << to_string(f); }

}  // namespace hq
