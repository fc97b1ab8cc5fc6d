#pragma once

#include "hq/quat.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hq {

// Element of H[z]: f(z) = sum_k z^k f_k with z central. Coefficients are kept
// in ascending order with the highest one nonzero; the zero polynomial is the
// empty list and has no degree.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Quat> coeffs);
    QPoly(std::initializer_list<Quat> coeffs);
    // Constant polynomial.
    QPoly(const Quat& c);

    static QPoly z() { return QPoly({Quat(0), Quat(1)}); }
    // z - a
    static QPoly linear(const Quat& a) { return QPoly({-a, Quat(1)}); }
    // z^n c
    static QPoly monomial(unsigned n, const Quat& c);

    const std::vector<Quat>& coeffs() const { return coeffs_; }
    // Coefficient of z^n (zero past the end).
    Quat coeff(std::size_t n) const;
    std::optional<std::size_t> degree() const;
    std::size_t size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    bool is_real() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);

    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    void trim();
    std::vector<Quat> coeffs_;
};

QPoly operator+(QPoly f, const QPoly& g);
QPoly operator-(QPoly f, const QPoly& g);
QPoly operator-(const QPoly& f);
QPoly operator*(const QPoly& f, const QPoly& g);
QPoly operator*(const Quat& c, const QPoly& f);
QPoly operator*(const QPoly& f, const Quat& c);

inline QPoly add(const QPoly& f, const QPoly& g) { return f + g; }
inline QPoly sub(const QPoly& f, const QPoly& g) { return f - g; }
inline QPoly mul(const QPoly& f, const QPoly& g) { return f * g; }

// Coefficient-wise quaternion conjugate; (fg)# = g# f#.
QPoly sharp(const QPoly& f);

// sum_k a^k f_k
Quat eval_left(const QPoly& f, const Quat& a);
// sum_k f_k a^k
Quat eval_right(const QPoly& f, const Quat& a);

template <class Q>
struct DivMod {
    QPoly quotient;
    Q remainder;
};

// f = f^el(a) + (z - a) * quotient
DivMod<Quat> divmod_left(const QPoly& f, const Quat& a);
// f = f^er(a) + quotient * (z - a)
DivMod<Quat> divmod_right(const QPoly& f, const Quat& a);

// Left backward shift L_a f and right backward shift R_a f.
inline QPoly backshift_left(const QPoly& f, const Quat& a) { return divmod_left(f, a).quotient; }
inline QPoly backshift_right(const QPoly& f, const Quat& a) { return divmod_right(f, a).quotient; }

// f = g * quotient + remainder, deg remainder < deg g. Throws ZeroDivision for g = 0.
DivMod<QPoly> divmod_poly_left(const QPoly& f, const QPoly& g);
// f = quotient * g + remainder, deg remainder < deg g.
DivMod<QPoly> divmod_poly_right(const QPoly& f, const QPoly& g);

// f in p * H[z]
bool in_right_ideal(const QPoly& f, const QPoly& p);
// f in H[z] * q
bool in_left_ideal(const QPoly& f, const QPoly& q);
// h with f = p * h * q, if one exists.
std::optional<QPoly> two_sided_quotient(const QPoly& f, const QPoly& p, const QPoly& q);

// (g f)^el(a) computed from values of the factors:
// g^el(a) * f^el(g^el(a)^{-1} a g^el(a)), or 0 when g^el(a) = 0.
Quat eval_left_product_formula(const QPoly& g, const QPoly& f, const Quat& a);
// (g f)^er(a) = g^er(f^er(a) a f^er(a)^{-1}) * f^er(a), or 0 when f^er(a) = 0.
Quat eval_right_product_formula(const QPoly& g, const QPoly& f, const Quat& a);

// Human-readable form, ascending degree: "(1-k) + (i+j)z".
std::string to_string(const QPoly& f);
std::ostream& operator<<(std::ostream& os, const QPoly& f);

}  // namespace hq
