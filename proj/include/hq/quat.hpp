#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>

namespace hq {

// Exact rational scalar. mpq_class keeps results of arithmetic in lowest
// terms with a positive denominator; values built from raw parts must go
// through make_rat() so that equality stays structural.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

// Parses "p", "-p" or "p/q" (arbitrary size). Throws ParseError on malformed
// input or a zero denominator.
Rat parse_rat(const std::string& text);

// Canonical text: "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

// Conjugacy-class invariant: trace = 2 Re(q), norm2 = |q|^2.
struct ConjClassKey {
    Rat trace;
    Rat norm2;

    friend bool operator==(const ConjClassKey&, const ConjClassKey&) = default;
};

// Quaternion w + x i + y j + z k with rational coefficients.
class Quat {
public:
    Rat w, x, y, z;

    Quat() : w(0), x(0), y(0), z(0) {}
    Quat(Rat w_, Rat x_, Rat y_, Rat z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    // Implicit from scalars: a real number is a quaternion.
    Quat(const Rat& r) : w(r), x(0), y(0), z(0) {}
    Quat(long r) : w(r), x(0), y(0), z(0) {}

    static Quat i() { return {0, 1, 0, 0}; }
    static Quat j() { return {0, 0, 1, 0}; }
    static Quat k() { return {0, 0, 0, 1}; }

    const Rat& re() const { return w; }
    Quat im() const { return {0, x, y, z}; }
    Quat conj() const { return {w, -x, -y, -z}; }
    Rat norm2() const { return w * w + x * x + y * y + z * z; }

    bool is_zero() const { return sgn(w) == 0 && sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0; }
    bool is_real() const { return sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0; }

    ConjClassKey class_key() const { return {2 * w, norm2()}; }

    std::array<Rat, 4> coords() const { return {w, x, y, z}; }

    Quat& operator+=(const Quat& o);
    Quat& operator-=(const Quat& o);
    Quat& operator*=(const Quat& o);

    friend bool operator==(const Quat& a, const Quat& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

Quat operator+(Quat a, const Quat& b);
Quat operator-(Quat a, const Quat& b);
Quat operator-(const Quat& a);
// Hamilton product.
Quat operator*(const Quat& a, const Quat& b);
Quat operator*(const Rat& s, const Quat& a);
Quat operator*(const Quat& a, const Rat& s);
Quat operator/(const Quat& a, const Rat& s);
inline Quat operator*(long s, const Quat& a) { return Rat(s) * a; }
inline Quat operator*(const Quat& a, long s) { return a * Rat(s); }

inline Quat mul(const Quat& a, const Quat& b) { return a * b; }

// conj(a) / norm2(a). Throws ZeroDivision for a = 0.
Quat inv(const Quat& a);

// Integer power, exponent >= 0.
Quat pow(const Quat& a, unsigned n);

// Re(a) = Re(b) and |a| = |b|.
bool equivalent(const Quat& a, const Quat& b);

// h^{-1} a h. Throws ZeroDivision for h = 0.
Quat conjugate_by(const Quat& a, const Quat& h);

// Real dot product of the coordinate vectors.
Rat dot(const Quat& a, const Quat& b);

// "1-k", "1/2+3i", "0". Components in basis order 1,i,j,k; zero parts
// omitted; unit coefficients written bare ("i", "-j").
std::string to_string(const Quat& q);
std::ostream& operator<<(std::ostream& os, const Quat& q);

// Inverse of to_string, also accepting whitespace and an optional '*'
// between coefficient and unit ("3/2*i"). Throws ParseError.
Quat parse_quat(const std::string& text);

}  // namespace hq
