#include "hq/quat.hpp"

#include "hq/error.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace hq {

Rat make_rat(long num, long den) {
    if (den == 0) throw ZeroDivision("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    const std::size_t sign = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
    if (!all_digits(num, sign) || !all_digits(den, 0))
        throw ParseError("malformed rational '" + text + "'");
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in rational '" + text + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Quat& Quat::operator+=(const Quat& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
}

Quat& Quat::operator-=(const Quat& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
}

Quat& Quat::operator*=(const Quat& o) { return *this = *this * o; }

Quat operator+(Quat a, const Quat& b) { return a += b; }
Quat operator-(Quat a, const Quat& b) { return a -= b; }
Quat operator-(const Quat& a) { return {-a.w, -a.x, -a.y, -a.z}; }

Quat operator*(const Quat& a, const Quat& b) {
    if (b.is_real()) return a * b.w;
    if (a.is_real()) return b * a.w;
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quat operator*(const Rat& s, const Quat& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
Quat operator*(const Quat& a, const Rat& s) { return s * a; }

Quat operator/(const Quat& a, const Rat& s) {
    if (sgn(s) == 0) throw ZeroDivision();
    return {a.w / s, a.x / s, a.y / s, a.z / s};
}

Quat inv(const Quat& a) {
    if (a.is_zero()) throw ZeroDivision();
    return a.conj() / a.norm2();
}

Quat pow(const Quat& a, unsigned n) {
    Quat result(1);
    Quat base = a;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

bool equivalent(const Quat& a, const Quat& b) { return a.w == b.w && a.norm2() == b.norm2(); }

Quat conjugate_by(const Quat& a, const Quat& h) { return inv(h) * a * h; }

Rat dot(const Quat& a, const Quat& b) { return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z; }

std::string to_string(const Quat& q) {
    static const char* const units[4] = {"", "i", "j", "k"};
    const auto c = q.coords();
    std::string out;
    for (int n = 0; n < 4; ++n) {
        if (sgn(c[n]) == 0) continue;
        std::string mag = rat_to_string(abs(c[n]));
        if (n > 0 && mag == "1") mag.clear();
        if (sgn(c[n]) < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        out += mag;
        out += units[n];
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Quat& q) { return os << to_string(q); }

Quat parse_quat(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty quaternion literal");

    Quat q;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw ParseError("malformed quaternion literal '" + text + "'");
        }
        std::size_t end = pos;
        while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/'))
            ++end;
        const bool has_number = end > pos;
        Rat coeff(1);
        if (has_number) coeff = parse_rat(s.substr(pos, end - pos));
        pos = end;
        bool need_unit = !has_number;
        if (pos < s.size() && s[pos] == '*') {
            if (!has_number) throw ParseError("malformed quaternion literal '" + text + "'");
            need_unit = true;
            ++pos;
        }
        Rat* slot = &q.w;
        if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
            slot = s[pos] == 'i' ? &q.x : s[pos] == 'j' ? &q.y : &q.z;
            ++pos;
        } else if (need_unit) {
            throw ParseError("malformed quaternion literal '" + text + "'");
        }
        *slot += negative ? Rat(-coeff) : coeff;
    }
    return q;
}

}  // namespace hq
