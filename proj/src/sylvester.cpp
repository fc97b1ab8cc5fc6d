#include "hq/sylvester.hpp"

#include "hq/error.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace hq {

namespace {

using Vec4 = std::array<Rat, 4>;

Quat from_vec(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<Vec4>& rows) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < 4 && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][col]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Rat lead = rows[r][col];
        for (auto& e : rows[r]) e /= lead;
        for (std::size_t m = 0; m < rows.size(); ++m) {
            if (m == r || sgn(rows[m][col]) == 0) continue;
            const Rat factor = rows[m][col];
            for (std::size_t c = 0; c < 4; ++c) rows[m][c] -= factor * rows[r][c];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

// Basis of {v : rows * v = 0}, one vector per free column.
std::vector<Quat> null_space(std::vector<Vec4> rows) {
    const auto pivots = rref(rows);
    std::vector<Quat> basis;
    for (std::size_t free = 0; free < 4; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        Vec4 v{0, 0, 0, 0};
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(from_vec(v));
    }
    return basis;
}

Quat char_value(const Quat& a, const Quat& b) { return b * b - Rat(2 * a.w) * b + Quat(a.norm2()); }

}  // namespace

Quat primitive_direction(const Quat& q) {
    if (q.is_zero()) return q;
    const auto c = q.coords();
    mpz_class den_lcm = 1;
    for (const auto& r : c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
    std::array<mpz_class, 4> n;
    mpz_class g = 0;
    for (std::size_t m = 0; m < 4; ++m) {
        n[m] = c[m].get_num() * (den_lcm / c[m].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[m].get_mpz_t());
    }
    int sign = 0;
    for (const auto& v : n)
        if ((sign = sgn(v)) != 0) break;
    Vec4 out;
    for (std::size_t m = 0; m < 4; ++m) out[m] = Rat(mpz_class(n[m] / g) * sign);
    return from_vec(out);
}

std::size_t real_rank(const std::vector<Quat>& vs) {
    std::vector<Vec4> rows;
    rows.reserve(vs.size());
    for (const auto& q : vs) rows.push_back(q.coords());
    return rref(rows).size();
}

bool PlaneH::contains(const Quat& q) const { return coordinates(q).has_value(); }

std::optional<std::pair<Rat, Rat>> PlaneH::coordinates(const Quat& q) const {
    const auto p1 = b1.coords();
    const auto p2 = b2.coords();
    const auto t = q.coords();
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t s = r + 1; s < 4; ++s) {
            const Rat det = p1[r] * p2[s] - p1[s] * p2[r];
            if (sgn(det) == 0) continue;
            Rat u = (t[r] * p2[s] - t[s] * p2[r]) / det;
            Rat v = (p1[r] * t[s] - p1[s] * t[r]) / det;
            if (at(u, v) == q) return std::make_pair(std::move(u), std::move(v));
            return std::nullopt;
        }
    }
    throw InternalError("degenerate plane basis");
}

PlaneH plane(const Quat& a, const Quat& b) {
    if (a.is_real()) throw RealInput("solution plane needs a non-real class, got " + to_string(a));
    if (!equivalent(a, b))
        throw NotEquivalent(to_string(a) + " and " + to_string(b) + " are not equivalent");
    if (a == b) return {Quat(1), primitive_direction(a.im())};
    if (b == a.conj()) {
        const auto basis = null_space({Vec4{1, 0, 0, 0}, a.im().coords()});
        return {primitive_direction(basis.at(0)), primitive_direction(basis.at(1))};
    }
    // With Im a = y I and Im b = y J this is span{I + J, 1 - I J} scaled by y, y^2.
    const Quat ia = a.im();
    const Quat ib = b.im();
    return {primitive_direction(ia + ib), primitive_direction(Quat(ia.norm2()) - ia * ib)};
}

SylvesterSolution solve_sylvester(const Quat& a, const Quat& b, const Quat& delta) {
    SylvesterSolution out;
    if (!equivalent(a, b)) {
        out.kind = SylvesterKind::Unique;
        out.particular = (a.conj() * delta - delta * b) * inv(char_value(a, b));
        return out;
    }
    out.lhs = a.conj() * delta;
    out.rhs = delta * b;
    if (a.is_real()) {
        // a = b real: a q - q a = 0 for every q.
        out.kind = delta.is_zero() ? SylvesterKind::AllOfH : SylvesterKind::None;
        return out;
    }
    if (out.lhs != out.rhs) {
        out.kind = SylvesterKind::None;
        return out;
    }
    out.kind = SylvesterKind::Affine;
    out.particular = inv(Rat(2) * a.im()) * delta;
    out.plane = plane(a, b);
    return out;
}

Quat backshift_value(const QPoly& f, const Quat& a, const Quat& b) {
    if (equivalent(a, b))
        throw EquivalentNodes("closed-form backward shift needs non-equivalent nodes, got " + to_string(a) +
                              " and " + to_string(b));
    const Quat diff = eval_left(f, a) - eval_right(f, b);
    return (a.conj() * diff - diff * b) * inv(char_value(a, b));
}

const char* to_string(SylvesterKind kind) {
    switch (kind) {
        case SylvesterKind::Unique: return "unique";
        case SylvesterKind::Affine: return "affine";
        case SylvesterKind::None: return "none";
        case SylvesterKind::AllOfH: return "all";
    }
    return "?";
}

}  // namespace hq
