#include "hurwitz/cyclotomic.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz {

namespace {

using Poly = std::vector<Rational>; // coefficient list, low degree first

// Exact division of polynomials; remainder must vanish.
Poly poly_div(const Poly& num, const Poly& den) {
    Poly rem = num;
    Poly quo(num.size() - den.size() + 1, Rational(0));
    for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
        Rational q = rem[i + den.size() - 1] / den.back();
        quo[i] = q;
        for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= q * den[j];
    }
    for (const Rational& r : rem)
        if (r != 0) throw error("cyclotomic polynomial division left a remainder");
    return quo;
}

// Phi_e via Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d.
Poly cyclotomic_poly(int e) {
    std::vector<Poly> phis(e + 1);
    for (int d = 1; d <= e; ++d) {
        if (e % d != 0) continue;
        Poly num(d + 1, Rational(0));
        num[0] = -1;
        num[d] = 1;
        for (int dd = 1; dd < d; ++dd)
            if (d % dd == 0) num = poly_div(num, phis[dd]);
        phis[d] = std::move(num);
    }
    return phis[e];
}

} // namespace

CycField::CycField(int conductor) {
    if (conductor < 1) throw error("conductor must be positive");
    e = conductor;
    phi_poly = cyclotomic_poly(e);
    deg = static_cast<int>(phi_poly.size()) - 1;
    int rows = std::max(e, 2 * deg - 1);
    reduce.assign(rows, std::vector<Rational>(deg, Rational(0)));
    for (int j = 0; j < std::min(rows, deg); ++j) reduce[j][j] = 1;
    for (int j = deg; j < rows; ++j) {
        // x * reduce[j-1], then cancel the x^deg term against Phi_e
        const std::vector<Rational>& prev = reduce[j - 1];
        std::vector<Rational>& cur = reduce[j];
        Rational top = prev[deg - 1];
        cur[0] = -top * phi_poly[0];
        for (int i = 1; i < deg; ++i) cur[i] = prev[i - 1] - top * phi_poly[i];
    }
}

Cyclotomic Cyclotomic::from_rational(const CycField& field, const Rational& r) {
    Cyclotomic out(field);
    out.c[0] = r;
    return out;
}

Cyclotomic Cyclotomic::root_power(const CycField& field, long long k) {
    long long t = ((k % field.e) + field.e) % field.e;
    Cyclotomic out(field);
    out.c = field.reduce[static_cast<size_t>(t)];
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const Rational& r : c)
        if (r != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw error("cyclotomic value is not rational");
    return c[0];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const CycField& f = *a.f;
    std::vector<Rational> prod(2 * f.deg - 1, Rational(0));
    for (int i = 0; i < f.deg; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < f.deg; ++j)
            if (b.c[j] != 0) prod[i + j] += a.c[i] * b.c[j];
    }
    Cyclotomic out(f);
    for (size_t d = 0; d < prod.size(); ++d) {
        if (prod[d] == 0) continue;
        const std::vector<Rational>& row = f.reduce[d];
        for (int i = 0; i < f.deg; ++i)
            if (row[i] != 0) out.c[i] += prod[d] * row[i];
    }
    return out;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
    for (Rational& x : c) x *= r;
    return *this;
}

Cyclotomic Cyclotomic::pow(long long k) const {
    if (k < 0) throw error("negative cyclotomic power");
    Cyclotomic acc = from_rational(*f, 1);
    Cyclotomic base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Cyclotomic Cyclotomic::galois(long long t) const {
    long long tt = ((t % f->e) + f->e) % f->e;
    if (std::gcd(tt, static_cast<long long>(f->e)) != 1)
        throw error("galois exponent not coprime to conductor");
    Cyclotomic out(*f);
    for (int j = 0; j < f->deg; ++j) {
        if (c[j] == 0) continue;
        const std::vector<Rational>& row = f->reduce[static_cast<size_t>(j * tt % f->e)];
        for (int i = 0; i < f->deg; ++i)
            if (row[i] != 0) out.c[i] += c[j] * row[i];
    }
    return out;
}

Cyclotomic Cyclotomic::conj() const { return galois(f->e - 1); }

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
    for (size_t i = 0; i < a.c.size(); ++i) {
        int cmp = ::cmp(a.c[i], b.c[i]);
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

} // namespace hurwitz
