#pragma once

#include <gmpxx.h>

#include <vector>

namespace hurwitz {

using Rational = mpq_class;

// Arithmetic context for the cyclotomic field Q(zeta_e).  Elements are
// represented canonically by their coordinates over the power basis
// 1, x, ..., x^{phi(e)-1} modulo the e-th cyclotomic polynomial, so equality
// is coordinate-wise comparison.
struct CycField {
    int e = 1;        // conductor
    int deg = 1;      // phi(e)
    std::vector<Rational> phi_poly;            // Phi_e, monic, length deg+1
    std::vector<std::vector<Rational>> reduce; // x^j reduced, j < max(e, 2*deg-1)

    explicit CycField(int conductor);
};

struct Cyclotomic {
    const CycField* f = nullptr;
    std::vector<Rational> c; // length f->deg

    Cyclotomic() = default;
    explicit Cyclotomic(const CycField& field) : f(&field), c(field.deg, Rational(0)) {}

    static Cyclotomic from_rational(const CycField& field, const Rational& r);
    // zeta_e^k for any integer k
    static Cyclotomic root_power(const CycField& field, long long k);

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const; // throws error unless is_rational()

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator*=(const Rational& r);
    Cyclotomic pow(long long k) const; // k >= 0

    // Galois action zeta_e -> zeta_e^t; requires gcd(t, e) = 1.
    Cyclotomic galois(long long t) const;
    // complex conjugation, i.e. galois(e - 1)
    Cyclotomic conj() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.c == b.c; }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return a.c != b.c; }
    // lexicographic on coordinates; total order used for deterministic sorting
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);
};

} // namespace hurwitz
