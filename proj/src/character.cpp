#include "hurwitz/character.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hurwitz {

namespace {

using Vec = std::vector<long long>;

struct ModP {
    long long p;
    long long add(long long a, long long b) const { long long s = a + b; return s >= p ? s - p : s; }
    long long sub(long long a, long long b) const { long long s = a - b; return s < 0 ? s + p : s; }
    long long mul(long long a, long long b) const {
        return static_cast<long long>(static_cast<__int128>(a) * b % p);
    }
    long long pow(long long a, long long x) const {
        long long r = 1;
        a %= p;
        if (a < 0) a += p;
        while (x > 0) {
            if (x & 1) r = mul(r, a);
            a = mul(a, a);
            x >>= 1;
        }
        return r;
    }
    long long inv(long long a) const { return pow(a, p - 2); }
};

bool is_prime(long long x) {
    if (x < 2) return false;
    for (long long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

// Smallest prime p = 1 (mod e) with p > floor_val.
long long choose_prime(long long e, long long floor_val) {
    long long p = (floor_val / e + 1) * e + 1;
    while (!is_prime(p)) p += e;
    return p;
}

long long primitive_root(const ModP& M) {
    long long p = M.p;
    std::vector<long long> qs;
    long long m = p - 1;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            qs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) qs.push_back(m);
    for (long long w = 2;; ++w) {
        bool ok = true;
        for (long long q : qs)
            if (M.pow(w, (p - 1) / q) == 1) { ok = false; break; }
        if (ok) return w;
    }
}

// Subspace of F_p^k held as a reduced row echelon basis.
struct Space {
    std::vector<Vec> rows;
    std::vector<int> pivots;
    int dim() const { return static_cast<int>(rows.size()); }
};

Space rref(std::vector<Vec> rows, const ModP& M) {
    int k = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Space s;
    int rank = 0;
    for (int col = 0; col < k && rank < static_cast<int>(rows.size()); ++col) {
        int pv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col]) { pv = r; break; }
        if (pv < 0) continue;
        std::swap(rows[rank], rows[pv]);
        long long iv = M.inv(rows[rank][col]);
        for (int c = 0; c < k; ++c) rows[rank][c] = M.mul(rows[rank][c], iv);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || !rows[r][col]) continue;
            long long f = rows[r][col];
            for (int c = 0; c < k; ++c) rows[r][c] = M.sub(rows[r][c], M.mul(f, rows[rank][c]));
        }
        s.pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    s.rows = std::move(rows);
    return s;
}

// Coordinates of w in the basis of s; throws if w lies outside the span.
Vec coords_in(const Space& s, Vec w, const ModP& M) {
    Vec coef(s.rows.size(), 0);
    for (size_t r = 0; r < s.rows.size(); ++r) {
        long long c0 = w[s.pivots[r]];
        coef[r] = c0;
        if (c0)
            for (size_t j = 0; j < w.size(); ++j) w[j] = M.sub(w[j], M.mul(c0, s.rows[r][j]));
    }
    for (long long x : w)
        if (x) throw lift_failure("class matrix does not preserve an eigenspace");
    return coef;
}

// Characteristic polynomial mod p via Hessenberg reduction, coefficients low
// degree first, monic of degree d.
Vec charpoly(std::vector<Vec> a, const ModP& M) {
    int d = static_cast<int>(a.size());
    for (int col = 0; col + 2 < d; ++col) {
        int piv = -1;
        for (int r = col + 1; r < d; ++r)
            if (a[r][col]) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != col + 1) {
            std::swap(a[piv], a[col + 1]);
            for (int r = 0; r < d; ++r) std::swap(a[r][piv], a[r][col + 1]);
        }
        long long ipv = M.inv(a[col + 1][col]);
        for (int r = col + 2; r < d; ++r) {
            if (!a[r][col]) continue;
            long long f = M.mul(a[r][col], ipv);
            for (int c = 0; c < d; ++c) a[r][c] = M.sub(a[r][c], M.mul(f, a[col + 1][c]));
            for (int r2 = 0; r2 < d; ++r2) a[r2][col + 1] = M.add(a[r2][col + 1], M.mul(f, a[r2][r]));
        }
    }
    // p_m(x) = (x - h_mm) p_{m-1} - sum_i h_im (prod_{j=i..m-1} h_{j+1,j}) p_{i-1}
    std::vector<Vec> ps(d + 1);
    ps[0] = {1};
    for (int m = 1; m <= d; ++m) {
        Vec cur(m + 1, 0);
        for (int t = 0; t < m; ++t) {
            cur[t + 1] = M.add(cur[t + 1], ps[m - 1][t]);
            cur[t] = M.sub(cur[t], M.mul(a[m - 1][m - 1], ps[m - 1][t]));
        }
        long long prod = 1;
        for (int i = m - 1; i >= 1; --i) {
            prod = M.mul(prod, a[i][i - 1]);
            long long cf = M.mul(a[i - 1][m - 1], prod);
            if (!cf) continue;
            for (int t = 0; t < i; ++t) cur[t] = M.sub(cur[t], M.mul(cf, ps[i - 1][t]));
        }
        ps[m] = std::move(cur);
    }
    return ps[d];
}

std::vector<Vec> nullspace(std::vector<Vec> a, const ModP& M) {
    int d = static_cast<int>(a.size());
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < d && rank < d; ++col) {
        int pv = -1;
        for (int r = rank; r < d; ++r)
            if (a[r][col]) { pv = r; break; }
        if (pv < 0) continue;
        std::swap(a[rank], a[pv]);
        long long iv = M.inv(a[rank][col]);
        for (int c = 0; c < d; ++c) a[rank][c] = M.mul(a[rank][c], iv);
        for (int r = 0; r < d; ++r) {
            if (r == rank || !a[r][col]) continue;
            long long f = a[r][col];
            for (int c = 0; c < d; ++c) a[r][c] = M.sub(a[r][c], M.mul(f, a[rank][c]));
        }
        pivots.push_back(col);
        ++rank;
    }
    std::vector<char> ispiv(d, 0);
    for (int c : pivots) ispiv[c] = 1;
    std::vector<Vec> basis;
    for (int fr = 0; fr < d; ++fr) {
        if (ispiv[fr]) continue;
        Vec v(d, 0);
        v[fr] = 1;
        for (int r = 0; r < rank; ++r) v[pivots[r]] = M.sub(0, a[r][fr]);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

CharacterTable character_table(const FiniteGroup& g, const ConjugacyData& cd) {
    const int n = g.n, k = cd.k;
    const int e = g.exponent();
    ModP M{choose_prime(e, 2LL * n)};
    const long long p = M.p;

    // class-sum structure constants a_{ijl}: for x in C_i the partner
    // y = x^-1 z_l is forced, so each (i, l) costs |C_i| steps
    std::vector<std::vector<long long>> amat(k, std::vector<long long>(static_cast<size_t>(k) * k, 0));
    for (int l = 0; l < k; ++l) {
        int z = cd.reps[l];
        for (int i = 0; i < k; ++i)
            for (int x : cd.members[i]) ++amat[i][static_cast<size_t>(cd.class_of[g.mul(g.inverse(x), z)]) * k + l];
    }
    auto apply = [&](int i, const Vec& u) {
        Vec w(k, 0);
        for (int j = 0; j < k; ++j) {
            const long long* row = &amat[i][static_cast<size_t>(j) * k];
            __int128 acc = 0;
            for (int l = 0; l < k; ++l) acc += static_cast<__int128>(row[l]) * u[l];
            w[j] = static_cast<long long>(acc % p);
        }
        return w;
    };

    // split F_p^k into the common eigenlines of the commuting class matrices
    std::vector<Space> spaces;
    {
        std::vector<Vec> id(k, Vec(k, 0));
        for (int i = 0; i < k; ++i) id[i][i] = 1;
        spaces.push_back(rref(std::move(id), M));
    }
    for (int i = 1; i < k; ++i) {
        bool done = true;
        for (const Space& s : spaces)
            if (s.dim() > 1) { done = false; break; }
        if (done) break;
        std::vector<Space> next;
        for (Space& s : spaces) {
            int d = s.dim();
            if (d == 1) { next.push_back(std::move(s)); continue; }
            std::vector<Vec> r(d, Vec(d, 0));
            for (int c = 0; c < d; ++c) {
                Vec coef = coords_in(s, apply(i, s.rows[c]), M);
                for (int rr = 0; rr < d; ++rr) r[rr][c] = coef[rr];
            }
            Vec cp = charpoly(r, M);
            int found = 0;
            for (long long lam = 0; lam < p && found < d; ++lam) {
                long long v = 0;
                for (int t = d; t >= 0; --t) v = M.add(M.mul(v, lam), cp[t]);
                if (v) continue;
                std::vector<Vec> shifted = r;
                for (int rr = 0; rr < d; ++rr) shifted[rr][rr] = M.sub(shifted[rr][rr], lam);
                std::vector<Vec> ker = nullspace(std::move(shifted), M);
                if (ker.empty()) throw lift_failure("eigenvalue without eigenvector");
                std::vector<Vec> amb;
                for (const Vec& y : ker) {
                    Vec w(k, 0);
                    for (int rr = 0; rr < d; ++rr) {
                        if (!y[rr]) continue;
                        for (int c = 0; c < k; ++c)
                            w[c] = M.add(w[c], M.mul(y[rr], s.rows[rr][c]));
                    }
                    amb.push_back(std::move(w));
                }
                found += static_cast<int>(ker.size());
                next.push_back(rref(std::move(amb), M));
            }
            if (found != d) throw lift_failure("class matrix not diagonalisable mod p");
        }
        spaces = std::move(next);
    }
    if (static_cast<int>(spaces.size()) != k)
        throw lift_failure("simultaneous eigenspaces did not separate");

    // normalise so the identity-class coordinate is 1; then omega_l =
    // |C_l| chi(z_l) / chi(1) mod p
    std::vector<Vec> omegas;
    for (const Space& s : spaces) {
        Vec v = s.rows[0];
        if (!v[0]) throw lift_failure("eigenvector vanishes at the identity class");
        long long sc = M.inv(v[0]);
        for (long long& x : v) x = M.mul(x, sc);
        omegas.push_back(std::move(v));
    }

    std::vector<int> linv(k);
    Vec szinv(k);
    for (int l = 0; l < k; ++l) {
        linv[l] = cd.inverse_class(l);
        szinv[l] = M.inv(cd.class_size[l] % p);
    }

    // degrees from the second orthogonality of omegas, then values mod p
    std::vector<int> degs(k);
    std::vector<Vec> chip(k, Vec(k, 0));
    int isq = static_cast<int>(std::sqrt(static_cast<double>(n))) + 1;
    for (int t = 0; t < k; ++t) {
        long long s = 0;
        for (int l = 0; l < k; ++l)
            s = M.add(s, M.mul(M.mul(omegas[t][l], omegas[t][linv[l]]), szinv[l]));
        if (!s) throw lift_failure("degree denominator vanished");
        long long d2 = M.mul(n % p, M.inv(s));
        int dd = -1;
        for (int c = 1; c <= isq; ++c)
            if (static_cast<long long>(c) * c == d2) { dd = c; break; }
        if (dd < 0) throw lift_failure("degree square did not lift");
        degs[t] = dd;
        for (int l = 0; l < k; ++l) chip[t][l] = M.mul(dd % p, M.mul(omegas[t][l], szinv[l]));
    }

    // lift chi(c) = sum_alpha N_alpha zeta_m^alpha by the inverse DFT mod p,
    // with the fixed identification zeta_e <-> eta
    long long eta = M.pow(primitive_root(M), (p - 1) / e);
    auto field = std::make_shared<const CycField>(e);
    CharacterTable table;
    table.k = k;
    table.e = e;
    table.field = field;
    table.degrees = degs;
    table.values.assign(k, {});
    for (int t = 0; t < k; ++t) {
        table.values[t].reserve(k);
        for (int l = 0; l < k; ++l) {
            int m = cd.class_order[l];
            long long eta_m = M.pow(eta, e / m);
            Vec pw(m);
            pw[0] = 1;
            for (int j = 1; j < m; ++j) pw[j] = M.mul(pw[j - 1], eta_m);
            long long minv = M.inv(m % p);
            Cyclotomic val(*field);
            long long total = 0;
            for (int alpha = 0; alpha < m; ++alpha) {
                long long acc = 0;
                for (int tt = 0; tt < m; ++tt) {
                    int expo = static_cast<int>((static_cast<long long>(m) * m - static_cast<long long>(alpha) * tt) % m);
                    acc = M.add(acc, M.mul(chip[t][cd.power_cl[l][tt]], pw[expo]));
                }
                long long na = M.mul(minv, acc);
                if (na > degs[t])
                    throw lift_failure("eigenvalue multiplicity out of range at lift");
                if (na) {
                    Cyclotomic term = Cyclotomic::root_power(*field, static_cast<long long>(e / m) * alpha);
                    term *= Rational(static_cast<long>(na));
                    val += term;
                }
                total += na;
            }
            if (total != degs[t]) throw lift_failure("eigenvalue multiplicities do not sum to the degree");
            table.values[t].push_back(std::move(val));
        }
    }

    // deterministic order: by degree, then lexicographic value vector
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (degs[x] != degs[y]) return degs[x] < degs[y];
        for (int l = 0; l < k; ++l) {
            if (table.values[x][l] != table.values[y][l]) return table.values[x][l] < table.values[y][l];
        }
        return false;
    });
    {
        std::vector<int> dsort(k);
        std::vector<std::vector<Cyclotomic>> vsort(k);
        for (int i = 0; i < k; ++i) {
            dsort[i] = degs[order[i]];
            vsort[i] = std::move(table.values[order[i]]);
        }
        table.degrees = std::move(dsort);
        table.values = std::move(vsort);
    }

    // exact verification: sum of squares, row and column orthogonality
    long long sq = 0;
    for (int d : table.degrees) sq += static_cast<long long>(d) * d;
    if (sq != n) throw orthogonality_failure("degree squares do not sum to the group order");
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Cyclotomic s(*field);
            for (int l = 0; l < k; ++l) {
                Cyclotomic term = table.values[i][l] * table.values[j][linv[l]];
                term *= Rational(static_cast<long>(cd.class_size[l]));
                s += term;
            }
            Cyclotomic want = Cyclotomic::from_rational(*field, i == j ? Rational(static_cast<long>(n)) : Rational(0));
            if (s != want) throw orthogonality_failure("row orthogonality failed");
        }
    for (int l = 0; l < k; ++l)
        for (int l2 = l; l2 < k; ++l2) {
            Cyclotomic s(*field);
            for (int t = 0; t < k; ++t) s += table.values[t][l] * table.values[t][linv[l2]];
            Rational centraliser(static_cast<long>(n), static_cast<long>(cd.class_size[l]));
            centraliser.canonicalize();
            Cyclotomic want =
                Cyclotomic::from_rational(*field, l == l2 ? centraliser : Rational(0));
            if (s != want) throw orthogonality_failure("column orthogonality failed");
        }

    table.trivial_index = -1;
    for (int t = 0; t < k; ++t) {
        if (table.degrees[t] != 1) continue;
        bool all1 = true;
        for (int l = 0; l < k && all1; ++l)
            if (table.values[t][l] != Cyclotomic::from_rational(*field, 1)) all1 = false;
        if (all1) { table.trivial_index = t; break; }
    }
    if (table.trivial_index < 0) throw lift_failure("trivial character missing");
    return table;
}

std::vector<long long> eigenvalue_multiplicities(const CharacterTable& t,
                                                 const ConjugacyData& cd, int chi, int c) {
    const CycField& f = *t.field;
    int m = cd.class_order[c];
    std::vector<long long> out(m, 0);
    for (int alpha = 0; alpha < m; ++alpha) {
        Cyclotomic s(f);
        for (int tt = 0; tt < m; ++tt) {
            Cyclotomic term = t.values[chi][cd.power_cl[c][tt]] *
                              Cyclotomic::root_power(f, -static_cast<long long>(f.e / m) * alpha * tt);
            s += term;
        }
        s *= Rational(1, static_cast<long>(m));
        if (!s.is_rational())
            throw non_integer_multiplicity("eigenvalue multiplicity is not rational");
        Rational r = s.rational_value();
        if (r.get_den() != 1 || r < 0)
            throw non_integer_multiplicity("eigenvalue multiplicity is not a nonnegative integer");
        out[alpha] = r.get_num().get_si();
    }
    return out;
}

Rational frobenius_class_sum(const CharacterTable& t, const ConjugacyData& cd,
                             const std::vector<std::pair<int, int>>& passport) {
    if (passport.empty()) throw error("frobenius_class_sum: empty passport");
    const CycField& f = *t.field;
    long long n = 0;
    for (int l = 0; l < cd.k; ++l) n += cd.class_size[l];
    long long r = 0;
    mpq_class coeff(1);
    for (const auto& [cls, mult] : passport) {
        r += mult;
        mpz_class size(cd.class_size[cls]);
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), size.get_mpz_t(), static_cast<unsigned long>(mult));
        coeff *= pw;
    }
    coeff /= mpz_class(static_cast<long>(n));
    Cyclotomic sum(f);
    for (int chi = 0; chi < t.k; ++chi) {
        Cyclotomic prod = Cyclotomic::from_rational(f, 1);
        for (const auto& [cls, mult] : passport) prod *= t.values[chi][cls].pow(mult);
        mpz_class dpow;
        mpz_class deg(t.degrees[chi]);
        if (r >= 2) {
            mpz_pow_ui(dpow.get_mpz_t(), deg.get_mpz_t(), static_cast<unsigned long>(r - 2));
            prod *= Rational(mpq_class(1, dpow));
        } else {
            mpz_pow_ui(dpow.get_mpz_t(), deg.get_mpz_t(), static_cast<unsigned long>(2 - r));
            prod *= Rational(mpq_class(dpow));
        }
        sum += prod;
    }
    if (!sum.is_rational()) throw non_integer_count("class-sum count is not rational");
    Rational out = coeff * sum.rational_value();
    if (out.get_den() != 1 || out < 0)
        throw non_integer_count("class-sum count is not a nonnegative integer");
    return out;
}

} // namespace hurwitz
