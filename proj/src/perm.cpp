#include "hurwitz/perm.hpp"

#include "hurwitz/errors.hpp"

#include <cctype>
#include <sstream>

namespace hurwitz {

Perm perm_identity(int degree) {
    Perm p(degree);
    for (int i = 0; i < degree; ++i) p[i] = i;
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
}

Perm perm_inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

bool is_permutation(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Perm parse_cycles(const std::string& text, int degree) {
    Perm p = perm_identity(degree);
    std::vector<char> used(degree, 0);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw invalid_permutation("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cycle;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i >= text.size())
                throw invalid_permutation("unterminated cycle: " + text);
            if (text[i] == ')') { ++i; break; }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw invalid_permutation("unexpected character in cycle: " + text);
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (v < 1 || v > degree)
                throw invalid_permutation("point " + std::to_string(v) +
                                          " out of range 1.." + std::to_string(degree));
            if (used[v - 1])
                throw invalid_permutation("point " + std::to_string(v) +
                                          " repeated in cycles: " + text);
            used[v - 1] = 1;
            cycle.push_back(v - 1);
        }
        for (size_t k = 0; k < cycle.size(); ++k)
            p[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    if (!is_permutation(p))
        throw invalid_permutation("cycles do not define a permutation: " + text);
    return p;
}

std::string format_cycles(const Perm& p) {
    std::ostringstream out;
    std::vector<char> seen(p.size(), 0);
    bool any = false;
    for (size_t start = 0; start < p.size(); ++start) {
        if (seen[start] || p[start] == static_cast<int>(start)) continue;
        any = true;
        out << '(';
        size_t v = start;
        bool first = true;
        do {
            if (!first) out << ' ';
            first = false;
            out << v + 1;
            seen[v] = 1;
            v = p[v];
        } while (v != start);
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

} // namespace hurwitz
