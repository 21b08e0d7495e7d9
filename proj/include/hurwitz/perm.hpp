#pragma once

#include <string>
#include <vector>

namespace hurwitz {

// A permutation of {0, ..., n-1} stored as its image vector: p[i] is the image
// of point i.  Composition is "left then right": (a * b)[i] = b[a[i]].
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
bool is_permutation(const Perm& p);

// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2)(3 4)".
// Commas between points are accepted.  "()" and the empty string denote the
// identity.  Points must lie in 1..degree and no point may repeat.
// Throws invalid_permutation on malformed input.
Perm parse_cycles(const std::string& text, int degree);

// Formats a permutation in the same 1-based cycle notation; identity -> "()".
std::string format_cycles(const Perm& p);

} // namespace hurwitz
