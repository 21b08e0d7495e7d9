#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// All failures below derive from error so callers can catch the library's
// problems in one place while still distinguishing the interesting ones.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- group construction -----------------------------------------------------

// Closing a generating set produced more elements than the caller's cap.
struct closure_cap_exceeded : error {
    explicit closure_cap_exceeded(const std::string& msg) : error(msg) {}
};

// A permutation string or image vector is not a bijection of the stated points.
struct invalid_permutation : error {
    explicit invalid_permutation(const std::string& msg) : error(msg) {}
};

// The automorphism-group backtracking search exhausted its node budget.
struct aut_cap_exceeded : error {
    explicit aut_cap_exceeded(const std::string& msg) : error(msg) {}
};

// --- catalog ----------------------------------------------------------------

// No catalog file for a requested order.
struct missing_order : error {
    explicit missing_order(const std::string& msg) : error(msg) {}
};

// Catalog file is syntactically malformed; message carries file and line.
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// A catalog entry's generators close to a group of the wrong order.
struct order_mismatch : error {
    explicit order_mismatch(const std::string& msg) : error(msg) {}
};

// A catalog file holds the wrong number of groups for its order.
struct count_mismatch : error {
    explicit count_mismatch(const std::string& msg) : error(msg) {}
};

// --- character tables -------------------------------------------------------

// Modular eigenvalue data did not lift to a consistent cyclotomic table.
struct lift_failure : error {
    explicit lift_failure(const std::string& msg) : error(msg) {}
};

// A computed table failed the exact orthogonality relations.
struct orthogonality_failure : error {
    explicit orthogonality_failure(const std::string& msg) : error(msg) {}
};

// --- search-time consistency guards ----------------------------------------
// These indicate an internal bug, never bad user input: the quantities are
// integers by theory, so a non-integer value means the computation is wrong.

struct non_integer_multiplicity : error {
    explicit non_integer_multiplicity(const std::string& msg) : error(msg) {}
};

struct non_integer_count : error {
    explicit non_integer_count(const std::string& msg) : error(msg) {}
};

struct non_integer_dimension : error {
    explicit non_integer_dimension(const std::string& msg) : error(msg) {}
};

// Orbit reduction needed to materialise more subsets than the configured cap.
struct subset_memory_cap : error {
    explicit subset_memory_cap(const std::string& msg) : error(msg) {}
};

} // namespace hurwitz
