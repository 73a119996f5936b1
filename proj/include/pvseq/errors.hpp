// Library error types.
//
// Domain errors report invalid input and map to CLI exit code 1.
// internal_check_failure means a verified mathematical identity failed at
// runtime, which is a bug trap, and maps to CLI exit code 2.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pvseq {

struct degenerate_sequence : std::domain_error {
    explicit degenerate_sequence(const std::string& what)
        : std::domain_error(what) {}
};

/// Some leading principal minor vanishes; the minor-counting route does not
/// apply and the caller should fall back to congruence diagonalization.
struct minor_vanishes : std::domain_error {
    explicit minor_vanishes(std::size_t k_)
        : std::domain_error("leading minor " + std::to_string(k_) + " vanishes"),
          k(k_) {}
    std::size_t k;
};

struct not_in_w : std::domain_error {
    explicit not_in_w(const std::string& what) : std::domain_error(what) {}
};

struct not_normalized : std::domain_error {
    explicit not_normalized(const std::string& what) : std::domain_error(what) {}
};

struct invalid_label : std::domain_error {
    explicit invalid_label(const std::string& what) : std::domain_error(what) {}
};

struct singular_matrix : std::domain_error {
    explicit singular_matrix(const std::string& what) : std::domain_error(what) {}
};

struct singular_intersection_block : std::domain_error {
    explicit singular_intersection_block(const std::string& what)
        : std::domain_error(what) {}
};

struct generic_point_failure : std::runtime_error {
    explicit generic_point_failure(const std::string& what)
        : std::runtime_error(what) {}
};

/// A theorem-backed identity failed. Never a user error.
struct internal_check_failure : std::logic_error {
    explicit internal_check_failure(const std::string& what)
        : std::logic_error(what) {}
};

}  // namespace pvseq
