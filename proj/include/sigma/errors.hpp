#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sigma {

/// Base class for all recoverable errors raised by the library.
/// `kind()` is a stable machine-readable tag; `what()` adds detail.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define SIGMA_DEFINE_ERROR(class_name, kind_string)                           \
    class class_name : public error {                                         \
    public:                                                                   \
        explicit class_name(const std::string& what)                          \
            : error(kind_string, what) {}                                     \
    }

SIGMA_DEFINE_ERROR(order_bound_exceeded, "OrderBoundExceeded");
SIGMA_DEFINE_ERROR(invalid_permutation, "InvalidPermutation");
SIGMA_DEFINE_ERROR(lattice_bound_exceeded, "LatticeBoundExceeded");
SIGMA_DEFINE_ERROR(not_an_automorphism, "NotAnAutomorphism");
SIGMA_DEFINE_ERROR(not_a_homomorphism, "NotAHomomorphism");
SIGMA_DEFINE_ERROR(not_normal, "NotNormal");
SIGMA_DEFINE_ERROR(trivial_group, "TrivialGroup");
SIGMA_DEFINE_ERROR(parse_error, "ParseError");
SIGMA_DEFINE_ERROR(overlapping_blocks, "OverlappingBlocks");
SIGMA_DEFINE_ERROR(unknown_block, "UnknownBlock");
SIGMA_DEFINE_ERROR(not_sigma_full, "NotSigmaFull");
SIGMA_DEFINE_ERROR(unknown_entry, "UnknownEntry");
SIGMA_DEFINE_ERROR(invalid_table, "InvalidTable");

#undef SIGMA_DEFINE_ERROR

} // namespace sigma
