#pragma once

#include <stdexcept>
#include <string>

namespace qpf {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rejected input, argument outside a domain of definition, ring mismatch,
/// pole of a Gamma factor, and similar caller-visible conditions.
struct domain_error : error {
    using error::error;
};

/// A quantity cannot leave Q_p: roots of the given polynomial lie in a
/// ramified or unramified extension.
struct not_in_ground_field : domain_error {
    using domain_error::domain_error;
};

/// Not enough p-adic or q-adic precision to produce the requested output.
/// The message states the required bound.
struct precision_error : error {
    using error::error;
};

/// An internal invariant failed (e.g. an exact divisibility that a theorem
/// guarantees). Always a bug, never a user error.
struct internal_error : error {
    using error::error;
};

}  // namespace qpf
