#pragma once

#include <stdexcept>
#include <string>

namespace csph {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A face with a zero or repeated vertex id.
struct malformed_face_error : error { using error::error; };

/// Join-type operations require disjoint vertex sets.
struct disjointness_error : error { using error::error; };

/// link() was asked about a set that is not a face.
struct not_a_face_error : error { using error::error; };

/// An operation precondition was violated (purity, subcomplex, dimension).
struct precondition_error : error { using error::error; };

/// boundary() found a ridge lying in three or more facets.
struct pseudomanifold_error : error { using error::error; };

/// Construction index outside its admissible range.
struct domain_error : error { using error::error; };

/// A theorem-backed assertion failed while running the construction.
struct invariant_error : error { using error::error; };

/// Serialization parse failure; the message carries position context.
struct parse_error : error { using error::error; };

/// An enumeration guard refused the requested computation.
struct resource_error : error { using error::error; };

}  // namespace csph
