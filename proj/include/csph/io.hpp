#pragma once

#include <string>

#include "csph/complex.hpp"
#include "csph/verify.hpp"

namespace csph::io {

/// Canonical JSON document:
///   {"format_version":"1","kind":"void|nonvoid","n":N,"dim":D,"facets":[[...],...]}
/// Facets sorted lexicographically, each internally ascending. Equal
/// complexes serialize to identical bytes. Vertex ids must fit in +-n.
std::string to_json(const Complex& a, int n);

struct ParsedComplex {
    Complex complex;
    int ambient_n = 0;
};

/// Strict parse: canonical key order, canonical facet order, ids within
/// +-n, facet list an antichain. Violations raise parse_error with the
/// offending position.
ParsedComplex from_json(const std::string& text);

/// One facet per line, space-separated signed integers, lines in canonical
/// order, LF endings. VOID is the empty text; EMPTY is a single blank line.
std::string to_flat(const Complex& a);

/// Lenient parse for facet-list interop: `#` lines are comments, vertex
/// order inside a line is free, non-maximal facets are absorbed. Non-integer
/// tokens raise parse_error.
Complex from_flat(const std::string& text);

/// Verification report as JSON (checks with status, witnesses, timings).
std::string report_to_json(const VerificationReport& report);

}  // namespace csph::io
