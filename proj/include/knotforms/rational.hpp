#pragma once

#include <gmpxx.h>

#include <string>

#include "knotforms/errors.hpp"

namespace knotforms {

// Exact rationals are GMP mpq_class values, always kept canonical
// (coprime, positive denominator). These helpers cover the textual
// form "p/q" used across the CLI and JSON surfaces.

inline int sign_of(const mpq_class& q) { return sgn(q); }

inline bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

// Parses "p", "-p", or "p/q" with an optional leading sign. Rejects q = 0.
mpq_class parse_rational(const std::string& text);

// Canonical textual form: "p" for integers, "p/q" otherwise.
std::string rational_str(const mpq_class& q);

}  // namespace knotforms
