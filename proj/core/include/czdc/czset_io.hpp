#pragma once

#include <iosfwd>
#include <string>

#include "czdc/czset.hpp"

namespace czdc {

/**
 * @brief Writes one set in the text exchange format:
 *
 *   cz n=<n> ng=<ng> nh=<nh>
 *   <G: n rows of ng values>
 *   <c: one row>
 *   <A: nh rows of ng values>
 *   <b: one row>
 *
 * Values use 17 significant digits, so a read back reproduces the doubles
 * bit for bit. Multiple records may share one stream.
 */
void write_cz(std::ostream& out, const ConstrainedZonotope& x);

std::string to_cz_string(const ConstrainedZonotope& x);

/// @brief Parses one record; throws std::runtime_error on malformed input.
ConstrainedZonotope read_cz(std::istream& in);

ConstrainedZonotope from_cz_string(const std::string& text);

}  // namespace czdc
