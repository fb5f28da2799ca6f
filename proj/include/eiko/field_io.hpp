#ifndef EIKO_FIELD_IO_HPP
#define EIKO_FIELD_IO_HPP

#include <string>

#include "eiko/grid.hpp"

namespace eiko {

/// Text field file, bit-reproducible:
///   line 1: EIKO1 <nx> <ny> <x0> <y0> <h>
///   then nx*ny lines "<u1> <u2>", row-major (y outer, x inner),
///   all reals with 17 significant digits.
/// GridScalar files are identical with tag EIKS1 and one value per line.
void write_field(const GridField2& u, const std::string& path);
GridField2 read_field(const std::string& path);

void write_scalar(const GridScalar& s, const std::string& path);
GridScalar read_scalar(const std::string& path);

/// Peeks at the header tag ("EIKO1" or "EIKS1").
std::string field_file_tag(const std::string& path);

} // namespace eiko

#endif
