#pragma once

#include <iosfwd>
#include <string>

#include "segmin/core.hpp"

namespace segmin {

// Matrix text format: first non-comment line "m n", then m lines of n
// whitespace-separated decimal integers. Lines whose first non-blank
// character is '#' are ignored. Values above 2^32 are rejected.
IntensityMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const IntensityMatrix& t);

// Segmentation document: JSON with target dims and one object per segment,
// field names {value, rows:[{row, l, r}]} fixed for round-trip compatibility.
Segmentation read_segmentation(std::istream& in);
void write_segmentation(std::ostream& out, const Segmentation& s);

// Path helpers; "-" selects stdin/stdout.
IntensityMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const IntensityMatrix& t);
Segmentation read_segmentation_file(const std::string& path);
void write_segmentation_file(const std::string& path, const Segmentation& s);

}  // namespace segmin
