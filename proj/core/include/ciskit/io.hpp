#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "ciskit/linear_code.hpp"
#include "ciskit/permutation.hpp"
#include "ciskit/z4.hpp"

namespace ciskit {

// Code files: "bin <k> <n>" followed by k rows of n characters 0/1, or
// "z4 <rows> <cols>" followed by rows of space-separated digits 0..3.
// Parse failures throw Errc::Parse.

BitMatrix read_binary_matrix(std::istream& in);
void write_binary_matrix(std::ostream& out, const BitMatrix& m);
void write_code(std::ostream& out, const LinearCode& code);

Z4Matrix read_z4_matrix(std::istream& in);
void write_z4_matrix(std::ostream& out, const Z4Matrix& m);

/// Dispatches on the header keyword.
std::variant<BitMatrix, Z4Matrix> read_any_matrix(std::istream& in);

BitMatrix load_binary_matrix(const std::string& path);
std::variant<BitMatrix, Z4Matrix> load_any_matrix(const std::string& path);

// S-box files: "n=<N>" then 2^N lowercase hex values, one per line.

void write_sbox(std::ostream& out, const PermutationTable& f);
PermutationTable read_sbox(std::istream& in);

/// Each row as ceil(n/4) hex digits, coordinate 0 being the most significant
/// bit, rows separated by commas.
std::string rows_to_hex(const BitMatrix& m);
BitMatrix rows_from_hex(std::string_view text, std::size_t length);

}  // namespace ciskit
