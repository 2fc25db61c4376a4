#pragma once

// Text formats.
//
// Code file:
//   q n k
//   k rows of n whitespace-separated entries in [0, q)
//   optional "+ d_1 ... d_n" line: affine offset
// A row may also be written as one run of n digits ("0110") when q <= 10.
// Blank lines and lines starting with '#' are ignored.
//
// Function file:
//   optional header "q n"
//   "index re im" per entry; absent indices are zero.

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "specktral/codes.hpp"
#include "specktral/fourier.hpp"

namespace specktral {

class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument("parse error: " + what) {}
};

FqMatrix read_matrix(std::istream& in);
AffineCode read_code(std::istream& in);

void write_matrix(std::ostream& out, const FqMatrix& m);
void write_code(std::ostream& out, const LinearCode& c);
void write_code(std::ostream& out, const AffineCode& c);

struct Domain {
    std::uint32_t q;
    std::size_t n;
};

/// `fallback` supplies the domain when the stream has no header.
DenseFunction read_function(std::istream& in, std::optional<Domain> fallback = std::nullopt,
                            const Limits& limits = {});
/// Writes the header and every entry with |f(x)| > tol, 12 significant digits.
void write_function(std::ostream& out, const DenseFunction& f, double tol = 0.0);

/// printf("%.12g"), with negative zero printed as 0.
std::string format_double(double v);

}  // namespace specktral
