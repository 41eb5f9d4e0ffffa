#pragma once

// Text formats:
//   arc list       one "t u" per line, '#' starts a comment line
//   config file    "w <w> window <lo> <hi>" then an arc list
//   config line    "(t,u),(t,u),..."
//   partition      "{1,3}{2}", blocks by minimum, elements ascending
//   Nakayama       "deg:<i> socle:<a_1> len:<l>" or the sequence "(a_l,...,a_1)"
// Parse failures throw ParseError.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "homcfg/config_kernel.hpp"
#include "homcfg/noncross.hpp"
#include "homcfg/perp_orbit.hpp"
#include "homcfg/polygon_quiver.hpp"

namespace homcfg::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Arc> read_arc_list(std::istream& in);
void write_arc_list(std::ostream& out, const std::vector<Arc>& arcs);

ArcConfig read_config(std::istream& in);
void write_config(std::ostream& out, const ArcConfig& cfg);

// "t,u" (whitespace tolerated, optional parentheses).
Arc parse_arc(std::string_view text);
// "lo..hi"
Window parse_window(std::string_view text);

std::string config_line(const ArcConfig& cfg);
std::string diagonal_line(const std::vector<Diagonal>& diagonals);

NCPartition parse_partition(std::string_view text);

// Sequence form takes its degree separately.
NakayamaObject parse_nakayama(std::string_view text, int n, int m, int degree_for_sequence = 0);

}  // namespace homcfg::io
