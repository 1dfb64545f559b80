#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rimhook/partition.hpp"
#include "rimhook/rpp.hpp"
#include "rimhook/verify.hpp"

namespace rimhook {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace io {

/// "i,j" with positive coordinates.
Cell parse_cell(std::string_view text);

/// A list of corner cells, items separated by whitespace or ';', each "i,j"
/// optionally suffixed "*k" for multiplicity. Example: "1,1*3 2,2".
std::vector<Cell> parse_cell_list(std::string_view text);

/// Inverse of parse_cell_list: equal consecutive cells grouped as "i,j*k".
std::string cell_list_text(const std::vector<Cell>& cells);

/// Detects the form: JSON when the first non-space character is '{', a plain
/// text grid otherwise. Throws ParseError with position diagnostics, or
/// RppError when the filling violates monotonicity.
ReversePlanePartition parse_rpp(std::string_view text);
ReversePlanePartition parse_rpp_json(std::string_view text);
/// Rows of space-separated integers, one line per shape row; the shape is
/// inferred from the row lengths.
ReversePlanePartition parse_rpp_text(std::string_view text);

/// Canonical one-line JSON {"rows":[[...],...],"shape":[...]}. Byte-stable:
/// equal fillings always serialize identically.
std::string rpp_json(const ReversePlanePartition& rpp);
std::string rpp_text(const ReversePlanePartition& rpp);

/// Aligned grid for humans; entries of marked cells are bracketed.
std::string render_grid(const ReversePlanePartition& rpp,
                        const std::vector<Cell>& marked = {});

std::string report_json(const CheckReport& report);

}  // namespace io
}  // namespace rimhook
