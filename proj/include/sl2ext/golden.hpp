#pragma once

// Frozen reference tables for the two p = 2 cohomology families
//   dim H^m(G, L(2^m))        for m = 4..31  (self-twist)
//   dim H^m(G, L(3 * 2^(m-2))) for m = 3..32  (r = 3 twist)
// together with the CSV encoding used to exchange tables.

#include "sl2ext/engine.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sl2ext {

std::string_view golden_self_twist_csv();
std::string_view golden_r3_twist_csv();

const std::vector<TableRow>& golden_self_twist();
const std::vector<TableRow>& golden_r3_twist();

// CSV with the exact header "m,weight,dim", one row per line. parse rejects
// malformed input with std::invalid_argument.
std::string format_table_csv(const std::vector<TableRow>& rows);
std::vector<TableRow> parse_table_csv(std::string_view csv);

}  // namespace sl2ext
