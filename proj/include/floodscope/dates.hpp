#ifndef FLOODSCOPE_DATES_HPP
#define FLOODSCOPE_DATES_HPP

#include <string>
#include <string_view>

namespace floodscope {

// ISO-8601 calendar strings. Lexicographic order equals chronological order
// for valid values, so callers compare the strings directly.

bool is_valid_date(std::string_view s);  // YYYY-MM-DD
bool is_valid_month(std::string_view s); // YYYY-MM

/// Month-of-year (1..12) of a valid date or month string.
int month_of(std::string_view s);

/// "04" from 4; month-of-year keys for series reports.
std::string month_key(int month);

} // namespace floodscope

#endif
