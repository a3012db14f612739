#include "floodscope/dates.hpp"

#include <cctype>

namespace floodscope {
namespace {

bool all_digits(std::string_view s) {
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return !s.empty();
}

int to_int(std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

bool is_leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

int days_in_month(int y, int m) {
    static const int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return days[m - 1];
}

} // namespace

bool is_valid_month(std::string_view s) {
    if (s.size() != 7 || s[4] != '-') return false;
    if (!all_digits(s.substr(0, 4)) || !all_digits(s.substr(5, 2))) return false;
    const int m = to_int(s.substr(5, 2));
    return m >= 1 && m <= 12;
}

bool is_valid_date(std::string_view s) {
    if (s.size() != 10 || s[7] != '-') return false;
    if (!is_valid_month(s.substr(0, 7))) return false;
    if (!all_digits(s.substr(8, 2))) return false;
    const int y = to_int(s.substr(0, 4));
    const int m = to_int(s.substr(5, 2));
    const int d = to_int(s.substr(8, 2));
    return d >= 1 && d <= days_in_month(y, m);
}

int month_of(std::string_view s) { return to_int(s.substr(5, 2)); }

std::string month_key(int month) {
    std::string key = "00";
    key[0] = static_cast<char>('0' + month / 10);
    key[1] = static_cast<char>('0' + month % 10);
    return key;
}

} // namespace floodscope
