#include "floodscope/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace floodscope {

std::string format_number(double value, int min_decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", value);
    std::string s(buf);
    const size_t dot = s.find('.');
    size_t end = s.size();
    while (end > dot + 1 + static_cast<size_t>(min_decimals) && s[end - 1] == '0') --end;
    if (min_decimals == 0 && end == dot + 1) --end; // drop a bare trailing dot
    s.resize(end);
    if (s == "-0" || s == "-0.0" || s == "-0.00") s.erase(0, 1);
    return s;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

// Column precision mirrors the published tables: areas keep one decimal
// minimum, built-up and fractional columns keep two.
std::string to_csv(const AreaReport& report) {
    std::ostringstream out;
    out << "Tehsil,Total Area,Area of Affected Kharif Crop,Affected Built-Up\n";
    auto rows = report.rows;
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.region < b.region; });
    for (const auto& r : rows) {
        out << csv_escape(r.region) << ',' << format_number(r.total_km2, 1) << ','
            << format_number(r.affected_crop_km2, 1) << ','
            << format_number(r.affected_builtup_km2, 2) << '\n';
    }
    return out.str();
}

std::string to_csv(const CropAreaReport& report) {
    std::ostringstream out;
    out << "Month,Tehsil";
    for (const auto& c : report.crops) out << ',' << csv_escape(c);
    out << '\n';

    // Stable period blocks in first-appearance order, regions ascending inside.
    std::vector<std::string> period_order;
    for (const auto& r : report.rows)
        if (std::find(period_order.begin(), period_order.end(), r.period) == period_order.end())
            period_order.push_back(r.period);
    for (const auto& period : period_order) {
        std::vector<const CropAreaReport::Row*> block;
        for (const auto& r : report.rows)
            if (r.period == period) block.push_back(&r);
        std::sort(block.begin(), block.end(),
                  [](const auto* a, const auto* b) { return a->region < b->region; });
        for (const auto* r : block) {
            out << csv_escape(r->period) << ',' << csv_escape(r->region);
            for (double v : r->area_km2) out << ',' << format_number(v, 2);
            out << '\n';
        }
    }
    return out.str();
}

std::string to_csv(std::span<const MetricsReport> rows) {
    std::ostringstream out;
    out << "Model Name,Training Accuracy,Validation Accuracy,Recall,F1 Score,Precision\n";
    for (const auto& r : rows) {
        out << csv_escape(r.model_name) << ',' << format_number(r.training_accuracy, 2) << ','
            << format_number(r.validation_accuracy, 2) << ',' << format_number(r.macro_recall, 2)
            << ',' << format_number(r.macro_f1, 2) << ',' << format_number(r.macro_precision, 2)
            << '\n';
    }
    return out.str();
}

std::string to_csv(std::span<const TimeSeriesReport> series) {
    std::ostringstream out;
    out << "Region,Statistic,Period,Value,Valid Pixels\n";
    std::vector<const TimeSeriesReport*> ordered;
    for (const auto& s : series) ordered.push_back(&s);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto* a, const auto* b) { return a->region < b->region; });
    for (const auto* s : ordered) {
        for (const auto& sample : s->samples) {
            out << csv_escape(s->region) << ',' << csv_escape(s->statistic) << ','
                << csv_escape(sample.period) << ',' << format_number(sample.value, 2) << ','
                << sample.valid_pixels << '\n';
        }
    }
    return out.str();
}

} // namespace floodscope
