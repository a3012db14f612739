#ifndef FLOODSCOPE_REPORTS_HPP
#define FLOODSCOPE_REPORTS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace floodscope {

/// Per-tehsil impact table: total, affected crop, affected built-up (km^2).
struct AreaReport {
    struct Row {
        std::string region;
        double total_km2 = 0.0;
        double affected_crop_km2 = 0.0;
        double affected_builtup_km2 = 0.0;
    };
    std::vector<Row> rows; // sorted by region name
};

/// Per-period, per-region crop areas (km^2), one column per crop.
struct CropAreaReport {
    std::vector<std::string> crops;
    struct Row {
        std::string period;
        std::string region;
        std::vector<double> area_km2; // parallel to crops
    };
    std::vector<Row> rows; // period blocks in input order, regions ascending
};

/// Classifier comparison row (all values are fractions in [0,1]).
struct MetricsReport {
    std::string model_name;
    double training_accuracy = 0.0;
    double validation_accuracy = 0.0;
    double macro_recall = 0.0;
    double macro_f1 = 0.0;
    double macro_precision = 0.0;
};

struct TimeSeriesReport {
    struct Sample {
        std::string period;
        double value = 0.0;
        std::int64_t valid_pixels = 0;
    };
    std::string region;
    std::string statistic; // e.g. "mean_ndvi", "moisture_fraction"
    std::vector<Sample> samples; // periods strictly increasing
};

/// Round half away from rendering via %.4f, then trim trailing zeros down to
/// min_decimals digits after the point.
std::string format_number(double value, int min_decimals);

/// RFC-4180 quoting for a single field.
std::string csv_escape(const std::string& field);

std::string to_csv(const AreaReport& report);
std::string to_csv(const CropAreaReport& report);
std::string to_csv(std::span<const MetricsReport> rows);
std::string to_csv(std::span<const TimeSeriesReport> series);

} // namespace floodscope

#endif
