#ifndef FLOODSCOPE_COMMON_HPP
#define FLOODSCOPE_COMMON_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace floodscope {

/// Dense pixel storage. Rasters are row-major so a band's memory layout
/// matches the on-disk strip order.
using GridArray = Eigen::Array<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MaskArray = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class Errc {
    degenerate_polygon,
    grid_mismatch,
    bad_magic,
    unsupported_feature,
    truncated_file,
    missing_tag,
    value_out_of_range,
    parse_error,
    missing_file,
    date_order,
    empty_input,
    empty_dataset,
    single_sample,
    class_absent,
    dimension_mismatch,
    invalid_feature,
    length_mismatch,
    label_out_of_range,
    empty_matrix,
    missing_band,
    no_regions,
    unknown_crop,
    empty_region,
    layer_mismatch,
    mixed_layers,
    empty_series,
    bad_threshold,
    spec_out_of_bounds,
    bad_sigma,
    bad_params,
    baseline_gap,
    unknown_command,
    missing_argument,
    invalid_value,
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace floodscope

#endif
