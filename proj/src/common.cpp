#include "floodscope/common.hpp"

namespace floodscope {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::degenerate_polygon: return "DegeneratePolygon";
    case Errc::grid_mismatch: return "GridMismatch";
    case Errc::bad_magic: return "BadMagic";
    case Errc::unsupported_feature: return "UnsupportedFeature";
    case Errc::truncated_file: return "TruncatedFile";
    case Errc::missing_tag: return "MissingTag";
    case Errc::value_out_of_range: return "ValueOutOfRange";
    case Errc::parse_error: return "ParseError";
    case Errc::missing_file: return "MissingFile";
    case Errc::date_order: return "DateOrderError";
    case Errc::empty_input: return "EmptyInput";
    case Errc::empty_dataset: return "EmptyDataset";
    case Errc::single_sample: return "SingleSample";
    case Errc::class_absent: return "ClassAbsent";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::invalid_feature: return "InvalidFeature";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::label_out_of_range: return "LabelOutOfRange";
    case Errc::empty_matrix: return "EmptyMatrix";
    case Errc::missing_band: return "MissingBand";
    case Errc::no_regions: return "NoRegions";
    case Errc::unknown_crop: return "UnknownCrop";
    case Errc::empty_region: return "EmptyRegion";
    case Errc::layer_mismatch: return "LayerMismatch";
    case Errc::mixed_layers: return "MixedLayers";
    case Errc::empty_series: return "EmptySeries";
    case Errc::bad_threshold: return "BadThreshold";
    case Errc::spec_out_of_bounds: return "SpecOutOfBounds";
    case Errc::bad_sigma: return "BadSigma";
    case Errc::bad_params: return "BadParams";
    case Errc::baseline_gap: return "BaselineGap";
    case Errc::unknown_command: return "UnknownCommand";
    case Errc::missing_argument: return "MissingArgument";
    case Errc::invalid_value: return "InvalidValue";
    case Errc::io_error: return "IoError";
    }
    return "Error";
}

} // namespace floodscope
