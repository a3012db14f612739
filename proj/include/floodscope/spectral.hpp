#ifndef FLOODSCOPE_SPECTRAL_HPP
#define FLOODSCOPE_SPECTRAL_HPP

#include "floodscope/raster.hpp"

#include <span>

namespace floodscope {

enum class IndexKind { NDVI, NDWI, EVI };

/// A computed spectral index carried with the grid it came from.
struct IndexBand {
    IndexKind kind = IndexKind::NDVI;
    Band band;
    GeoTransform geo;
    int width = 0;
    int height = 0;
};

// Array-level index math. Zero (or near-zero, for EVI) denominators and any
// nodata input map to NaN.
GridArray ndvi_values(const GridArray& nir, const GridArray& red);
GridArray ndwi_values(const GridArray& green, const GridArray& nir);
GridArray evi_values(const GridArray& nir, const GridArray& red, const GridArray& blue);

IndexBand compute_ndvi(const RasterGrid& grid, std::string_view nir = "nir",
                       std::string_view red = "red");
IndexBand compute_ndwi(const RasterGrid& grid, std::string_view green = "green",
                       std::string_view nir = "nir");
IndexBand compute_evi(const RasterGrid& grid, std::string_view nir = "nir",
                      std::string_view red = "red", std::string_view blue = "blue");

enum class NdwiComparator { LESS, GREATER_EQUAL };

/// Flood-pixel decision rule. The default follows the printed form of the
/// source rule literally (NDWI < 0.15 and NDVI < 0.2); the comparator is
/// configurable because that polarity is disputed.
struct FloodRule {
    double ndwi_threshold = 0.15;
    double ndvi_threshold = 0.2;
    NdwiComparator ndwi_comparator = NdwiComparator::LESS;
};

void validate(const FloodRule& rule);

/// Bit set iff both comparisons pass; nodata never classifies as flood.
/// Threshold comparisons are strict `<` (and `>=` for the flipped polarity).
Mask apply_flood_rule(const IndexBand& ndwi, const IndexBand& ndvi, const FloodRule& rule);

/// Pixels that test as water (NDWI >= water_threshold) in at least
/// min_fraction of the pre-flood scenes carrying valid data there.
Mask derive_permanent_water(std::span<const IndexBand> pre_flood_ndwi, double water_threshold,
                            double min_fraction);

/// Bit set iff NDVI < threshold and valid; screens shrub/grass pixels out of
/// crop classification.
Mask low_vegetation_mask(const IndexBand& ndvi, double threshold);

} // namespace floodscope

#endif
