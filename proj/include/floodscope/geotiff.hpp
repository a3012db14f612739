#ifndef FLOODSCOPE_GEOTIFF_HPP
#define FLOODSCOPE_GEOTIFF_HPP

#include "floodscope/raster.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace floodscope {

// Classic TIFF subset: little-endian, uncompressed, chunky planar,
// strip-organized, sample formats uint8/uint16/float32. Pixel scale and
// tiepoint tags carry the geotransform; GDAL tag 42113 carries nodata.

enum class SampleFormat { uint8, uint16, float32 };

struct GeoTiffInfo {
    int width = 0;
    int height = 0;
    int samples = 0;
    SampleFormat format = SampleFormat::float32;
    GeoTransform geo;
};

/// Header-only parse: dimensions and geotransform without touching pixel data.
GeoTiffInfo peek_geotiff(const std::vector<std::uint8_t>& bytes);

/// Full decode. uint samples widen exactly to float; nodata becomes NaN.
/// Bands are named b1..bN.
RasterGrid parse_geotiff(const std::vector<std::uint8_t>& bytes);

/// Deterministic encode: fixed tag order, strips of at most 8192 rows.
/// Integer formats require integral values in range; NaN maps to the
/// all-ones sentinel recorded in the nodata tag.
std::vector<std::uint8_t> write_geotiff(const RasterGrid& grid, SampleFormat format);

RasterGrid read_geotiff_file(const std::string& path);
void write_geotiff_file(const std::string& path, const RasterGrid& grid, SampleFormat format);

} // namespace floodscope

#endif
