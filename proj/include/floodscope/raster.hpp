#ifndef FLOODSCOPE_RASTER_HPP
#define FLOODSCOPE_RASTER_HPP

#include "floodscope/common.hpp"

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace floodscope {

/// Affine pixel <-> map mapping for north-up grids in projected meters.
/// Pixel (col,row) center sits at
///   x = origin_x + (col + 0.5) * pixel_size_x
///   y = origin_y - (row + 0.5) * pixel_size_y
struct GeoTransform {
    double origin_x = 0.0;
    double origin_y = 0.0;
    double pixel_size_x = 1.0;
    double pixel_size_y = 1.0;
    std::string crs_id;

    bool operator==(const GeoTransform&) const = default;

    void pixel_center(int col, int row, double& x, double& y) const {
        x = origin_x + (col + 0.5) * pixel_size_x;
        y = origin_y - (row + 0.5) * pixel_size_y;
    }
    /// Map coordinates to the pixel whose cell contains them.
    void map_to_pixel(double x, double y, int& col, int& row) const {
        col = static_cast<int>(std::floor((x - origin_x) / pixel_size_x));
        row = static_cast<int>(std::floor((origin_y - y) / pixel_size_y));
    }
};

/// km^2 covered by one pixel.
double pixel_area_km2(const GeoTransform& gt);

/// Crude screen for geographic (degree) rasters, which the area math rejects.
bool looks_geographic(const GeoTransform& gt);

struct Band {
    std::string name;
    GridArray values; // rows x cols, NaN = nodata
    float nodata = std::numeric_limits<float>::quiet_NaN();
    std::string units;
};

struct RasterGrid {
    int width = 0;
    int height = 0;
    GeoTransform geo;
    std::vector<Band> bands;
    std::optional<std::string> acquisition_date;

    const Band* find_band(std::string_view name) const;
    const Band& band(std::string_view name) const; // throws MissingBand
};

/// Throws on dimension/band-name violations.
void validate(const RasterGrid& grid);

RasterGrid make_grid(int width, int height, const GeoTransform& gt);
Band make_band(std::string name, int width, int height, float fill);

struct Mask {
    int width = 0;
    int height = 0;
    MaskArray bits;
    GeoTransform geo;

    std::int64_t popcount() const { return bits.count(); }
};

Mask make_mask(int width, int height, const GeoTransform& gt, bool fill = false);

bool aligned(const Mask& a, const Mask& b);
bool aligned(const RasterGrid& a, const RasterGrid& b);
void require_aligned(const Mask& a, const Mask& b);
void require_aligned(const RasterGrid& a, const RasterGrid& b);

enum class MaskOp { AND, OR, AND_NOT };

Mask mask_combine(const Mask& a, const Mask& b, MaskOp op);

struct Region {
    std::string name;
    /// Vertices in CRS meters; implicitly closed (last connects to first).
    Eigen::Matrix<double, Eigen::Dynamic, 2> polygon;
    mutable std::optional<Mask> cached_mask;
};

/// Scanline even-odd rasterization at pixel centers. Half-open convention:
/// a center exactly on a left/top edge is inside, on a right/bottom edge is
/// outside, so adjacent regions never double-count a pixel.
Mask rasterize_polygon(const Region& region, const GeoTransform& gt, int width, int height);

/// Rasterize through the region's cache; recomputes when the cached mask
/// belongs to a different grid. Not safe to call concurrently for one Region.
const Mask& region_mask(const Region& region, const GeoTransform& gt, int width, int height);

double mask_area_km2(const Mask& m);
double mask_area_km2(const Mask& m, const Region& within);

/// Region polygons, one per line: `name;x1,y1 x2,y2 ...` in CRS meters.
std::vector<Region> parse_regions(std::string_view text);
std::vector<Region> load_regions(const std::string& path);

/// Nearest-neighbor resample onto a reference grid (same CRS required).
/// Reference pixels whose center falls outside the source become nodata.
RasterGrid align_nearest(const RasterGrid& src, const GeoTransform& ref_gt, int ref_width,
                         int ref_height);

} // namespace floodscope

#endif
