#include "floodscope/raster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace floodscope {

double pixel_area_km2(const GeoTransform& gt) {
    return gt.pixel_size_x * gt.pixel_size_y / 1e6;
}

bool looks_geographic(const GeoTransform& gt) {
    std::string up;
    up.reserve(gt.crs_id.size());
    for (char c : gt.crs_id) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (up.find("4326") != std::string::npos) return true;
    if (up.find("CRS84") != std::string::npos) return true;
    if (up.find("DEGREE") != std::string::npos) return true;
    // Sub-meter "pixels" near the lat/lon value range are almost certainly degrees.
    return gt.pixel_size_x < 0.01 && gt.pixel_size_y < 0.01 && std::abs(gt.origin_x) <= 360.0 &&
           std::abs(gt.origin_y) <= 90.0;
}

const Band* RasterGrid::find_band(std::string_view name) const {
    for (const Band& b : bands)
        if (b.name == name) return &b;
    return nullptr;
}

const Band& RasterGrid::band(std::string_view name) const {
    if (const Band* b = find_band(name)) return *b;
    raise(Errc::missing_band, "no band named '" + std::string(name) + "'");
}

void validate(const RasterGrid& grid) {
    if (grid.width < 1 || grid.height < 1)
        raise(Errc::value_out_of_range, "grid dimensions must be >= 1");
    if (grid.geo.pixel_size_x <= 0.0 || grid.geo.pixel_size_y <= 0.0)
        raise(Errc::value_out_of_range, "pixel sizes must be positive");
    std::set<std::string> names;
    for (const Band& b : grid.bands) {
        if (b.values.rows() != grid.height || b.values.cols() != grid.width)
            raise(Errc::grid_mismatch, "band '" + b.name + "' dimensions differ from grid");
        if (!names.insert(b.name).second)
            raise(Errc::value_out_of_range, "duplicate band name '" + b.name + "'");
    }
}

RasterGrid make_grid(int width, int height, const GeoTransform& gt) {
    RasterGrid g;
    g.width = width;
    g.height = height;
    g.geo = gt;
    validate(g);
    return g;
}

Band make_band(std::string name, int width, int height, float fill) {
    Band b;
    b.name = std::move(name);
    b.values = GridArray::Constant(height, width, fill);
    return b;
}

Mask make_mask(int width, int height, const GeoTransform& gt, bool fill) {
    Mask m;
    m.width = width;
    m.height = height;
    m.geo = gt;
    m.bits = MaskArray::Constant(height, width, fill);
    return m;
}

bool aligned(const Mask& a, const Mask& b) {
    return a.width == b.width && a.height == b.height && a.geo == b.geo;
}

bool aligned(const RasterGrid& a, const RasterGrid& b) {
    return a.width == b.width && a.height == b.height && a.geo == b.geo;
}

void require_aligned(const Mask& a, const Mask& b) {
    if (!aligned(a, b)) raise(Errc::grid_mismatch, "masks are not on the same grid");
}

void require_aligned(const RasterGrid& a, const RasterGrid& b) {
    if (!aligned(a, b)) raise(Errc::grid_mismatch, "grids are not aligned");
}

Mask mask_combine(const Mask& a, const Mask& b, MaskOp op) {
    require_aligned(a, b);
    Mask out = a;
    switch (op) {
    case MaskOp::AND: out.bits = a.bits && b.bits; break;
    case MaskOp::OR: out.bits = a.bits || b.bits; break;
    case MaskOp::AND_NOT: out.bits = a.bits && !b.bits; break;
    }
    return out;
}

namespace {

double polygon_area(const Eigen::Matrix<double, Eigen::Dynamic, 2>& poly) {
    double twice = 0.0;
    const auto n = poly.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index j = (i + 1) % n;
        twice += poly(i, 0) * poly(j, 1) - poly(j, 0) * poly(i, 1);
    }
    return std::abs(twice) / 2.0;
}

} // namespace

Mask rasterize_polygon(const Region& region, const GeoTransform& gt, int width, int height) {
    const auto n = region.polygon.rows();
    if (n < 3)
        raise(Errc::degenerate_polygon, "region '" + region.name + "' has fewer than 3 vertices");
    if (polygon_area(region.polygon) == 0.0)
        raise(Errc::degenerate_polygon, "region '" + region.name + "' has zero area");

    // Work in pixel coordinates: px = (x - origin_x)/sx, py = (origin_y - y)/sy.
    std::vector<double> px(static_cast<size_t>(n)), py(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        px[static_cast<size_t>(i)] = (region.polygon(i, 0) - gt.origin_x) / gt.pixel_size_x;
        py[static_cast<size_t>(i)] = (gt.origin_y - region.polygon(i, 1)) / gt.pixel_size_y;
    }

    Mask out = make_mask(width, height, gt);
    std::vector<double> crossings;
    for (int row = 0; row < height; ++row) {
        const double yc = row + 0.5;
        crossings.clear();
        for (size_t i = 0; i < px.size(); ++i) {
            const size_t j = (i + 1) % px.size();
            const double y1 = py[i], y2 = py[j];
            if ((y1 <= yc && yc < y2) || (y2 <= yc && yc < y1))
                crossings.push_back(px[i] + (yc - y1) * (px[j] - px[i]) / (y2 - y1));
        }
        std::sort(crossings.begin(), crossings.end());
        for (size_t k = 0; k + 1 < crossings.size(); k += 2) {
            // Centers in [x_even, x_odd): col + 0.5 >= lo and < hi.
            int c0 = static_cast<int>(std::ceil(crossings[k] - 0.5));
            int c1 = static_cast<int>(std::ceil(crossings[k + 1] - 0.5));
            c0 = std::max(c0, 0);
            c1 = std::min(c1, width);
            for (int c = c0; c < c1; ++c) out.bits(row, c) = true;
        }
    }
    return out;
}

const Mask& region_mask(const Region& region, const GeoTransform& gt, int width, int height) {
    if (!region.cached_mask || region.cached_mask->width != width ||
        region.cached_mask->height != height || !(region.cached_mask->geo == gt)) {
        region.cached_mask = rasterize_polygon(region, gt, width, height);
    }
    return *region.cached_mask;
}

double mask_area_km2(const Mask& m) {
    return static_cast<double>(m.popcount()) * pixel_area_km2(m.geo);
}

double mask_area_km2(const Mask& m, const Region& within) {
    const Mask& rm = region_mask(within, m.geo, m.width, m.height);
    return static_cast<double>((m.bits && rm.bits).count()) * pixel_area_km2(m.geo);
}

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

std::vector<Region> parse_regions(std::string_view text) {
    std::vector<Region> regions;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const size_t semi = t.find(';');
        if (semi == std::string::npos)
            raise(Errc::parse_error, "regions line " + std::to_string(line_no) + ": missing ';'");
        Region r;
        r.name = trim(t.substr(0, semi));
        if (r.name.empty())
            raise(Errc::parse_error, "regions line " + std::to_string(line_no) + ": empty name");
        std::istringstream coords(t.substr(semi + 1));
        std::vector<std::pair<double, double>> pts;
        std::string tok;
        while (coords >> tok) {
            const size_t comma = tok.find(',');
            if (comma == std::string::npos)
                raise(Errc::parse_error,
                      "regions line " + std::to_string(line_no) + ": vertex '" + tok +
                          "' is not x,y");
            try {
                pts.emplace_back(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
            } catch (const std::exception&) {
                raise(Errc::parse_error,
                      "regions line " + std::to_string(line_no) + ": bad number in '" + tok + "'");
            }
        }
        if (pts.size() < 3)
            raise(Errc::parse_error, "regions line " + std::to_string(line_no) +
                                         ": polygon needs at least 3 vertices");
        r.polygon.resize(static_cast<Eigen::Index>(pts.size()), 2);
        for (size_t i = 0; i < pts.size(); ++i) {
            r.polygon(static_cast<Eigen::Index>(i), 0) = pts[i].first;
            r.polygon(static_cast<Eigen::Index>(i), 1) = pts[i].second;
        }
        regions.push_back(std::move(r));
    }
    return regions;
}

std::vector<Region> load_regions(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::missing_file, "cannot open regions file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_regions(buf.str());
}

RasterGrid align_nearest(const RasterGrid& src, const GeoTransform& ref_gt, int ref_width,
                         int ref_height) {
    if (src.geo.crs_id != ref_gt.crs_id)
        raise(Errc::grid_mismatch, "cannot align grids with different CRS tags");
    RasterGrid out = make_grid(ref_width, ref_height, ref_gt);
    out.acquisition_date = src.acquisition_date;
    const float nan = std::numeric_limits<float>::quiet_NaN();
    for (const Band& b : src.bands) {
        Band nb = make_band(b.name, ref_width, ref_height, nan);
        nb.units = b.units;
        for (int row = 0; row < ref_height; ++row) {
            for (int col = 0; col < ref_width; ++col) {
                double x, y;
                ref_gt.pixel_center(col, row, x, y);
                int sc, sr;
                src.geo.map_to_pixel(x, y, sc, sr);
                if (sc >= 0 && sc < src.width && sr >= 0 && sr < src.height)
                    nb.values(row, col) = b.values(sr, sc);
            }
        }
        out.bands.push_back(std::move(nb));
    }
    return out;
}

} // namespace floodscope
