#include "floodscope/geotiff.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <map>

namespace floodscope {
namespace {

constexpr std::uint16_t kTagImageWidth = 256;
constexpr std::uint16_t kTagImageLength = 257;
constexpr std::uint16_t kTagBitsPerSample = 258;
constexpr std::uint16_t kTagCompression = 259;
constexpr std::uint16_t kTagPhotometric = 262;
constexpr std::uint16_t kTagStripOffsets = 273;
constexpr std::uint16_t kTagSamplesPerPixel = 277;
constexpr std::uint16_t kTagRowsPerStrip = 278;
constexpr std::uint16_t kTagStripByteCounts = 279;
constexpr std::uint16_t kTagPlanarConfig = 284;
constexpr std::uint16_t kTagSampleFormat = 339;
constexpr std::uint16_t kTagModelPixelScale = 33550;
constexpr std::uint16_t kTagModelTiepoint = 33922;
constexpr std::uint16_t kTagGeoAsciiParams = 34737;
constexpr std::uint16_t kTagGdalNodata = 42113;

constexpr std::uint16_t kTypeAscii = 2;
constexpr std::uint16_t kTypeShort = 3;
constexpr std::uint16_t kTypeLong = 4;
constexpr std::uint16_t kTypeDouble = 12;

constexpr std::int64_t kMaxTotalSamples = std::int64_t(1) << 31;
constexpr int kRowsPerStripLimit = 8192;

struct IfdEntry {
    std::uint16_t type = 0;
    std::uint32_t count = 0;
    std::uint32_t value_or_offset = 0; // raw little-endian payload word
};

class ByteReader {
public:
    explicit ByteReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

    size_t size() const { return bytes_.size(); }

    std::uint16_t u16(size_t at) const {
        check(at, 2);
        return static_cast<std::uint16_t>(bytes_[at] | (bytes_[at + 1] << 8));
    }
    std::uint32_t u32(size_t at) const {
        check(at, 4);
        return static_cast<std::uint32_t>(bytes_[at]) | (static_cast<std::uint32_t>(bytes_[at + 1]) << 8) |
               (static_cast<std::uint32_t>(bytes_[at + 2]) << 16) |
               (static_cast<std::uint32_t>(bytes_[at + 3]) << 24);
    }
    double f64(size_t at) const {
        check(at, 8);
        std::uint64_t bits = 0;
        for (int i = 7; i >= 0; --i) bits = (bits << 8) | bytes_[at + static_cast<size_t>(i)];
        double out;
        std::memcpy(&out, &bits, 8);
        return out;
    }
    const std::uint8_t* at(size_t off, size_t len) const {
        check(off, len);
        return bytes_.data() + off;
    }

private:
    void check(size_t at, size_t len) const {
        if (at + len > bytes_.size() || at + len < at)
            raise(Errc::truncated_file, "read past end of file");
    }
    const std::vector<std::uint8_t>& bytes_;
};

size_t type_size(std::uint16_t type) {
    switch (type) {
    case kTypeAscii: return 1;
    case kTypeShort: return 2;
    case kTypeLong: return 4;
    case kTypeDouble: return 8;
    default: return 0;
    }
}

struct ParsedIfd {
    std::map<std::uint16_t, IfdEntry> entries;
};

const IfdEntry& require_tag(const ParsedIfd& ifd, std::uint16_t tag, const char* name) {
    auto it = ifd.entries.find(tag);
    if (it == ifd.entries.end())
        raise(Errc::missing_tag, std::string("required tag ") + name + " absent");
    return it->second;
}

/// Integer values of a SHORT/LONG entry, honoring inline-vs-offset storage.
std::vector<std::uint32_t> read_uints(const ByteReader& r, const IfdEntry& e, const char* name) {
    if (e.type != kTypeShort && e.type != kTypeLong)
        raise(Errc::unsupported_feature, std::string(name) + " has unexpected type");
    if (e.count > (std::uint32_t(1) << 24))
        raise(Errc::unsupported_feature, std::string(name) + " count is implausibly large");
    const size_t total = type_size(e.type) * e.count;
    // Inline payloads live in the entry's own 4-byte word. The bounds check
    // on external payloads runs before any allocation sized by the count.
    std::uint8_t inline_bytes[4];
    const std::uint8_t* src;
    if (total <= 4) {
        inline_bytes[0] = static_cast<std::uint8_t>(e.value_or_offset);
        inline_bytes[1] = static_cast<std::uint8_t>(e.value_or_offset >> 8);
        inline_bytes[2] = static_cast<std::uint8_t>(e.value_or_offset >> 16);
        inline_bytes[3] = static_cast<std::uint8_t>(e.value_or_offset >> 24);
        src = inline_bytes;
    } else {
        src = r.at(e.value_or_offset, total);
    }
    std::vector<std::uint32_t> out;
    out.reserve(e.count);
    for (std::uint32_t i = 0; i < e.count; ++i) {
        if (e.type == kTypeShort)
            out.push_back(static_cast<std::uint32_t>(src[2 * i]) | (static_cast<std::uint32_t>(src[2 * i + 1]) << 8));
        else
            out.push_back(static_cast<std::uint32_t>(src[4 * i]) | (static_cast<std::uint32_t>(src[4 * i + 1]) << 8) |
                          (static_cast<std::uint32_t>(src[4 * i + 2]) << 16) |
                          (static_cast<std::uint32_t>(src[4 * i + 3]) << 24));
    }
    return out;
}

std::uint32_t read_uint(const ByteReader& r, const IfdEntry& e, const char* name) {
    auto v = read_uints(r, e, name);
    if (v.empty()) raise(Errc::parse_error, std::string(name) + " has zero count");
    return v[0];
}

std::vector<double> read_doubles(const ByteReader& r, const IfdEntry& e, const char* name) {
    if (e.type != kTypeDouble)
        raise(Errc::unsupported_feature, std::string(name) + " has unexpected type");
    r.at(e.value_or_offset, static_cast<size_t>(e.count) * 8); // bounds before allocation
    std::vector<double> out;
    out.reserve(e.count);
    for (std::uint32_t i = 0; i < e.count; ++i) out.push_back(r.f64(e.value_or_offset + 8 * i));
    return out;
}

std::string read_ascii(const ByteReader& r, const IfdEntry& e) {
    if (e.type != kTypeAscii) raise(Errc::unsupported_feature, "ASCII tag has unexpected type");
    std::string s;
    if (e.count <= 4) {
        std::uint8_t inline_bytes[4] = {
            static_cast<std::uint8_t>(e.value_or_offset), static_cast<std::uint8_t>(e.value_or_offset >> 8),
            static_cast<std::uint8_t>(e.value_or_offset >> 16), static_cast<std::uint8_t>(e.value_or_offset >> 24)};
        s.assign(reinterpret_cast<const char*>(inline_bytes), e.count);
    } else {
        s.assign(reinterpret_cast<const char*>(r.at(e.value_or_offset, e.count)), e.count);
    }
    while (!s.empty() && s.back() == '\0') s.pop_back();
    return s;
}

struct HeaderData {
    GeoTiffInfo info;
    std::vector<std::uint32_t> strip_offsets;
    std::vector<std::uint32_t> strip_counts;
    std::uint32_t rows_per_strip = 0;
    std::optional<double> nodata;
    size_t bytes_per_sample = 0;
};

HeaderData parse_header(const ByteReader& r) {
    if (r.size() < 8) raise(Errc::bad_magic, "file shorter than a TIFF header");
    const std::uint16_t order = r.u16(0);
    if (order == 0x4D4D) raise(Errc::unsupported_feature, "big-endian TIFF not in subset");
    if (order != 0x4949) raise(Errc::bad_magic, "not a TIFF file");
    if (r.u16(2) != 42) raise(Errc::bad_magic, "bad TIFF magic number");

    const std::uint32_t ifd_off = r.u32(4);
    const std::uint16_t n_entries = r.u16(ifd_off);
    ParsedIfd ifd;
    for (std::uint16_t i = 0; i < n_entries; ++i) {
        const size_t at = ifd_off + 2 + static_cast<size_t>(i) * 12;
        const std::uint16_t tag = r.u16(at);
        IfdEntry e;
        e.type = r.u16(at + 2);
        e.count = r.u32(at + 4);
        e.value_or_offset = r.u32(at + 8);
        ifd.entries[tag] = e;
    }

    HeaderData h;
    h.info.width = static_cast<int>(read_uint(r, require_tag(ifd, kTagImageWidth, "ImageWidth"), "ImageWidth"));
    h.info.height =
        static_cast<int>(read_uint(r, require_tag(ifd, kTagImageLength, "ImageLength"), "ImageLength"));
    if (h.info.width < 1 || h.info.height < 1)
        raise(Errc::unsupported_feature, "image dimensions must be >= 1");

    const std::uint32_t compression =
        read_uint(r, require_tag(ifd, kTagCompression, "Compression"), "Compression");
    if (compression != 1) raise(Errc::unsupported_feature, "compressed TIFF not in subset");
    require_tag(ifd, kTagPhotometric, "PhotometricInterpretation");
    const std::uint32_t planar =
        read_uint(r, require_tag(ifd, kTagPlanarConfig, "PlanarConfiguration"), "PlanarConfiguration");
    if (planar != 1) raise(Errc::unsupported_feature, "planar configuration != chunky not in subset");
    if (ifd.entries.count(322) || ifd.entries.count(324) || ifd.entries.count(325))
        raise(Errc::unsupported_feature, "tiled TIFF not in subset");

    h.info.samples = static_cast<int>(
        read_uint(r, require_tag(ifd, kTagSamplesPerPixel, "SamplesPerPixel"), "SamplesPerPixel"));
    if (h.info.samples < 1) raise(Errc::unsupported_feature, "SamplesPerPixel must be >= 1");

    const std::int64_t total = std::int64_t(h.info.width) * h.info.height * h.info.samples;
    if (total > kMaxTotalSamples)
        raise(Errc::unsupported_feature, "declared dimensions exceed the 2^31 sample cap");

    auto bits = read_uints(r, require_tag(ifd, kTagBitsPerSample, "BitsPerSample"), "BitsPerSample");
    auto fmts = read_uints(r, require_tag(ifd, kTagSampleFormat, "SampleFormat"), "SampleFormat");
    if (bits.empty() || fmts.empty()) raise(Errc::parse_error, "empty BitsPerSample/SampleFormat");
    for (auto b : bits)
        if (b != bits[0]) raise(Errc::unsupported_feature, "mixed bit depths not in subset");
    for (auto f : fmts)
        if (f != fmts[0]) raise(Errc::unsupported_feature, "mixed sample formats not in subset");

    if (bits[0] == 8 && fmts[0] == 1) {
        h.info.format = SampleFormat::uint8;
        h.bytes_per_sample = 1;
    } else if (bits[0] == 16 && fmts[0] == 1) {
        h.info.format = SampleFormat::uint16;
        h.bytes_per_sample = 2;
    } else if (bits[0] == 32 && fmts[0] == 3) {
        h.info.format = SampleFormat::float32;
        h.bytes_per_sample = 4;
    } else {
        raise(Errc::unsupported_feature, "sample format outside uint8/uint16/float32 subset");
    }

    h.rows_per_strip =
        read_uint(r, require_tag(ifd, kTagRowsPerStrip, "RowsPerStrip"), "RowsPerStrip");
    if (h.rows_per_strip == 0) raise(Errc::parse_error, "RowsPerStrip is zero");
    h.strip_offsets = read_uints(r, require_tag(ifd, kTagStripOffsets, "StripOffsets"), "StripOffsets");
    h.strip_counts =
        read_uints(r, require_tag(ifd, kTagStripByteCounts, "StripByteCounts"), "StripByteCounts");

    const std::uint64_t n_strips =
        (static_cast<std::uint64_t>(h.info.height) + h.rows_per_strip - 1) / h.rows_per_strip;
    if (h.strip_offsets.size() != n_strips || h.strip_counts.size() != n_strips)
        raise(Errc::truncated_file, "strip table size disagrees with RowsPerStrip");

    auto scale = read_doubles(r, require_tag(ifd, kTagModelPixelScale, "ModelPixelScaleTag"),
                              "ModelPixelScaleTag");
    auto tie =
        read_doubles(r, require_tag(ifd, kTagModelTiepoint, "ModelTiepointTag"), "ModelTiepointTag");
    if (scale.size() < 2 || tie.size() < 6) raise(Errc::parse_error, "malformed georeferencing tags");
    if (!(scale[0] > 0.0) || !(scale[1] > 0.0) || !std::isfinite(scale[0]) || !std::isfinite(scale[1]))
        raise(Errc::unsupported_feature, "pixel scale must be positive and finite");
    h.info.geo.pixel_size_x = scale[0];
    h.info.geo.pixel_size_y = scale[1];
    h.info.geo.origin_x = tie[3] - tie[0] * scale[0];
    h.info.geo.origin_y = tie[4] + tie[1] * scale[1];
    if (!std::isfinite(h.info.geo.origin_x) || !std::isfinite(h.info.geo.origin_y))
        raise(Errc::parse_error, "non-finite tiepoint");

    if (auto it = ifd.entries.find(kTagGeoAsciiParams); it != ifd.entries.end())
        h.info.geo.crs_id = read_ascii(r, it->second);
    if (auto it = ifd.entries.find(kTagGdalNodata); it != ifd.entries.end()) {
        const std::string s = read_ascii(r, it->second);
        if (s == "nan" || s == "NaN") {
            h.nodata = std::numeric_limits<double>::quiet_NaN();
        } else {
            try {
                h.nodata = std::stod(s);
            } catch (const std::exception&) {
                raise(Errc::parse_error, "unparseable nodata tag '" + s + "'");
            }
        }
    }
    return h;
}

} // namespace

GeoTiffInfo peek_geotiff(const std::vector<std::uint8_t>& bytes) {
    ByteReader r(bytes);
    return parse_header(r).info;
}

RasterGrid parse_geotiff(const std::vector<std::uint8_t>& bytes) {
    ByteReader r(bytes);
    HeaderData h = parse_header(r);

    const int w = h.info.width, hgt = h.info.height, ns = h.info.samples;
    const size_t row_bytes = static_cast<size_t>(w) * static_cast<size_t>(ns) * h.bytes_per_sample;

    // Validate every strip against the byte budget before allocating pixels,
    // so hostile headers cannot force large allocations.
    std::uint64_t declared = 0;
    for (size_t s = 0; s < h.strip_offsets.size(); ++s) {
        const std::uint32_t rows_here = std::min<std::uint64_t>(
            h.rows_per_strip, static_cast<std::uint64_t>(hgt) - s * h.rows_per_strip);
        const std::uint64_t expect = static_cast<std::uint64_t>(rows_here) * row_bytes;
        if (h.strip_counts[s] != expect)
            raise(Errc::truncated_file, "strip byte count disagrees with dimensions");
        const std::uint64_t end = static_cast<std::uint64_t>(h.strip_offsets[s]) + h.strip_counts[s];
        if (end > bytes.size())
            raise(Errc::truncated_file, "strip extends past end of file");
        declared += h.strip_counts[s];
    }
    if (declared != static_cast<std::uint64_t>(w) * hgt * ns * h.bytes_per_sample)
        raise(Errc::truncated_file, "strip byte counts do not cover the image");

    RasterGrid grid = make_grid(w, hgt, h.info.geo);
    grid.bands.reserve(static_cast<size_t>(ns));
    for (int b = 0; b < ns; ++b)
        grid.bands.push_back(make_band("b" + std::to_string(b + 1), w, hgt, 0.0f));

    for (size_t s = 0; s < h.strip_offsets.size(); ++s) {
        const int row0 = static_cast<int>(s * h.rows_per_strip);
        const int row1 = std::min<int>(hgt, row0 + static_cast<int>(h.rows_per_strip));
        const std::uint8_t* src = r.at(h.strip_offsets[s], h.strip_counts[s]);
        for (int row = row0; row < row1; ++row) {
            const std::uint8_t* p = src + static_cast<size_t>(row - row0) * row_bytes;
            for (int col = 0; col < w; ++col) {
                for (int b = 0; b < ns; ++b) {
                    float v;
                    switch (h.info.format) {
                    case SampleFormat::uint8: v = static_cast<float>(p[0]); ++p; break;
                    case SampleFormat::uint16:
                        v = static_cast<float>(p[0] | (p[1] << 8));
                        p += 2;
                        break;
                    default: {
                        std::uint32_t bits = static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
                                             (static_cast<std::uint32_t>(p[2]) << 16) |
                                             (static_cast<std::uint32_t>(p[3]) << 24);
                        std::memcpy(&v, &bits, 4);
                        p += 4;
                        break;
                    }
                    }
                    grid.bands[static_cast<size_t>(b)].values(row, col) = v;
                }
            }
        }
    }

    // Map the file's nodata onto the internal NaN convention.
    if (h.nodata && !std::isnan(*h.nodata)) {
        const float nd = static_cast<float>(*h.nodata);
        const float nan = std::numeric_limits<float>::quiet_NaN();
        for (Band& b : grid.bands) b.values = (b.values == nd).select(nan, b.values);
    }
    return grid;
}

namespace {

class ByteWriter {
public:
    std::vector<std::uint8_t> bytes;

    void u16(std::uint16_t v) {
        bytes.push_back(static_cast<std::uint8_t>(v));
        bytes.push_back(static_cast<std::uint8_t>(v >> 8));
    }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void f64(double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, 8);
        for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
    }
    void raw(const void* src, size_t len) {
        const auto* p = static_cast<const std::uint8_t*>(src);
        bytes.insert(bytes.end(), p, p + len);
    }
    void patch_u32(size_t at, std::uint32_t v) {
        for (int i = 0; i < 4; ++i) bytes[at + static_cast<size_t>(i)] = static_cast<std::uint8_t>(v >> (8 * i));
    }
};

struct TagSpec {
    std::uint16_t tag;
    std::uint16_t type;
    std::uint32_t count;
    std::uint32_t inline_value;        // when payload fits in 4 bytes
    std::vector<std::uint8_t> payload; // when it does not
};

} // namespace

std::vector<std::uint8_t> write_geotiff(const RasterGrid& grid, SampleFormat format) {
    validate(grid);
    if (grid.bands.empty()) raise(Errc::empty_input, "grid has no bands");
    const int w = grid.width, h = grid.height;
    const int ns = static_cast<int>(grid.bands.size());
    if (std::int64_t(w) * h * ns > kMaxTotalSamples)
        raise(Errc::unsupported_feature, "grid exceeds the 2^31 sample cap");

    size_t bps;
    std::uint16_t bits, fmt_code;
    double max_value;
    switch (format) {
    case SampleFormat::uint8: bps = 1; bits = 8; fmt_code = 1; max_value = 255.0; break;
    case SampleFormat::uint16: bps = 2; bits = 16; fmt_code = 1; max_value = 65535.0; break;
    default: bps = 4; bits = 32; fmt_code = 3; max_value = 0.0; break;
    }

    bool has_nodata = false;
    for (const Band& b : grid.bands) has_nodata = has_nodata || b.values.isNaN().any();

    // Integer formats: all finite values must be integral and in range; NaN
    // takes the all-ones sentinel, which therefore must stay unused.
    if (format != SampleFormat::float32) {
        for (const Band& b : grid.bands) {
            for (Eigen::Index i = 0; i < b.values.size(); ++i) {
                const float v = b.values.data()[i];
                if (std::isnan(v)) continue;
                if (!std::isfinite(v) || v < 0.0f || v > max_value || v != std::floor(v))
                    raise(Errc::value_out_of_range,
                          "band '" + b.name + "' holds values not representable as uint" +
                              std::to_string(bits));
                if (has_nodata && v == static_cast<float>(max_value))
                    raise(Errc::value_out_of_range,
                          "band '" + b.name + "' uses the value reserved as nodata sentinel");
            }
        }
    }

    const std::uint32_t rows_per_strip = static_cast<std::uint32_t>(std::min(h, kRowsPerStripLimit));
    const std::uint32_t n_strips = (static_cast<std::uint32_t>(h) + rows_per_strip - 1) / rows_per_strip;
    const size_t row_bytes = static_cast<size_t>(w) * static_cast<size_t>(ns) * bps;

    std::string nodata_text;
    if (has_nodata)
        nodata_text = format == SampleFormat::float32 ? "nan" : std::to_string(static_cast<long long>(max_value));

    // Assemble the tag list in ascending tag order.
    std::vector<TagSpec> tags;
    auto add_short = [&](std::uint16_t tag, std::uint16_t v) {
        tags.push_back({tag, kTypeShort, 1, v, {}});
    };
    auto add_long = [&](std::uint16_t tag, std::uint32_t v) {
        tags.push_back({tag, kTypeLong, 1, v, {}});
    };
    auto add_shorts = [&](std::uint16_t tag, const std::vector<std::uint16_t>& vs) {
        TagSpec t{tag, kTypeShort, static_cast<std::uint32_t>(vs.size()), 0, {}};
        if (vs.size() <= 2) {
            std::uint32_t v = 0;
            for (size_t i = 0; i < vs.size(); ++i) v |= static_cast<std::uint32_t>(vs[i]) << (16 * i);
            t.inline_value = v;
        } else {
            for (auto v : vs) {
                t.payload.push_back(static_cast<std::uint8_t>(v));
                t.payload.push_back(static_cast<std::uint8_t>(v >> 8));
            }
        }
        tags.push_back(std::move(t));
    };
    auto add_longs = [&](std::uint16_t tag, const std::vector<std::uint32_t>& vs) {
        TagSpec t{tag, kTypeLong, static_cast<std::uint32_t>(vs.size()), 0, {}};
        if (vs.size() == 1) {
            t.inline_value = vs[0];
        } else {
            for (auto v : vs)
                for (int i = 0; i < 4; ++i) t.payload.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        }
        tags.push_back(std::move(t));
    };
    auto add_doubles = [&](std::uint16_t tag, const std::vector<double>& vs) {
        TagSpec t{tag, kTypeDouble, static_cast<std::uint32_t>(vs.size()), 0, {}};
        for (double v : vs) {
            std::uint64_t b;
            std::memcpy(&b, &v, 8);
            for (int i = 0; i < 8; ++i) t.payload.push_back(static_cast<std::uint8_t>(b >> (8 * i)));
        }
        tags.push_back(std::move(t));
    };
    auto add_ascii = [&](std::uint16_t tag, const std::string& s) {
        TagSpec t{tag, kTypeAscii, static_cast<std::uint32_t>(s.size() + 1), 0, {}};
        if (s.size() + 1 <= 4) {
            std::uint32_t v = 0;
            for (size_t i = 0; i < s.size(); ++i) v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(s[i])) << (8 * i);
            t.inline_value = v;
        } else {
            t.payload.assign(s.begin(), s.end());
            t.payload.push_back(0);
        }
        tags.push_back(std::move(t));
    };

    add_long(kTagImageWidth, static_cast<std::uint32_t>(w));
    add_long(kTagImageLength, static_cast<std::uint32_t>(h));
    add_shorts(kTagBitsPerSample, std::vector<std::uint16_t>(static_cast<size_t>(ns), bits));
    add_short(kTagCompression, 1);
    add_short(kTagPhotometric, 1);
    tags.push_back({kTagStripOffsets, kTypeLong, n_strips, 0, {}}); // patched later
    const size_t strip_offsets_tag_index = tags.size() - 1;
    add_short(kTagSamplesPerPixel, static_cast<std::uint16_t>(ns));
    add_long(kTagRowsPerStrip, rows_per_strip);
    {
        std::vector<std::uint32_t> counts;
        for (std::uint32_t s = 0; s < n_strips; ++s) {
            const std::uint32_t rows_here =
                std::min<std::uint32_t>(rows_per_strip, static_cast<std::uint32_t>(h) - s * rows_per_strip);
            counts.push_back(static_cast<std::uint32_t>(rows_here * row_bytes));
        }
        add_longs(kTagStripByteCounts, counts);
    }
    add_short(kTagPlanarConfig, 1);
    add_shorts(kTagSampleFormat, std::vector<std::uint16_t>(static_cast<size_t>(ns), fmt_code));
    add_doubles(kTagModelPixelScale, {grid.geo.pixel_size_x, grid.geo.pixel_size_y, 0.0});
    add_doubles(kTagModelTiepoint, {0.0, 0.0, 0.0, grid.geo.origin_x, grid.geo.origin_y, 0.0});
    if (!grid.geo.crs_id.empty()) add_ascii(kTagGeoAsciiParams, grid.geo.crs_id);
    if (has_nodata) add_ascii(kTagGdalNodata, nodata_text);

    // Layout: header | IFD | external tag payloads | strip offset array | pixel strips.
    ByteWriter out;
    out.u16(0x4949);
    out.u16(42);
    out.u32(8);
    out.u16(static_cast<std::uint16_t>(tags.size()));

    const size_t ifd_entries_at = out.bytes.size();
    size_t data_off = 8 + 2 + tags.size() * 12 + 4;
    for (const TagSpec& t : tags) {
        out.u16(t.tag);
        out.u16(t.type);
        out.u32(t.count);
        if (t.tag == kTagStripOffsets && n_strips > 1) {
            out.u32(0); // patched
        } else if (!t.payload.empty()) {
            out.u32(static_cast<std::uint32_t>(data_off));
            data_off += t.payload.size();
        } else {
            out.u32(t.inline_value);
        }
    }
    out.u32(0); // next IFD

    size_t strip_array_off = data_off;
    if (n_strips > 1) data_off += static_cast<size_t>(n_strips) * 4;

    for (const TagSpec& t : tags)
        if (!t.payload.empty() && t.tag != kTagStripOffsets) out.raw(t.payload.data(), t.payload.size());

    std::vector<std::uint32_t> strip_offsets;
    {
        size_t pixel_off = data_off;
        for (std::uint32_t s = 0; s < n_strips; ++s) {
            strip_offsets.push_back(static_cast<std::uint32_t>(pixel_off));
            const std::uint32_t rows_here =
                std::min<std::uint32_t>(rows_per_strip, static_cast<std::uint32_t>(h) - s * rows_per_strip);
            pixel_off += rows_here * row_bytes;
        }
    }
    if (n_strips > 1) {
        (void)strip_array_off;
        for (auto off : strip_offsets) out.u32(off);
        out.patch_u32(ifd_entries_at + strip_offsets_tag_index * 12 + 8,
                      static_cast<std::uint32_t>(strip_array_off));
    } else {
        out.patch_u32(ifd_entries_at + strip_offsets_tag_index * 12 + 8, strip_offsets[0]);
    }

    for (int row = 0; row < h; ++row) {
        for (int col = 0; col < w; ++col) {
            for (int b = 0; b < ns; ++b) {
                const float v = grid.bands[static_cast<size_t>(b)].values(row, col);
                switch (format) {
                case SampleFormat::uint8: {
                    const std::uint8_t u = std::isnan(v) ? 0xFF : static_cast<std::uint8_t>(v);
                    out.bytes.push_back(u);
                    break;
                }
                case SampleFormat::uint16: {
                    const std::uint16_t u = std::isnan(v) ? 0xFFFF : static_cast<std::uint16_t>(v);
                    out.u16(u);
                    break;
                }
                default: {
                    std::uint32_t bits32;
                    std::memcpy(&bits32, &v, 4);
                    out.u32(bits32);
                    break;
                }
                }
            }
        }
    }
    return out.bytes;
}

RasterGrid read_geotiff_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::missing_file, "cannot open '" + path + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return parse_geotiff(bytes);
}

void write_geotiff_file(const std::string& path, const RasterGrid& grid, SampleFormat format) {
    const auto bytes = write_geotiff(grid, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(Errc::io_error, "cannot write '" + path + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) raise(Errc::io_error, "short write to '" + path + "'");
}

} // namespace floodscope
