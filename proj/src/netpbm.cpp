#include "plunge/netpbm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "plunge/errors.hpp"
#include "plunge/symbol_masks.hpp"

namespace plunge {

namespace {

// Cursor over a netpbm byte stream: whitespace and '#' comments between
// header tokens, then raw or ASCII raster data.
class Reader {
public:
    explicit Reader(const std::string& bytes) : bytes_(bytes) {}

    std::string magic() {
        if (bytes_.size() < 2 || bytes_[0] != 'P') throw ValidationError("not a netpbm file");
        pos_ = 2;
        return bytes_.substr(0, 2);
    }

    long integer() {
        skip_space();
        if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            throw ValidationError("malformed netpbm header");
        }
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 1'000'000'000L) throw ValidationError("netpbm value too large");
            ++pos_;
        }
        return value;
    }

    // P1 allows bits without separators
    int bit() {
        skip_space();
        if (pos_ >= bytes_.size()) throw ValidationError("truncated netpbm raster");
        const char ch = bytes_[pos_++];
        if (ch != '0' && ch != '1') throw ValidationError("malformed PBM raster");
        return ch - '0';
    }

    // exactly one whitespace byte separates the header from binary data
    void end_header() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw ValidationError("malformed netpbm header");
        }
        ++pos_;
    }

    unsigned char byte() {
        if (pos_ >= bytes_.size()) throw ValidationError("truncated netpbm raster");
        return static_cast<unsigned char>(bytes_[pos_++]);
    }

private:
    void skip_space() {
        while (pos_ < bytes_.size()) {
            if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    const std::string& bytes_;
    std::size_t pos_ = 0;
};

std::pair<int, int> dimensions(Reader& in) {
    const long width = in.integer();
    const long height = in.integer();
    if (width <= 0 || height <= 0) throw ValidationError("netpbm dimensions must be positive");
    if (width * height > 100'000'000L) throw ValidationError("netpbm image too large");
    return {static_cast<int>(width), static_cast<int>(height)};
}

}  // namespace

BinaryMask parse_mask(const std::string& bytes) {
    Reader in(bytes);
    const std::string magic = in.magic();
    if (magic != "P1" && magic != "P2" && magic != "P4" && magic != "P5") {
        throw ValidationError("unsupported netpbm type " + magic + " (expected P1, P2, P4 or P5)");
    }
    const auto [width, height] = dimensions(in);
    BinaryMask mask(height, width);
    if (magic == "P1") {
        for (int r = 0; r < height; ++r) {
            for (int c = 0; c < width; ++c) mask.set(r, c, in.bit() == 1);
        }
        return mask;
    }
    if (magic == "P4") {
        in.end_header();
        for (int r = 0; r < height; ++r) {
            unsigned char current = 0;
            for (int c = 0; c < width; ++c) {
                if (c % 8 == 0) current = in.byte();
                mask.set(r, c, (current >> (7 - c % 8)) & 1U);
            }
        }
        return mask;
    }
    const long maxval = in.integer();
    if (maxval <= 0 || maxval > 65535) throw ValidationError("PGM maxval must lie in [1, 65535]");
    if (magic == "P5") in.end_header();
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            long value = 0;
            if (magic == "P2") {
                value = in.integer();
            } else if (maxval < 256) {
                value = in.byte();
            } else {
                const long hi = in.byte();
                value = (hi << 8) | in.byte();
            }
            if (value > maxval) throw ValidationError("PGM sample exceeds maxval");
            mask.set(r, c, 2 * value >= maxval);
        }
    }
    return mask;
}

std::string serialize_mask(const BinaryMask& mask, MaskFormat format) {
    if (mask.empty()) throw ValidationError("cannot serialize an empty mask");
    std::ostringstream out;
    const int width = mask.cols(), height = mask.rows();
    switch (format) {
        case MaskFormat::pbm_ascii:
            out << "P1\n" << width << ' ' << height << '\n';
            for (int r = 0; r < height; ++r) {
                for (int c = 0; c < width; ++c) out << (mask(r, c) ? '1' : '0') << (c + 1 == width ? '\n' : ' ');
            }
            break;
        case MaskFormat::pbm_binary:
            out << "P4\n" << width << ' ' << height << '\n';
            for (int r = 0; r < height; ++r) {
                unsigned char current = 0;
                for (int c = 0; c < width; ++c) {
                    if (mask(r, c)) current = static_cast<unsigned char>(current | (1U << (7 - c % 8)));
                    if (c % 8 == 7 || c + 1 == width) {
                        out.put(static_cast<char>(current));
                        current = 0;
                    }
                }
            }
            break;
        case MaskFormat::pgm_ascii:
            out << "P2\n" << width << ' ' << height << "\n255\n";
            for (int r = 0; r < height; ++r) {
                for (int c = 0; c < width; ++c) out << (mask(r, c) ? 255 : 0) << (c + 1 == width ? '\n' : ' ');
            }
            break;
        case MaskFormat::pgm_binary:
            out << "P5\n" << width << ' ' << height << "\n255\n";
            for (int r = 0; r < height; ++r) {
                for (int c = 0; c < width; ++c) out.put(static_cast<char>(mask(r, c) ? 255 : 0));
            }
            break;
    }
    return out.str();
}

BinaryMask load_mask(const std::filesystem::path& path) { return parse_mask(read_file(path)); }

void save_mask(const BinaryMask& mask, const std::filesystem::path& path, MaskFormat format) {
    write_file(path, serialize_mask(mask, format));
}

std::string encode_ppm(const RgbImage& image) {
    if (image.width <= 0 || image.height <= 0) throw ValidationError("image dimensions must be positive");
    std::string bytes = "P6\n" + std::to_string(image.width) + ' ' + std::to_string(image.height) + "\n255\n";
    bytes.append(reinterpret_cast<const char*>(image.pixels.data()), image.pixels.size());
    return bytes;
}

RgbImage decode_ppm(const std::string& bytes) {
    Reader in(bytes);
    if (in.magic() != "P6") throw ValidationError("expected a binary PPM (P6)");
    const auto [width, height] = dimensions(in);
    if (in.integer() != 255) throw ValidationError("only 8-bit PPM is supported");
    in.end_header();
    RgbImage image(width, height);
    for (auto& px : image.pixels) px = in.byte();
    return image;
}

void write_ppm(const RgbImage& image, const std::filesystem::path& path) { write_file(path, encode_ppm(image)); }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw ValidationError("failed writing " + path.string());
}

}  // namespace plunge
