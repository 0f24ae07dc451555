#include <cctype>
#include <fstream>
#include <sstream>

#include "qinterp/errors.hpp"
#include "qinterp/imaging.hpp"

namespace qinterp {

namespace {

class Reader {
public:
    explicit Reader(std::string_view b) : b_(b) {}

    std::size_t pos() const { return pos_; }

    void skip_space() {
        while (pos_ < b_.size()) {
            const char c = b_[pos_];
            if (c == '#') {
                while (pos_ < b_.size() && b_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    long number(const char* what) {
        skip_space();
        if (pos_ >= b_.size()) throw ParseError(std::string("unexpected end of data reading ") + what, pos_);
        const std::size_t start = pos_;
        long v = 0;
        while (pos_ < b_.size() && std::isdigit(static_cast<unsigned char>(b_[pos_]))) {
            v = v * 10 + (b_[pos_] - '0');
            if (v > 1'000'000'000) throw ParseError(std::string(what) + " out of range", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
        if (pos_ < b_.size() && !std::isspace(static_cast<unsigned char>(b_[pos_])) && b_[pos_] != '#')
            throw ParseError(std::string("malformed ") + what, pos_);
        return v;
    }

    std::string_view rest() const { return b_.substr(pos_); }
    void advance(std::size_t n) { pos_ += n; }

private:
    std::string_view b_;
    std::size_t pos_ = 0;
};

}  // namespace

ImageBuffer::ImageBuffer(int w, int h, int c, std::uint8_t fill) : width(w), height(h), channels(c) {
    if (w < 0 || h < 0 || (c != 1 && c != 3)) throw ArgumentError("invalid image shape");
    samples.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * static_cast<std::size_t>(c), fill);
}

ImageBuffer parse_netpbm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') throw ParseError("missing NetPBM magic number", 0);
    const char kind = bytes[1];
    if (kind != '2' && kind != '3' && kind != '5' && kind != '6') throw ParseError("unsupported NetPBM type", 1);
    const bool ascii = kind == '2' || kind == '3';
    const int channels = (kind == '3' || kind == '6') ? 3 : 1;

    Reader r(bytes);
    r.advance(2);
    if (r.rest().empty() || !(std::isspace(static_cast<unsigned char>(r.rest()[0])) || r.rest()[0] == '#'))
        throw ParseError("malformed magic number", 2);
    const long w = r.number("width");
    const long h = r.number("height");
    const std::size_t maxval_at = (r.skip_space(), r.pos());
    const long maxval = r.number("maxval");
    if (w < 1 || h < 1) throw ParseError("image dimensions must be positive", maxval_at);
    if (maxval != 255) throw ParseError("maxval " + std::to_string(maxval) + " unsupported (need 255)", maxval_at);

    ImageBuffer img(static_cast<int>(w), static_cast<int>(h), channels);
    if (ascii) {
        for (auto& s : img.samples) {
            const std::size_t at = (r.skip_space(), r.pos());
            const long v = r.number("sample");
            if (v > 255) throw ParseError("sample exceeds maxval", at);
            s = static_cast<std::uint8_t>(v);
        }
        return img;
    }
    // Exactly one whitespace byte separates the header from the raster.
    r.advance(1);
    const auto raster = r.rest();
    if (raster.size() < img.samples.size())
        throw ParseError("truncated raster: " + std::to_string(raster.size()) + " of " +
                             std::to_string(img.samples.size()) + " bytes",
                         bytes.size());
    for (std::size_t i = 0; i < img.samples.size(); ++i) img.samples[i] = static_cast<std::uint8_t>(raster[i]);
    return img;
}

std::string to_netpbm(const ImageBuffer& image) {
    std::ostringstream os;
    os << (image.channels == 3 ? "P6" : "P5") << '\n' << image.width << ' ' << image.height << "\n255\n";
    os.write(reinterpret_cast<const char*>(image.samples.data()), static_cast<std::streamsize>(image.samples.size()));
    return os.str();
}

ImageBuffer load_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_netpbm(ss.str());
}

void save_image(const ImageBuffer& image, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError("cannot write " + path.string());
    const auto bytes = to_netpbm(image);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw ArgumentError("write failed for " + path.string());
}

}  // namespace qinterp
