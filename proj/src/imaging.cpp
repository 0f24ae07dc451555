#include "qinterp/imaging.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>

#include "qinterp/errors.hpp"

namespace qinterp {

namespace {

std::uint8_t to_byte(double v) {
    const double r = std::round(v);  // half away from zero
    return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

int log2_dim(int d, const char* what) {
    if (d < 1 || !std::has_single_bit(static_cast<unsigned>(d)))
        throw EncodingError(std::string(what) + " " + std::to_string(d) +
                            " is not a power of two; crop or pad the image first");
    return std::countr_zero(static_cast<unsigned>(d));
}

void same_shape(const ImageBuffer& f, const ImageBuffer& g) {
    if (f.width != g.width || f.height != g.height || f.channels != g.channels)
        throw ArgumentError("image shapes differ");
}

void check_factor(int factor) {
    if (factor < 1 || !std::has_single_bit(static_cast<unsigned>(factor)))
        throw ArgumentError("scale factor must be a power of two");
}

// OpenCV-style cubic weights for the four taps around fractional offset t.
std::array<double, 4> cubic_weights(double t, double a) {
    std::array<double, 4> w{};
    w[0] = ((a * (t + 1) - 5 * a) * (t + 1) + 8 * a) * (t + 1) - 4 * a;
    w[1] = ((a + 2) * t - (a + 3)) * t * t + 1;
    w[2] = ((a + 2) * (1 - t) - (a + 3)) * (1 - t) * (1 - t) + 1;
    w[3] = 1 - w[0] - w[1] - w[2];
    return w;
}

struct Taps {
    std::vector<int> first;
    std::vector<std::array<double, 4>> w;
};

Taps make_taps(int src, int factor, double a) {
    Taps t;
    const int dst = src * factor;
    t.first.resize(static_cast<std::size_t>(dst));
    t.w.resize(static_cast<std::size_t>(dst));
    for (int d = 0; d < dst; ++d) {
        const double fx = (d + 0.5) / factor - 0.5;
        const double sx = std::floor(fx);
        t.first[static_cast<std::size_t>(d)] = static_cast<int>(sx) - 1;
        t.w[static_cast<std::size_t>(d)] = cubic_weights(fx - sx, a);
    }
    return t;
}

double ssim_term(double mf, double mg, double vf, double vg, double cov, const MetricConfig& cfg) {
    const double l = (2 * mf * mg + cfg.c1) / (mf * mf + mg * mg + cfg.c1);
    if (cfg.c3 == cfg.c2 / 2) return l * (2 * cov + cfg.c2) / (vf + vg + cfg.c2);
    const double sf = std::sqrt(std::max(vf, 0.0)), sg = std::sqrt(std::max(vg, 0.0));
    const double c = (2 * sf * sg + cfg.c2) / (vf + vg + cfg.c2);
    const double s = (cov + cfg.c3) / (sf * sg + cfg.c3);
    return l * c * s;
}

double ssim_channel_global(const ImageBuffer& f, const ImageBuffer& g, int ch, const MetricConfig& cfg) {
    const std::size_t np = static_cast<std::size_t>(f.width) * static_cast<std::size_t>(f.height);
    if (np < 2) throw ArgumentError("image too small for SSIM");
    double sf = 0, sg = 0;
    for (int r = 0; r < f.height; ++r)
        for (int c = 0; c < f.width; ++c) {
            sf += f.at(r, c, ch);
            sg += g.at(r, c, ch);
        }
    const double mf = sf / static_cast<double>(np), mg = sg / static_cast<double>(np);
    double vf = 0, vg = 0, cov = 0;
    for (int r = 0; r < f.height; ++r)
        for (int c = 0; c < f.width; ++c) {
            const double a = f.at(r, c, ch) - mf, b = g.at(r, c, ch) - mg;
            vf += a * a;
            vg += b * b;
            cov += a * b;
        }
    const double d = static_cast<double>(np - 1);
    return ssim_term(mf, mg, vf / d, vg / d, cov / d, cfg);
}

double ssim_channel_uniform(const ImageBuffer& f, const ImageBuffer& g, int ch, const MetricConfig& cfg) {
    const int k = cfg.window_size;
    const int W = f.width, H = f.height;
    const std::size_t stride = static_cast<std::size_t>(W) + 1;
    // Integral images of f, g, f^2, g^2 and fg, exact in 64-bit integers.
    std::array<std::vector<std::int64_t>, 5> s;
    for (auto& v : s) v.assign(stride * static_cast<std::size_t>(H + 1), 0);
    for (int r = 0; r < H; ++r)
        for (int c = 0; c < W; ++c) {
            const std::int64_t a = f.at(r, c, ch), b = g.at(r, c, ch);
            const std::int64_t val[5] = {a, b, a * a, b * b, a * b};
            const std::size_t i = static_cast<std::size_t>(r + 1) * stride + static_cast<std::size_t>(c + 1);
            for (int t = 0; t < 5; ++t)
                s[static_cast<std::size_t>(t)][i] = val[t] + s[static_cast<std::size_t>(t)][i - 1] +
                                                    s[static_cast<std::size_t>(t)][i - stride] -
                                                    s[static_cast<std::size_t>(t)][i - stride - 1];
        }
    auto box = [&](int t, int r, int c) {
        const auto& v = s[static_cast<std::size_t>(t)];
        const std::size_t r0 = static_cast<std::size_t>(r), c0 = static_cast<std::size_t>(c);
        const std::size_t r1 = r0 + static_cast<std::size_t>(k), c1 = c0 + static_cast<std::size_t>(k);
        return v[r1 * stride + c1] - v[r0 * stride + c1] - v[r1 * stride + c0] + v[r0 * stride + c0];
    };

    const std::int64_t np = static_cast<std::int64_t>(k) * k;
    const double denom = static_cast<double>(np) * static_cast<double>(np - 1);
    double total = 0.0;
    for (int r = 0; r + k <= H; ++r)
        for (int c = 0; c + k <= W; ++c) {
            const std::int64_t a = box(0, r, c), b = box(1, r, c);
            const double vf = static_cast<double>(np * box(2, r, c) - a * a) / denom;
            const double vg = static_cast<double>(np * box(3, r, c) - b * b) / denom;
            const double cov = static_cast<double>(np * box(4, r, c) - a * b) / denom;
            total += ssim_term(static_cast<double>(a) / static_cast<double>(np), static_cast<double>(b) / static_cast<double>(np),
                               vf, vg, cov, cfg);
        }
    return total / (static_cast<double>(H - k + 1) * static_cast<double>(W - k + 1));
}

}  // namespace

EncodedImage image_to_state(const ImageBuffer& image) {
    const int nx = log2_dim(image.height, "height");
    const int ny = log2_dim(image.width, "width");
    const bool rgb = image.channels == 3;
    const int label = rgb ? 2 : 0;
    const int q = nx + ny + label;
    if (q > kMaxQubits) throw ResourceError("image needs too many qubits", std::ldexp(16.0, q));

    double sum = 0.0;
    for (auto v : image.samples) sum += static_cast<double>(v) * v;
    if (sum == 0.0) throw EncodingError("all-zero image has no amplitude encoding");
    const double norm = std::sqrt(sum);

    std::vector<std::pair<std::string, int>> regs{{"x", nx}, {"y", ny}};
    if (rgb) regs.emplace_back("label", label);
    std::vector<Amplitude> a(std::size_t{1} << q);
    const std::size_t L = rgb ? 4 : 1;
    const std::size_t pixels = static_cast<std::size_t>(image.width) * static_cast<std::size_t>(image.height);
    for (std::size_t p = 0; p < pixels; ++p)
        for (int ch = 0; ch < image.channels; ++ch)
            a[p * L + static_cast<std::size_t>(ch)] = image.samples[p * static_cast<std::size_t>(image.channels) + static_cast<std::size_t>(ch)] / norm;
    return {Statevector(RegisterLayout::contiguous(regs), std::move(a)), norm};
}

ImageBuffer state_to_image(const Statevector& state, double norm, int m_x, int m_y) {
    const auto& layout = state.layout();
    const int nx = layout.size_of("x"), ny = layout.size_of("y");
    const bool rgb = layout.contains("label");
    if (rgb && layout.size_of("label") != 2) throw LayoutError("RGB label register must have 2 qubits");
    ImageBuffer img(1 << ny, 1 << nx, rgb ? 3 : 1);
    const double scale = norm * std::exp2(0.5 * (m_x + m_y));

    const auto a = state.amplitudes();
    for (Index i = 0; i < a.size(); ++i) {
        const int ch = rgb ? static_cast<int>(state.register_value("label", i)) : 0;
        if (ch >= img.channels) continue;
        const int row = static_cast<int>(state.register_value("x", i));
        const int col = static_cast<int>(state.register_value("y", i));
        img.at(row, col, ch) = to_byte(a[i].real() * scale);
    }
    return img;
}

ImageBuffer downscale_area(const ImageBuffer& image, int factor) {
    if (factor < 1) throw ArgumentError("scale factor must be positive");
    if (image.width % factor || image.height % factor) throw ArgumentError("image size not divisible by the factor");
    ImageBuffer out(image.width / factor, image.height / factor, image.channels);
    const long count = static_cast<long>(factor) * factor;
    for (int r = 0; r < out.height; ++r)
        for (int c = 0; c < out.width; ++c)
            for (int ch = 0; ch < image.channels; ++ch) {
                long sum = 0;
                for (int dr = 0; dr < factor; ++dr)
                    for (int dc = 0; dc < factor; ++dc) sum += image.at(r * factor + dr, c * factor + dc, ch);
                out.at(r, c, ch) = static_cast<std::uint8_t>((2 * sum + count) / (2 * count));
            }
    return out;
}

ImageBuffer bicubic_upscale(const ImageBuffer& image, int factor, double a) {
    check_factor(factor);
    const int W = image.width, H = image.height, C = image.channels;
    const Taps tx = make_taps(W, factor, a), ty = make_taps(H, factor, a);
    const int OW = W * factor, OH = H * factor;

    // Horizontal pass into doubles, then vertical pass with a single rounding.
    std::vector<double> tmp(static_cast<std::size_t>(H) * static_cast<std::size_t>(OW) * static_cast<std::size_t>(C));
    for (int r = 0; r < H; ++r)
        for (int c = 0; c < OW; ++c)
            for (int ch = 0; ch < C; ++ch) {
                double s = 0.0;
                for (int t = 0; t < 4; ++t) {
                    const int sc = std::clamp(tx.first[static_cast<std::size_t>(c)] + t, 0, W - 1);
                    s += tx.w[static_cast<std::size_t>(c)][static_cast<std::size_t>(t)] * image.at(r, sc, ch);
                }
                tmp[(static_cast<std::size_t>(r) * static_cast<std::size_t>(OW) + static_cast<std::size_t>(c)) * static_cast<std::size_t>(C) + static_cast<std::size_t>(ch)] = s;
            }
    ImageBuffer out(OW, OH, C);
    for (int r = 0; r < OH; ++r)
        for (int c = 0; c < OW; ++c)
            for (int ch = 0; ch < C; ++ch) {
                double s = 0.0;
                for (int t = 0; t < 4; ++t) {
                    const int sr = std::clamp(ty.first[static_cast<std::size_t>(r)] + t, 0, H - 1);
                    s += ty.w[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] *
                         tmp[(static_cast<std::size_t>(sr) * static_cast<std::size_t>(OW) + static_cast<std::size_t>(c)) * static_cast<std::size_t>(C) + static_cast<std::size_t>(ch)];
                }
                out.at(r, c, ch) = to_byte(s);
            }
    return out;
}

QuantumUpscale quantum_upscale(const ImageBuffer& image, InterpSpec spec) {
    auto enc = image_to_state(image);
    const int nx = enc.state.layout().size_of("x"), ny = enc.state.layout().size_of("y");
    const int label = image.channels == 3 ? 2 : 0;
    spec.axes = {"x", "y"};
    const int sizes[2] = {nx, ny};
    const int qubits = circuit_qubits(spec, sizes, label);
    auto r = interpolate_nd(std::move(enc.state), spec);
    return {state_to_image(r.state, enc.norm, spec.m, spec.m), std::move(r.report), qubits};
}

double mse(const ImageBuffer& f, const ImageBuffer& g) {
    same_shape(f, g);
    if (f.samples.empty()) throw ArgumentError("empty image");
    double s = 0.0;
    for (std::size_t i = 0; i < f.samples.size(); ++i) {
        const double d = static_cast<double>(f.samples[i]) - static_cast<double>(g.samples[i]);
        s += d * d;
    }
    return s / static_cast<double>(f.samples.size());
}

double psnr(const ImageBuffer& f, const ImageBuffer& g) {
    const double e = mse(f, g);
    if (e == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / e);
}

double ssim(const ImageBuffer& f, const ImageBuffer& g, const MetricConfig& cfg) {
    same_shape(f, g);
    if (!(cfg.c1 > 0 && cfg.c2 > 0 && cfg.c3 > 0)) throw ArgumentError("SSIM constants must be positive");
    if (cfg.window == MetricConfig::Window::Uniform &&
        (cfg.window_size < 2 || cfg.window_size > f.width || cfg.window_size > f.height))
        throw ArgumentError("SSIM window does not fit the image");
    double total = 0.0;
    for (int ch = 0; ch < f.channels; ++ch)
        total += cfg.window == MetricConfig::Window::Global ? ssim_channel_global(f, g, ch, cfg)
                                                            : ssim_channel_uniform(f, g, ch, cfg);
    return total / f.channels;
}

}  // namespace qinterp
