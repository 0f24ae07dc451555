#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qinterp/core_state.hpp"
#include "qinterp/interpolate.hpp"

namespace qinterp {

// 8-bit samples, row-major, channels interleaved.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    int channels = 1;  // 1 or 3
    std::vector<std::uint8_t> samples;

    ImageBuffer() = default;
    ImageBuffer(int w, int h, int c, std::uint8_t fill = 0);

    std::uint8_t& at(int row, int col, int ch = 0) { return samples[index(row, col, ch)]; }
    std::uint8_t at(int row, int col, int ch = 0) const { return samples[index(row, col, ch)]; }
    std::size_t index(int row, int col, int ch) const {
        return (static_cast<std::size_t>(row) * static_cast<std::size_t>(width) + static_cast<std::size_t>(col)) *
                   static_cast<std::size_t>(channels) + static_cast<std::size_t>(ch);
    }
    friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;
};

// NetPBM P2/P3 (ASCII) and P5/P6 (binary), maxval 255 only. Errors carry the
// byte offset where parsing stopped.
ImageBuffer parse_netpbm(std::string_view bytes);
// Binary form: P5 for gray, P6 for RGB.
std::string to_netpbm(const ImageBuffer& image);

ImageBuffer load_image(const std::filesystem::path& path);
void save_image(const ImageBuffer& image, const std::filesystem::path& path);

// Register "x" indexes rows, "y" columns and, for RGB, the 2-qubit "label"
// register the channel (R, G, B = 0, 1, 2; label 3 stays empty). Basis index
// ((row * W) + col) * L + label.
struct EncodedImage {
    Statevector state;
    double norm;  // l2 norm of the raw samples
};

EncodedImage image_to_state(const ImageBuffer& image);

// Real parts times norm * 2^((m_x + m_y)/2), rounded half away from zero and
// clamped to [0, 255]. Dimensions come from the "x", "y" and "label" registers.
ImageBuffer state_to_image(const Statevector& state, double norm, int m_x, int m_y);

// Mean of each factor x factor block, rounded half away from zero.
ImageBuffer downscale_area(const ImageBuffer& image, int factor);

// Separable cubic convolution with pixel-center alignment
// (src = (dst + 0.5) / factor - 0.5) and replicated borders.
ImageBuffer bicubic_upscale(const ImageBuffer& image, int factor, double a = -0.75);

struct QuantumUpscale {
    ImageBuffer image;
    TransformReport report;
    int circuit_qubits = 0;
};

// Encode, interpolate the "x" and "y" axes by spec.m qubits each, decode.
QuantumUpscale quantum_upscale(const ImageBuffer& image, InterpSpec spec);

double mse(const ImageBuffer& f, const ImageBuffer& g);
// +infinity for identical images.
double psnr(const ImageBuffer& f, const ImageBuffer& g);

struct MetricConfig {
    enum class Window { Global, Uniform };

    double c1 = (0.01 * 255) * (0.01 * 255);
    double c2 = (0.03 * 255) * (0.03 * 255);
    double c3 = (0.03 * 255) * (0.03 * 255) / 2;
    Window window = Window::Uniform;
    int window_size = 7;
};

// Mean of l * c * s over every fully contained window (one window for
// Global), with sample variances; RGB averages the channels.
double ssim(const ImageBuffer& f, const ImageBuffer& g, const MetricConfig& cfg = {});

}  // namespace qinterp
