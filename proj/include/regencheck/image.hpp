#pragma once

#include <cstdint>
#include <vector>

namespace regencheck {

// H x W x C raster, row-major, channel-interleaved, intensities in [0, 1].
struct ImageTensor {
    int height = 0;
    int width = 0;
    int channels = 0;  // 1 or 3
    std::vector<double> data;

    ImageTensor() = default;
    ImageTensor(int h, int w, int c, double fill = 0.0);

    std::size_t size() const { return data.size(); }
    double& at(int y, int x, int c) { return data[(static_cast<std::size_t>(y) * width + x) * channels + c]; }
    double at(int y, int x, int c) const { return data[(static_cast<std::size_t>(y) * width + x) * channels + c]; }

    // Throws InvalidImage when a field or element violates the contract.
    void validate() const;

    std::uint64_t content_hash() const;
};

ImageTensor clamp01(ImageTensor img);

// Bilinear resample with half-pixel centers. Linear in the input.
ImageTensor resize_bilinear(const ImageTensor& src, int out_h, int out_w);

// Adjoint of resize_bilinear: pulls a gradient at (out_h, out_w) back to (src_h, src_w).
ImageTensor resize_bilinear_adjoint(const ImageTensor& grad_out, int src_h, int src_w);

// Channel mean; identity for single-channel images.
ImageTensor to_grayscale(const ImageTensor& src);
ImageTensor to_grayscale_adjoint(const ImageTensor& grad_gray, int channels);

double linf_distance(const ImageTensor& a, const ImageTensor& b);
double l2_distance(const ImageTensor& a, const ImageTensor& b);

}  // namespace regencheck
