#include "regencheck/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "regencheck/error.hpp"
#include "regencheck/rng.hpp"

namespace regencheck {

ImageTensor::ImageTensor(int h, int w, int c, double fill)
    : height(h), width(w), channels(c), data(static_cast<std::size_t>(h) * w * c, fill) {}

void ImageTensor::validate() const {
    if (height <= 0 || width <= 0) throw InvalidImage("non-positive image dimensions");
    if (channels != 1 && channels != 3) throw InvalidImage("channels must be 1 or 3");
    if (data.size() != static_cast<std::size_t>(height) * width * channels)
        throw InvalidImage("data length " + std::to_string(data.size()) + " does not match H*W*C");
    for (double v : data) {
        if (!(v >= 0.0 && v <= 1.0)) throw InvalidImage("pixel intensity outside [0, 1]");
    }
}

std::uint64_t ImageTensor::content_hash() const {
    std::uint64_t h = fnv1a64(&height, sizeof(height));
    h = fnv1a64(&width, sizeof(width), h);
    h = fnv1a64(&channels, sizeof(channels), h);
    return fnv1a64(data.data(), data.size() * sizeof(double), h);
}

ImageTensor clamp01(ImageTensor img) {
    for (auto& v : img.data) v = std::clamp(v, 0.0, 1.0);
    return img;
}

namespace {

struct Tap {
    int lo;
    int hi;
    double w_hi;  // weight of the hi sample; lo gets (1 - w_hi)
};

// Half-pixel-center sample positions, clamped at the border.
std::vector<Tap> make_taps(int in_n, int out_n) {
    std::vector<Tap> taps(static_cast<std::size_t>(out_n));
    const double scale = static_cast<double>(in_n) / out_n;
    for (int i = 0; i < out_n; ++i) {
        double pos = (i + 0.5) * scale - 0.5;
        pos = std::clamp(pos, 0.0, static_cast<double>(in_n - 1));
        int lo = static_cast<int>(std::floor(pos));
        int hi = std::min(lo + 1, in_n - 1);
        taps[static_cast<std::size_t>(i)] = {lo, hi, pos - lo};
    }
    return taps;
}

}  // namespace

ImageTensor resize_bilinear(const ImageTensor& src, int out_h, int out_w) {
    if (src.height == out_h && src.width == out_w) return src;
    const auto ys = make_taps(src.height, out_h);
    const auto xs = make_taps(src.width, out_w);
    ImageTensor dst(out_h, out_w, src.channels);
    for (int y = 0; y < out_h; ++y) {
        const Tap& ty = ys[static_cast<std::size_t>(y)];
        for (int x = 0; x < out_w; ++x) {
            const Tap& tx = xs[static_cast<std::size_t>(x)];
            for (int c = 0; c < src.channels; ++c) {
                const double top = src.at(ty.lo, tx.lo, c) * (1.0 - tx.w_hi) + src.at(ty.lo, tx.hi, c) * tx.w_hi;
                const double bot = src.at(ty.hi, tx.lo, c) * (1.0 - tx.w_hi) + src.at(ty.hi, tx.hi, c) * tx.w_hi;
                dst.at(y, x, c) = top * (1.0 - ty.w_hi) + bot * ty.w_hi;
            }
        }
    }
    return dst;
}

ImageTensor resize_bilinear_adjoint(const ImageTensor& grad_out, int src_h, int src_w) {
    if (grad_out.height == src_h && grad_out.width == src_w) return grad_out;
    const auto ys = make_taps(src_h, grad_out.height);
    const auto xs = make_taps(src_w, grad_out.width);
    ImageTensor grad_in(src_h, src_w, grad_out.channels, 0.0);
    for (int y = 0; y < grad_out.height; ++y) {
        const Tap& ty = ys[static_cast<std::size_t>(y)];
        for (int x = 0; x < grad_out.width; ++x) {
            const Tap& tx = xs[static_cast<std::size_t>(x)];
            for (int c = 0; c < grad_out.channels; ++c) {
                const double g = grad_out.at(y, x, c);
                grad_in.at(ty.lo, tx.lo, c) += g * (1.0 - ty.w_hi) * (1.0 - tx.w_hi);
                grad_in.at(ty.lo, tx.hi, c) += g * (1.0 - ty.w_hi) * tx.w_hi;
                grad_in.at(ty.hi, tx.lo, c) += g * ty.w_hi * (1.0 - tx.w_hi);
                grad_in.at(ty.hi, tx.hi, c) += g * ty.w_hi * tx.w_hi;
            }
        }
    }
    return grad_in;
}

ImageTensor to_grayscale(const ImageTensor& src) {
    if (src.channels == 1) return src;
    ImageTensor gray(src.height, src.width, 1);
    for (int y = 0; y < src.height; ++y)
        for (int x = 0; x < src.width; ++x) {
            double s = 0.0;
            for (int c = 0; c < src.channels; ++c) s += src.at(y, x, c);
            gray.at(y, x, 0) = s / src.channels;
        }
    return gray;
}

ImageTensor to_grayscale_adjoint(const ImageTensor& grad_gray, int channels) {
    if (channels == 1) return grad_gray;
    ImageTensor grad(grad_gray.height, grad_gray.width, channels);
    for (int y = 0; y < grad_gray.height; ++y)
        for (int x = 0; x < grad_gray.width; ++x)
            for (int c = 0; c < channels; ++c) grad.at(y, x, c) = grad_gray.at(y, x, 0) / channels;
    return grad;
}

double linf_distance(const ImageTensor& a, const ImageTensor& b) {
    if (a.data.size() != b.data.size()) throw DimensionMismatch("image size mismatch in linf_distance");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

double l2_distance(const ImageTensor& a, const ImageTensor& b) {
    if (a.data.size() != b.data.size()) throw DimensionMismatch("image size mismatch in l2_distance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = a.data[i] - b.data[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace regencheck
