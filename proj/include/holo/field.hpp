#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace holo {

using cplx = std::complex<double>;

// 2D complex amplitude grid with physical pixel pitch (square pixels).
// Row-major, origin top-left, frequency origin at index (0,0).
struct ComplexField {
    int width = 0;
    int height = 0;
    double pitch = 0.0;  // meters per pixel
    std::vector<cplx> data;

    ComplexField() = default;
    ComplexField(int w, int h, double pitch_m);

    cplx& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    const cplx& at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
    size_t size() const { return data.size(); }

    bool is_finite() const;
    double energy() const;  // sum |u|^2, deterministic chunked reduction
};

// Scalar image, values nominally in [0,1]; 1 or 3 channels, row-major,
// channel-interleaved. Depth maps reuse this container with values in meters.
struct RealImage {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<double> data;

    RealImage() = default;
    RealImage(int w, int h, int ch);

    double& at(int x, int y, int c = 0) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    const double& at(int x, int y, int c = 0) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    size_t size() const { return data.size(); }

    RealImage clamped01() const;
    bool same_shape(const RealImage& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }
};

enum class FftDirection { Forward, Inverse };

// Unitary 2D FFT (1/sqrt(N) each direction), so Parseval holds symmetrically.
ComplexField fft2(const ComplexField& f, FftDirection dir);

// Quadrant swaps moving the frequency origin to/from the grid center.
ComplexField fftshift(const ComplexField& f);
ComplexField ifftshift(const ComplexField& f);

// Zero-pad / crop about the grid center; crop_center(pad_center(f,2w,2h),w,h) == f.
ComplexField pad_center(const ComplexField& f, int new_w, int new_h);
ComplexField crop_center(const ComplexField& f, int new_w, int new_h);

double rms_diff(const ComplexField& a, const ComplexField& b);

}  // namespace holo
