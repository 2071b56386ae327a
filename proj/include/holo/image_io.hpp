#pragma once

#include <string>

#include "holo/field.hpp"

namespace holo {

// PFM (portable float map): "Pf" = 1 channel, "PF" = 3 channels,
// scale -1.0 (little endian), rows stored bottom-up per the format spec.
void write_pfm(const std::string& path, const RealImage& img);
RealImage read_pfm(const std::string& path);

// Complex fields persist as two-plane PFM pairs <stem>.re.pfm / <stem>.im.pfm
// plus <stem>.meta.json carrying the pitch.
void write_complex_pfm(const std::string& stem, const ComplexField& f);
ComplexField read_complex_pfm(const std::string& stem);

// 8-bit PNG interchange is sRGB: encoded on save, linearized on load.
void write_png8_srgb(const std::string& path, const RealImage& linear);
// 16-bit grayscale PNG, linear scaling (used for hologram phase / depth).
void write_png16_gray(const std::string& path, const RealImage& img01);

// Loads 8-bit (sRGB -> linear) or 16-bit (linear) PNG, grayscale or RGB.
RealImage read_png(const std::string& path);

double srgb_to_linear(double c);
double linear_to_srgb(double c);

}  // namespace holo
