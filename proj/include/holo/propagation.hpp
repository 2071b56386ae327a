#pragma once

#include "holo/field.hpp"

namespace holo {

// Angular spectrum propagation between parallel planes.
struct PropagationParams {
    double wavelength = 532e-9;  // meters
    double distance = 0.0;       // meters, signed
    double pitch = 8e-6;         // meters per pixel
    bool band_limit = true;      // Matsushima per-axis rectangular band limit
    bool pad2x = true;           // 2x zero-padding against circular wraparound

    void validate() const;
};

// Frequency-domain transfer function H(fx,fy) on a grid_w x grid_h DFT grid
// (frequency origin at index (0,0)). Evanescent components are zeroed; with
// band_limit on, frequencies beyond f_lim = 1/(lambda*sqrt((2*dfx*z)^2+1))
// per axis are zeroed as well (dfx = 1/(grid_w*pitch)).
ComplexField asm_transfer(const PropagationParams& p, int grid_w, int grid_h);

// IFFT(FFT(u) .* H), with optional 2x zero-pad and center crop.
ComplexField propagate(const ComplexField& u, const PropagationParams& p);

// Per-axis Matsushima frequency limit for aperture width w_phys = N*pitch.
double matsushima_limit(double wavelength, double distance, double aperture_width);

// Drops all memoized transfer functions (test hook; thread-safe).
void clear_transfer_cache();

}  // namespace holo
