#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holo/field.hpp"
#include "holo/geometry.hpp"

namespace holo {

// Sinusoidal feature lift gamma(p): per input component, (sin(2^k pi p),
// cos(2^k pi p)) for k = 0..L-1, optionally prefixed by the raw components.
struct EncodingConfig {
    int frequencies = 6;          // L
    bool include_identity = true;

    int output_dim(int input_dim) const {
        return input_dim * (2 * frequencies + (include_identity ? 1 : 0));
    }
};

std::vector<double> positional_encode(std::span<const double> p, const EncodingConfig& cfg);

// Pinhole camera, camera-to-world rotation; camera looks along -z_cam with
// +y_cam up (the usual NeRF/OpenGL convention). Pixel (0,0) is top-left.
struct CameraPose {
    Mat3 rotation;
    Vec3 position;
    double focal_px = 0.0;
    double cx = 0.0, cy = 0.0;
    int width = 0, height = 0;

    void validate() const;  // rotation orthonormal within 1e-8, focal > 0

    Vec3 forward() const { return -rotation.col(2); }
    // World-space unit ray through the pixel center.
    void pixel_ray(double px, double py, Vec3& origin, Vec3& dir) const;

    static CameraPose look_at(const Vec3& eye, const Vec3& target, const Vec3& up,
                              double focal_px, int width, int height);
    // The paper's view vector v = (x,y,z,theta,phi): position plus direction
    // angles, theta polar from +z, phi azimuth from +x.
    static CameraPose from_view_vector(const Vec3& pos, double theta, double phi,
                                       double focal_px, int width, int height);
};

struct PosedDataset {
    std::vector<RealImage> images;  // all same dimensions
    std::vector<CameraPose> poses;
    bool shared_intrinsics = true;

    size_t size() const { return images.size(); }
    void validate() const;
};

// Trainable voxel radiance field. Parameters are stored pre-activation in one
// flat vector: [sigma: nvox][color: nvox*3 rgb-interleaved]; softplus maps
// density, sigmoid maps color, both applied after trilinear interpolation.
struct RadianceGrid {
    int nx = 0, ny = 0, nz = 0;
    Aabb bounds;
    std::vector<double> params;

    static RadianceGrid create(int nx, int ny, int nz, const Aabb& bounds);

    size_t voxel_count() const { return static_cast<size_t>(nx) * ny * nz; }
    size_t param_count() const { return params.size(); }

    double& sigma_pre(size_t vi) { return params[vi]; }
    double sigma_pre(size_t vi) const { return params[vi]; }
    double& color_pre(size_t vi, int c) { return params[voxel_count() + vi * 3 + c]; }
    double color_pre(size_t vi, int c) const { return params[voxel_count() + vi * 3 + c]; }

    // Activated (sigma, rgb) at a world point; zero outside the bounds.
    void sample(const Vec3& p, double& sigma, double rgb[3]) const;

    template <class Sink>
    void sample_backward(const Vec3& p, double d_sigma, const double d_rgb[3], Sink& sink) const;
};

struct RaySampling {
    int n_samples = 128;
    bool stratified = false;  // false = fixed midpoint sampling
    uint64_t seed = 0;
};

struct RayResult {
    double rgb[3] = {0, 0, 0};
    double transmittance = 1.0;  // T after the last sample
    double depth = 0.0;          // expected termination, in ray parameter t
    double weight_sum = 0.0;     // sum of compositing weights
};

RayResult render_ray(const RadianceGrid& grid, const Vec3& origin, const Vec3& dir,
                     double near, double far, const RaySampling& sampling,
                     uint64_t ray_id = 0);

struct RenderOptions {
    RaySampling sampling;
    double near = 0.1;
    double far = 4.0;
    // Restrict each ray's sample interval to its intersection with the grid
    // bounds (same integral, better quadrature).
    bool clip_to_bounds = true;
    // Rays whose final transmittance exceeds this are background.
    double background_transmittance = 0.99;
};

RealImage render_view(const RadianceGrid& grid, const CameraPose& pose,
                      const RenderOptions& opts);
// Single channel, z-depth in meters; background pixels are assigned far.
RealImage render_depth(const RadianceGrid& grid, const CameraPose& pose,
                       const RenderOptions& opts);
void render_view_and_depth(const RadianceGrid& grid, const CameraPose& pose,
                           const RenderOptions& opts, RealImage& view, RealImage& depth);

// Mean squared error over pixels and channels (Eq. loss in mean form).
double loss(const RealImage& rendered, const RealImage& truth);

// One ray batch, exposed so tests can probe gradients on a frozen batch.
struct RayBatch {
    struct Entry {
        Vec3 origin, dir;
        double near, far;
        double gt[3];
        uint64_t ray_id;
    };
    std::vector<Entry> entries;
    RaySampling sampling;
};

double batch_loss(const RadianceGrid& grid, const RayBatch& batch);
// Adds dL/dparams into grad (size = grid.param_count()); returns the loss.
double batch_loss_and_grad(const RadianceGrid& grid, const RayBatch& batch,
                           std::vector<double>& grad);

RayBatch make_training_batch(const RadianceGrid& grid, const PosedDataset& data,
                             const RenderOptions& opts, int rays, uint64_t seed,
                             uint64_t iteration);

struct FitOptions {
    int iterations = 2000;
    double learning_rate = 0.05;
    int rays_per_batch = 4096;
    uint64_t seed = 1;
    RenderOptions render;
    bool verbose = false;
};

struct TrainReport {
    std::vector<double> loss_curve;
    double final_loss_ema = 0.0;
    double final_train_psnr = 0.0;  // 10*log10(1/ema)
    int iterations = 0;
};

// Adam on the analytic gradients; throws on non-finite loss.
TrainReport fit(RadianceGrid& grid, const PosedDataset& data, const FitOptions& opts);

// Checkpoint: "HFRG", u32 version, u32 resolution triple, f64 bounds,
// then f32 little-endian parameter planes (sigma, R, G, B).
void save_checkpoint(const std::string& path, const RadianceGrid& grid);
RadianceGrid load_checkpoint(const std::string& path);

// Pose files: JSON-lines records {"image_path", "c2w" (16 numbers, row-major
// camera-to-world), "focal_px", optional "cx","cy","width","height"}.
// load_posed_dataset autodetects the NeRF "transforms" JSON format as well.
PosedDataset load_posed_dataset(const std::string& pose_file);
void save_pose_file(const std::string& path, const PosedDataset& data,
                    const std::vector<std::string>& image_paths);
void convert_transforms(const std::string& transforms_json, const std::string& out_jsonl);

// Optional coordinate-MLP field variant (2 hidden layers) behind the same
// rendering interface; positions are normalized to [-1,1] over the bounds and
// lifted with positional_encode before the first layer.
struct MlpField {
    Aabb bounds;
    EncodingConfig encoding;
    int hidden = 64;
    std::vector<double> params;

    static MlpField create(const Aabb& bounds, const EncodingConfig& enc, int hidden,
                           uint64_t seed);

    size_t param_count() const { return params.size(); }
    int input_dim() const { return encoding.output_dim(3); }

    void sample(const Vec3& p, double& sigma, double rgb[3]) const;
    template <class Sink>
    void sample_backward(const Vec3& p, double d_sigma, const double d_rgb[3], Sink& sink) const;
};

RayResult render_ray(const MlpField& field, const Vec3& origin, const Vec3& dir,
                     double near, double far, const RaySampling& sampling,
                     uint64_t ray_id = 0);
RealImage render_view(const MlpField& field, const CameraPose& pose, const RenderOptions& opts);
double batch_loss(const MlpField& field, const RayBatch& batch);
double batch_loss_and_grad(const MlpField& field, const RayBatch& batch,
                           std::vector<double>& grad);
TrainReport fit(MlpField& field, const PosedDataset& data, const FitOptions& opts);

}  // namespace holo
