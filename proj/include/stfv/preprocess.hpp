#pragma once

#include <cstdint>
#include <filesystem>
#include <span>

#include "stfv/common.hpp"

namespace stfv {

/// Signed square-root of the L1-normalized vector:
/// c -> sign(c) * sqrt(|c| / ||phi||_1). The zero vector maps to itself.
/// For non-negative inputs the result has unit L2 norm.
Vec rootsift_transform(std::span<const double> phi);

/// Principal-component projection fit by exact eigendecomposition of the
/// sample covariance (n-1 denominator). Basis rows are orthonormal principal
/// directions ordered by non-increasing eigenvalue; each row's sign is fixed
/// so its first nonzero entry is positive, making the fit deterministic.
struct PcaModel {
    std::uint32_t input_dim = 0;
    std::uint32_t output_dim = 0;
    Vec mean;          // length input_dim
    Mat basis;         // output_dim x input_dim
    Vec eigenvalues;   // length output_dim, non-increasing, >= 0
};

PcaModel pca_fit(const Mat& samples, std::size_t output_dim);
Vec pca_transform(const PcaModel& model, std::span<const double> phi);
/// mean + basis^T * reduced; exact inverse only when output_dim == input_dim.
Vec pca_reconstruct(const PcaModel& model, std::span<const double> reduced);

/// PCA model file (.pca), little-endian: magic "PCA1" | version u32=1 |
/// input_dim u32 | output_dim u32 | mean f32[D] | eigenvalues f32[D'] |
/// basis row-major f32[D'*D].
void save_pca(const PcaModel& model, const std::filesystem::path& path);
PcaModel load_pca(const std::filesystem::path& path);

}  // namespace stfv
