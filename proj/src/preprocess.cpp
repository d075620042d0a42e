#include "stfv/preprocess.hpp"

#include <cmath>
#include <fstream>

#include <Eigen/Dense>

#include "stfv/binio.hpp"

namespace stfv {

Vec rootsift_transform(std::span<const double> phi) {
    double l1 = 0.0;
    for (double c : phi) {
        if (!std::isfinite(c)) throw std::invalid_argument("rootsift_transform: non-finite input");
        l1 += std::abs(c);
    }
    Vec out(phi.size(), 0.0);
    if (l1 == 0.0) return out;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        const double m = std::sqrt(std::abs(phi[i]) / l1);
        out[i] = phi[i] < 0.0 ? -m : m;
    }
    return out;
}

PcaModel pca_fit(const Mat& samples, std::size_t output_dim) {
    const std::size_t n = samples.rows;
    const std::size_t d = samples.cols;
    if (output_dim < 1 || output_dim > d)
        throw std::invalid_argument("pca_fit: output_dim must be in [1, input_dim]");
    if (n < output_dim) throw std::invalid_argument("pca_fit: need at least output_dim samples");
    if (n < 2) throw std::invalid_argument("pca_fit: need at least 2 samples");

    PcaModel model;
    model.input_dim = static_cast<std::uint32_t>(d);
    model.output_dim = static_cast<std::uint32_t>(output_dim);

    // Mean and covariance accumulated sequentially for a reproducible fit.
    model.mean.assign(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = samples.row(i);
        for (std::size_t j = 0; j < d; ++j) model.mean[j] += row[j];
    }
    for (double& m : model.mean) m /= static_cast<double>(n);

    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    Vec centered(d);
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = samples.row(i);
        for (std::size_t j = 0; j < d; ++j) centered[j] = row[j] - model.mean[j];
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a; b < d; ++b)
                cov(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) += centered[a] * centered[b];
    }
    const double scale = 1.0 / static_cast<double>(n - 1);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            const double v = cov(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) * scale;
            cov(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = v;
            cov(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = v;
        }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) throw NumericError("pca_fit: eigendecomposition failed");

    // Eigen returns eigenvalues in increasing order; take the top ones.
    model.eigenvalues.assign(output_dim, 0.0);
    model.basis = Mat(output_dim, d);
    for (std::size_t k = 0; k < output_dim; ++k) {
        const auto src = static_cast<Eigen::Index>(d - 1 - k);
        model.eigenvalues[k] = std::max(solver.eigenvalues()(src), 0.0);
        double* row = model.basis.row(k);
        for (std::size_t j = 0; j < d; ++j) row[j] = solver.eigenvectors()(static_cast<Eigen::Index>(j), src);
        for (std::size_t j = 0; j < d; ++j) {
            if (row[j] != 0.0) {
                if (row[j] < 0.0)
                    for (std::size_t m = 0; m < d; ++m) row[m] = -row[m];
                break;
            }
        }
    }
    return model;
}

Vec pca_transform(const PcaModel& model, std::span<const double> phi) {
    if (phi.size() != model.input_dim)
        throw std::invalid_argument("pca_transform: input length does not match model input_dim");
    Vec out(model.output_dim, 0.0);
    for (std::size_t k = 0; k < model.output_dim; ++k) {
        const double* row = model.basis.row(k);
        double acc = 0.0;
        for (std::size_t j = 0; j < model.input_dim; ++j) acc += row[j] * (phi[j] - model.mean[j]);
        out[k] = acc;
    }
    return out;
}

Vec pca_reconstruct(const PcaModel& model, std::span<const double> reduced) {
    if (reduced.size() != model.output_dim)
        throw std::invalid_argument("pca_reconstruct: input length does not match model output_dim");
    Vec out(model.mean);
    for (std::size_t k = 0; k < model.output_dim; ++k) {
        const double* row = model.basis.row(k);
        for (std::size_t j = 0; j < model.input_dim; ++j) out[j] += row[j] * reduced[k];
    }
    return out;
}

namespace {
constexpr char kMagic[4] = {'P', 'C', 'A', '1'};
constexpr std::uint32_t kVersion = 1;
}  // namespace

void save_pca(const PcaModel& model, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw FormatError("cannot open " + path.string() + " for writing");
    binio::write_magic(os, kMagic);
    binio::write_u32(os, kVersion);
    binio::write_u32(os, model.input_dim);
    binio::write_u32(os, model.output_dim);
    for (double m : model.mean) binio::write_f32(os, static_cast<float>(m));
    for (double e : model.eigenvalues) binio::write_f32(os, static_cast<float>(e));
    for (double b : model.basis.data) binio::write_f32(os, static_cast<float>(b));
    os.flush();
    if (!os) throw FormatError("I/O failure writing " + path.string());
}

PcaModel load_pca(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open PCA model " + path.string());
    binio::expect_magic(is, kMagic, "PCA");
    binio::expect_version(is, kVersion, "PCA");
    PcaModel model;
    model.input_dim = binio::read_u32(is, "input_dim");
    model.output_dim = binio::read_u32(is, "output_dim");
    if (model.input_dim < 1 || model.output_dim < 1 || model.output_dim > model.input_dim)
        throw FormatError("PCA model " + path.string() + " has invalid dimensions");
    model.mean.resize(model.input_dim);
    for (double& m : model.mean) m = binio::read_f32(is, "mean");
    model.eigenvalues.resize(model.output_dim);
    for (double& e : model.eigenvalues) e = binio::read_f32(is, "eigenvalues");
    model.basis = Mat(model.output_dim, model.input_dim);
    for (double& b : model.basis.data) b = binio::read_f32(is, "basis");
    return model;
}

}  // namespace stfv
