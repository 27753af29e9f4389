// SPDX-License-Identifier: Apache-2.0
//
// raopt: rotatable-antenna array modeling and max-min SINR optimization
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "raopt/beamforming.hpp"

#include <stdexcept>
#include <string>

namespace raopt {

namespace {

// Interferer matrix Hbar_k: H with column k removed.
Eigen::MatrixXcd drop_column(const Eigen::MatrixXcd& h, Eigen::Index k) {
    Eigen::MatrixXcd out(h.rows(), h.cols() - 1);
    out.leftCols(k) = h.leftCols(k);
    out.rightCols(h.cols() - 1 - k) = h.rightCols(h.cols() - 1 - k);
    return out;
}

Eigen::VectorXd drop_entry(const Eigen::VectorXd& p, Eigen::Index k) {
    Eigen::VectorXd out(p.size() - 1);
    out.head(k) = p.head(k);
    out.tail(p.size() - 1 - k) = p.tail(p.size() - 1 - k);
    return out;
}

void check_dims(const Eigen::MatrixXcd& h, const Eigen::VectorXd& powers) {
    if (powers.size() != h.cols())
        throw std::invalid_argument("beamforming: power vector length does not match user count");
}

} // namespace

Eigen::VectorXd sinr(const ChannelMatrix& h, const BeamformerSet& v,
                     const Eigen::VectorXd& powers) {
    check_dims(h, powers);
    if (v.rows() != h.rows() || v.cols() != h.cols())
        throw std::invalid_argument("sinr: beamformer matrix dimensions do not match channel");
    const Eigen::Index k_count = h.cols();
    // |v_j^H h_k|^2 for all pairs
    const Eigen::MatrixXd cross = (v.adjoint() * h).cwiseAbs2();
    Eigen::VectorXd gamma(k_count);
    for (Eigen::Index k = 0; k < k_count; ++k) {
        double interference = 1.0;
        for (Eigen::Index j = 0; j < k_count; ++j)
            if (j != k)
                interference += powers(j) * cross(k, j);
        gamma(k) = powers(k) * cross(k, k) / interference;
    }
    return gamma;
}

double min_sinr(const ChannelMatrix& h, const BeamformerSet& v, const Eigen::VectorXd& powers) {
    return sinr(h, v, powers).minCoeff();
}

Eigen::VectorXcd mrc(const Eigen::VectorXcd& h) {
    const double norm = h.norm();
    if (norm == 0.0)
        throw std::invalid_argument("mrc: zero channel vector");
    return fix_global_phase(h / norm);
}

Eigen::VectorXcd zf(const ChannelMatrix& h, Eigen::Index k) {
    const Eigen::Index n_count = h.rows();
    const Eigen::Index k_count = h.cols();
    if (k < 0 || k >= k_count)
        throw std::invalid_argument("zf: user index out of range");
    if (k_count == 1)
        return mrc(h.col(0));
    if (n_count < k_count)
        throw std::invalid_argument("zf: requires at least as many antennas as users");

    const Eigen::MatrixXcd h_bar = drop_column(h, k);
    // Rank check on the interferer matrix; tiny singular values mean the
    // Gram matrix inverse would amplify noise into garbage.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h_bar);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-12 * sv(0))
        throw std::runtime_error("zf: interferer channels are rank deficient for user " +
                                 std::to_string(k));

    const Eigen::MatrixXcd gram = h_bar.adjoint() * h_bar;
    const Eigen::VectorXcd coeff = gram.llt().solve(h_bar.adjoint() * h.col(k));
    Eigen::VectorXcd projected = h.col(k) - h_bar * coeff;
    const double norm = projected.norm();
    if (norm <= 1e-12 * h.col(k).norm())
        throw std::runtime_error("zf: channel of user " + std::to_string(k) +
                                 " lies in the interferer span");
    return fix_global_phase(projected / norm);
}

Eigen::MatrixXcd mmse_woodbury_inverse(const Eigen::MatrixXcd& h_bar,
                                       const Eigen::VectorXd& powers_bar) {
    if (powers_bar.size() != h_bar.cols())
        throw std::invalid_argument("mmse_woodbury_inverse: power vector length mismatch");
    const Eigen::Index n_count = h_bar.rows();
    if (h_bar.cols() == 0)
        return Eigen::MatrixXcd::Identity(n_count, n_count);
    for (Eigen::Index j = 0; j < powers_bar.size(); ++j)
        if (!(powers_bar(j) > 0.0))
            throw std::invalid_argument("mmse_woodbury_inverse: powers must be positive");

    Eigen::MatrixXcd inner = h_bar.adjoint() * h_bar;
    inner.diagonal() += powers_bar.cwiseInverse().cast<Complex>();
    Eigen::LLT<Eigen::MatrixXcd> llt(inner);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("mmse_woodbury_inverse: inner system not positive definite");
    return Eigen::MatrixXcd::Identity(n_count, n_count) -
           h_bar * llt.solve(h_bar.adjoint());
}

Eigen::VectorXcd mmse(const ChannelMatrix& h, Eigen::Index k, const Eigen::VectorXd& powers) {
    check_dims(h, powers);
    if (k < 0 || k >= h.cols())
        throw std::invalid_argument("mmse: user index out of range");
    if (h.cols() == 1)
        return mrc(h.col(0));

    const Eigen::MatrixXcd h_bar = drop_column(h, k);
    const Eigen::VectorXd p_bar = drop_entry(powers, k);
    Eigen::MatrixXcd inner = h_bar.adjoint() * h_bar;
    inner.diagonal() += p_bar.cwiseInverse().cast<Complex>();
    Eigen::LLT<Eigen::MatrixXcd> llt(inner);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("mmse: inner system not positive definite");
    Eigen::VectorXcd v = h.col(k) - h_bar * llt.solve(h_bar.adjoint() * h.col(k));
    const double norm = v.norm();
    if (norm == 0.0)
        throw std::runtime_error("mmse: zero channel for user " + std::to_string(k));
    return fix_global_phase(v / norm);
}

BeamformerSet beamformer_set(const ChannelMatrix& h, BeamformerKind kind,
                             const Eigen::VectorXd& powers) {
    BeamformerSet v(h.rows(), h.cols());
    for (Eigen::Index k = 0; k < h.cols(); ++k)
        v.col(k) = kind == BeamformerKind::zf ? zf(h, k) : mmse(h, k, powers);
    return v;
}

Eigen::VectorXcd fix_global_phase(Eigen::VectorXcd v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > 1e-12) {
            v *= std::conj(v(i)) / mag;
            break;
        }
    }
    return v;
}

} // namespace raopt
