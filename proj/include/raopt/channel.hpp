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

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "raopt/geometry.hpp"

namespace raopt {

using Complex = std::complex<double>;
using ChannelMatrix = Eigen::MatrixXcd; // N x K, column k = h_k

struct User {
    Vec3 position;             // [m]
    double transmit_snr = 1.0; // P_k / sigma^2, linear
};

struct Scatterer {
    Vec3 position;    // [m]
    double rcs = 1.0; // radar cross section sigma_q, > 0
    double phase = 0; // phase shift phi_q, [-pi, pi)
};

struct Scenario {
    std::vector<User> users;
    std::vector<Scatterer> scatterers;
    std::uint64_t seed = 0;

    std::size_t num_users() const { return users.size(); }
    std::size_t num_scatterers() const { return scatterers.size(); }

    /// Checks positivity of powers/RCS and that every user/scatterer/antenna
    /// distance involved in the propagation model is strictly positive.
    void validate(const ArrayGeometry& geom) const;
};

/// How the users are laid out by sample_scenario. The default places them
/// evenly on the half circle; random_azimuth draws the azimuths uniformly
/// over [-pi/2, pi/2] instead (used by randomized small-instance checks).
enum class UserPlacement { even, random_azimuth };

struct ScenarioTemplate {
    int num_users = 1;
    int num_scatterers = 0;
    double radius = 50.0;       // user/scatterer half-circle radius [m]
    double transmit_snr = 1e3;  // common linear transmit SNR
    double rcs_mean = 1.0;      // mean of the exponential RCS draw
    UserPlacement placement = UserPlacement::even;
};

/// Draws a scenario from the template. Users sit on the half circle of the
/// given radius in the x > 0 half-space (evenly spaced unless the template
/// says otherwise), scatterer positions are area-uniform over the half disk,
/// scatterer phases are uniform over [-pi, pi) and the RCS values are
/// exponential with the template mean. Deterministic for a fixed seed.
Scenario sample_scenario(const ScenarioTemplate& tmpl, std::uint64_t seed);

/// Element gain G0 * cos^(2p)(eps) for eps in [0, pi/2), zero behind,
/// with G0 = 2(2p + 1). eps must be nonnegative.
double gain_pattern(double eps, int directivity_exponent);

/// Peak element gain 2(2p + 1).
double peak_gain(int directivity_exponent);

/// Element model used when synthesizing channels. isotropic_unit replaces the
/// directional pattern by unit gain in every direction (benchmark scheme).
enum class GainModel { directional, isotropic_unit };

/// Geometry-dependent path data: LoS coefficients alpha (N x K), per-scatterer
/// NLoS coefficients beta[q] (N x K), and the unit direction vectors from each
/// antenna toward each user / scatterer.
struct PathCoefficients {
    Eigen::MatrixXcd alpha;                  // N x K
    std::vector<Eigen::MatrixXcd> beta;      // size Q, each N x K
    std::vector<Eigen::Matrix3Xd> user_dirs; // size K, column n = qhat_{k,n}
    std::vector<Eigen::Matrix3Xd> scat_dirs; // size Q, column n = uhat_{q,n}
    int directivity_exponent = 4;
    GainModel gain_model = GainModel::directional;

    Eigen::Index num_antennas() const { return alpha.rows(); }
    Eigen::Index num_users() const { return alpha.cols(); }
    Eigen::Index num_scatterers() const { return static_cast<Eigen::Index>(beta.size()); }
};

PathCoefficients path_coefficients(const ArrayGeometry& geom, const Scenario& scen,
                                   GainModel gain_model = GainModel::directional);

/// Channel entry (n, k) = alpha_{k,n} clamp(f_n . qhat_{k,n})^p
///                        + sum_q beta_{k,n,q} clamp(f_n . uhat_{q,n})^p.
/// Negative projections are clamped to zero, matching the rear-hemisphere
/// cutoff of the element pattern. Columns of f must be unit vectors.
ChannelMatrix synthesize_channel(const PathCoefficients& coef, const PointingMatrix& f);

/// Same kernel without the unit-norm requirement; used with the relaxed
/// pointing matrices (||f_n|| <= 1) that appear inside the SCA iteration.
ChannelMatrix eval_channel(const PathCoefficients& coef, const PointingMatrix& f);

/// Per-user linear transmit SNR vector.
Eigen::VectorXd user_powers(const Scenario& scen);

/// 10*log10 / inverse helpers for the dB boundary.
double to_db(double linear);
double from_db(double db);

} // namespace raopt
