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

#include "raopt/channel.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "raopt/detail/rng.hpp"

namespace raopt {

namespace {

constexpr double kPi = std::numbers::pi;

// Integer power by repeated multiplication; exact for the small exponents
// used by the gain pattern and avoids libm pow() rounding differences
// between call sites.
double ipow(double base, int exponent) {
    double out = 1.0;
    for (int i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

double clamp_projection(double x) { return x > 0.0 ? x : 0.0; }

} // namespace

void Scenario::validate(const ArrayGeometry& geom) const {
    geom.validate();
    if (users.empty())
        throw std::invalid_argument("Scenario: at least one user required");
    for (std::size_t k = 0; k < users.size(); ++k) {
        if (!(users[k].transmit_snr > 0.0))
            throw std::invalid_argument("Scenario: transmit SNR of user " + std::to_string(k) +
                                        " must be positive");
        for (const auto& w : geom.positions)
            if ((users[k].position - w).norm() == 0.0)
                throw std::invalid_argument("Scenario: user " + std::to_string(k) +
                                            " coincides with an antenna");
    }
    for (std::size_t q = 0; q < scatterers.size(); ++q) {
        if (!(scatterers[q].rcs > 0.0))
            throw std::invalid_argument("Scenario: RCS of scatterer " + std::to_string(q) +
                                        " must be positive");
        for (const auto& w : geom.positions)
            if ((scatterers[q].position - w).norm() == 0.0)
                throw std::invalid_argument("Scenario: scatterer " + std::to_string(q) +
                                            " coincides with an antenna");
        for (std::size_t k = 0; k < users.size(); ++k)
            if ((scatterers[q].position - users[k].position).norm() == 0.0)
                throw std::invalid_argument("Scenario: scatterer " + std::to_string(q) +
                                            " coincides with user " + std::to_string(k));
    }
}

Scenario sample_scenario(const ScenarioTemplate& tmpl, std::uint64_t seed) {
    if (tmpl.num_users < 1)
        throw std::invalid_argument("sample_scenario: num_users must be >= 1");
    if (tmpl.num_scatterers < 0)
        throw std::invalid_argument("sample_scenario: num_scatterers must be >= 0");
    if (!(tmpl.radius > 0.0))
        throw std::invalid_argument("sample_scenario: radius must be positive");
    if (!(tmpl.transmit_snr > 0.0))
        throw std::invalid_argument("sample_scenario: transmit_snr must be positive");
    if (!(tmpl.rcs_mean > 0.0))
        throw std::invalid_argument("sample_scenario: rcs_mean must be positive");

    detail::Rng rng(seed);
    Scenario scen;
    scen.seed = seed;
    const int k_count = tmpl.num_users;
    scen.users.reserve(static_cast<std::size_t>(k_count));
    for (int k = 0; k < k_count; ++k) {
        double phi;
        if (tmpl.placement == UserPlacement::even)
            phi = -kPi / 2.0 + (k + 0.5) * kPi / k_count;
        else
            phi = rng.uniform(-kPi / 2.0, kPi / 2.0);
        User u;
        u.position = Vec3(tmpl.radius * std::cos(phi), tmpl.radius * std::sin(phi), 0.0);
        u.transmit_snr = tmpl.transmit_snr;
        scen.users.push_back(u);
    }
    scen.scatterers.reserve(static_cast<std::size_t>(tmpl.num_scatterers));
    for (int q = 0; q < tmpl.num_scatterers; ++q) {
        Scatterer s;
        const double rho = tmpl.radius * std::sqrt(rng.uniform01());
        const double phi = rng.uniform(-kPi / 2.0, kPi / 2.0);
        s.position = Vec3(rho * std::cos(phi), rho * std::sin(phi), 0.0);
        s.phase = rng.uniform(-kPi, kPi);
        s.rcs = rng.exponential(tmpl.rcs_mean);
        scen.scatterers.push_back(s);
    }
    return scen;
}

double peak_gain(int directivity_exponent) {
    if (directivity_exponent < 0)
        throw std::invalid_argument("peak_gain: directivity exponent must be >= 0");
    return 2.0 * (2.0 * directivity_exponent + 1.0);
}

double gain_pattern(double eps, int directivity_exponent) {
    if (eps < 0.0)
        throw std::invalid_argument("gain_pattern: elevation must be nonnegative");
    if (eps >= kPi / 2.0)
        return 0.0;
    return peak_gain(directivity_exponent) * ipow(std::cos(eps), 2 * directivity_exponent);
}

PathCoefficients path_coefficients(const ArrayGeometry& geom, const Scenario& scen,
                                   GainModel gain_model) {
    scen.validate(geom);

    const auto n_count = static_cast<Eigen::Index>(geom.size());
    const auto k_count = static_cast<Eigen::Index>(scen.num_users());
    const auto q_count = static_cast<Eigen::Index>(scen.num_scatterers());
    const double lambda = geom.wavelength;
    const double g0 = gain_model == GainModel::isotropic_unit
                          ? 1.0
                          : peak_gain(geom.directivity_exponent);
    const double wave_number = 2.0 * kPi / lambda;

    PathCoefficients coef;
    coef.directivity_exponent = geom.directivity_exponent;
    coef.gain_model = gain_model;
    coef.alpha.resize(n_count, k_count);
    coef.user_dirs.assign(static_cast<std::size_t>(k_count), Eigen::Matrix3Xd(3, n_count));
    coef.beta.assign(static_cast<std::size_t>(q_count), Eigen::MatrixXcd(n_count, k_count));
    coef.scat_dirs.assign(static_cast<std::size_t>(q_count), Eigen::Matrix3Xd(3, n_count));

    for (Eigen::Index k = 0; k < k_count; ++k) {
        const Vec3& q_pos = scen.users[static_cast<std::size_t>(k)].position;
        for (Eigen::Index n = 0; n < n_count; ++n) {
            const Vec3& w = geom.positions[static_cast<std::size_t>(n)];
            const double r = (q_pos - w).norm();
            coef.user_dirs[static_cast<std::size_t>(k)].col(n) = (q_pos - w) / r;
            coef.alpha(n, k) = lambda * std::sqrt(g0) / (4.0 * kPi * r) *
                               std::polar(1.0, -wave_number * r);
        }
    }
    for (Eigen::Index q = 0; q < q_count; ++q) {
        const auto& sc = scen.scatterers[static_cast<std::size_t>(q)];
        for (Eigen::Index n = 0; n < n_count; ++n) {
            const Vec3& w = geom.positions[static_cast<std::size_t>(n)];
            const double d = (sc.position - w).norm();
            coef.scat_dirs[static_cast<std::size_t>(q)].col(n) = (sc.position - w) / d;
            for (Eigen::Index k = 0; k < k_count; ++k) {
                const double t =
                    (scen.users[static_cast<std::size_t>(k)].position - sc.position).norm();
                coef.beta[static_cast<std::size_t>(q)](n, k) =
                    lambda * std::sqrt(g0 * sc.rcs) / (4.0 * kPi * d * t) *
                    std::polar(1.0, -wave_number * (d + t) + sc.phase);
            }
        }
    }
    return coef;
}

ChannelMatrix synthesize_channel(const PathCoefficients& coef, const PointingMatrix& f) {
    if (f.cols() != coef.num_antennas())
        throw std::invalid_argument("synthesize_channel: pointing matrix has wrong column count");
    for (Eigen::Index n = 0; n < f.cols(); ++n)
        if (std::abs(f.col(n).norm() - 1.0) > 1e-9)
            throw std::invalid_argument("synthesize_channel: pointing vector " +
                                        std::to_string(n) + " is not unit norm");
    return eval_channel(coef, f);
}

ChannelMatrix eval_channel(const PathCoefficients& coef, const PointingMatrix& f) {
    const Eigen::Index n_count = coef.num_antennas();
    const Eigen::Index k_count = coef.num_users();
    const Eigen::Index q_count = coef.num_scatterers();
    if (f.cols() != n_count)
        throw std::invalid_argument("eval_channel: pointing matrix has wrong column count");

    ChannelMatrix h(n_count, k_count);
    if (coef.gain_model == GainModel::isotropic_unit) {
        // Unit gain in every direction: the boresight drops out entirely.
        h = coef.alpha;
        for (Eigen::Index q = 0; q < q_count; ++q)
            h += coef.beta[static_cast<std::size_t>(q)];
        return h;
    }

    const int p = coef.directivity_exponent;
    for (Eigen::Index k = 0; k < k_count; ++k) {
        const auto& dirs = coef.user_dirs[static_cast<std::size_t>(k)];
        for (Eigen::Index n = 0; n < n_count; ++n) {
            const double proj = clamp_projection(f.col(n).dot(dirs.col(n)));
            h(n, k) = coef.alpha(n, k) * ipow(proj, p);
        }
    }
    for (Eigen::Index q = 0; q < q_count; ++q) {
        const auto& dirs = coef.scat_dirs[static_cast<std::size_t>(q)];
        const auto& beta = coef.beta[static_cast<std::size_t>(q)];
        for (Eigen::Index n = 0; n < n_count; ++n) {
            const double proj = clamp_projection(f.col(n).dot(dirs.col(n)));
            if (proj == 0.0)
                continue;
            const double gain = ipow(proj, p);
            for (Eigen::Index k = 0; k < k_count; ++k)
                h(n, k) += beta(n, k) * gain;
        }
    }
    return h;
}

Eigen::VectorXd user_powers(const Scenario& scen) {
    Eigen::VectorXd p(static_cast<Eigen::Index>(scen.num_users()));
    for (Eigen::Index k = 0; k < p.size(); ++k)
        p(k) = scen.users[static_cast<std::size_t>(k)].transmit_snr;
    return p;
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

double from_db(double db) { return std::pow(10.0, db / 10.0); }

} // namespace raopt
