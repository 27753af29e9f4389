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

#include "raopt/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace raopt {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

void ArrayGeometry::validate() const {
    if (positions.empty())
        throw std::invalid_argument("ArrayGeometry: at least one antenna required");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("ArrayGeometry: wavelength must be positive");
    if (directivity_exponent < 0)
        throw std::invalid_argument("ArrayGeometry: directivity exponent must be >= 0");
    if (!(theta_max >= 0.0 && theta_max <= kPi / 2.0))
        throw std::invalid_argument("ArrayGeometry: theta_max must lie in [0, pi/2]");
    for (std::size_t i = 0; i < positions.size(); ++i)
        for (std::size_t j = i + 1; j < positions.size(); ++j)
            if ((positions[i] - positions[j]).norm() == 0.0)
                throw std::invalid_argument("ArrayGeometry: antennas " + std::to_string(i) +
                                            " and " + std::to_string(j) + " coincide");
}

ArrayGeometry make_upa(int ny, int nz, double spacing) {
    if (ny < 1 || ny % 2 == 0)
        throw std::invalid_argument("make_upa: ny must be an odd positive integer");
    if (nz < 1 || nz % 2 == 0)
        throw std::invalid_argument("make_upa: nz must be an odd positive integer");
    if (!(spacing > 0.0))
        throw std::invalid_argument("make_upa: spacing must be positive");

    ArrayGeometry geom;
    geom.wavelength = 0.125;
    geom.directivity_exponent = 4;
    geom.theta_max = kPi / 6.0;
    geom.positions.reserve(static_cast<std::size_t>(ny) * static_cast<std::size_t>(nz));
    const int hy = (ny - 1) / 2;
    const int hz = (nz - 1) / 2;
    for (int iz = -hz; iz <= hz; ++iz)
        for (int iy = -hy; iy <= hy; ++iy)
            geom.positions.emplace_back(0.0, iy * spacing, iz * spacing);
    return geom;
}

Vec3 pointing_vector(const DeflectionAngles& angles) {
    const double se = std::sin(angles.eccentric);
    return {std::cos(angles.eccentric), se * std::sin(angles.azimuth),
            se * std::cos(angles.azimuth)};
}

DeflectionAngles recover_angles(const Vec3& f) {
    if (std::abs(f.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("recover_angles: input is not a unit vector");
    if (f.x() < -1e-9)
        throw std::invalid_argument("recover_angles: rear-hemisphere pointing vector");

    DeflectionAngles a;
    a.eccentric = std::acos(std::clamp(f.x(), -1.0, 1.0));
    if (f.y() == 0.0 && f.z() == 0.0)
        a.azimuth = 0.0; // boresight: azimuth is undefined, fix it at 0
    else
        a.azimuth = normalize_azimuth(std::atan2(f.y(), f.z()));
    return a;
}

Vec3 direction_vector(const Vec3& from, const Vec3& to) {
    const Vec3 diff = to - from;
    const double dist = diff.norm();
    if (dist == 0.0)
        throw std::invalid_argument("direction_vector: coincident points");
    return diff / dist;
}

PointingMatrix pointing_matrix(const DeflectionMatrix& angles) {
    PointingMatrix f(3, static_cast<Eigen::Index>(angles.size()));
    for (std::size_t n = 0; n < angles.size(); ++n)
        f.col(static_cast<Eigen::Index>(n)) = pointing_vector(angles[n]);
    return f;
}

DeflectionMatrix recover_all(const PointingMatrix& f) {
    DeflectionMatrix angles(static_cast<std::size_t>(f.cols()));
    for (Eigen::Index n = 0; n < f.cols(); ++n)
        angles[static_cast<std::size_t>(n)] = recover_angles(f.col(n));
    return angles;
}

double normalize_azimuth(double azimuth) {
    double a = std::fmod(azimuth, kTwoPi);
    if (a < 0.0)
        a += kTwoPi;
    if (a >= kTwoPi) // fmod can round back up to 2*pi
        a = 0.0;
    return a;
}

void validate_angles(const ArrayGeometry& geom, const DeflectionMatrix& angles) {
    if (angles.size() != geom.size())
        throw std::invalid_argument("validate_angles: angle count does not match array size");
    for (std::size_t n = 0; n < angles.size(); ++n) {
        const auto& a = angles[n];
        if (!(a.eccentric >= 0.0 && a.eccentric <= geom.theta_max + 1e-12))
            throw std::invalid_argument("validate_angles: eccentric angle of antenna " +
                                        std::to_string(n) + " outside [0, theta_max]");
        if (!(a.azimuth >= 0.0 && a.azimuth < kTwoPi))
            throw std::invalid_argument("validate_angles: azimuth of antenna " +
                                        std::to_string(n) + " not normalized to [0, 2*pi)");
    }
}

} // namespace raopt
