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

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

namespace raopt {

using Vec3 = Eigen::Vector3d;

/// Column n holds the boresight (pointing) vector of antenna n.
using PointingMatrix = Eigen::Matrix3Xd;

/// Deflection angle pair of one rotatable antenna element.
/// The eccentric angle is measured from the +x reference boresight, the
/// azimuth angle rotates the boresight's y-z projection away from +z.
struct DeflectionAngles {
    double eccentric = 0.0; // [rad], in [0, theta_max] of the owning array
    double azimuth = 0.0;   // [rad], normalized to [0, 2*pi)
};

/// Per-antenna deflection angles, length N.
using DeflectionMatrix = std::vector<DeflectionAngles>;

/// Planar array of rotatable antennas sharing one directional gain pattern.
struct ArrayGeometry {
    std::vector<Vec3> positions;   // element reference positions [m]
    double wavelength = 0.125;     // carrier wavelength [m]
    int directivity_exponent = 4;  // p in the cos^(2p) element pattern
    double theta_max = 0.0;        // eccentric angle bound [rad], in [0, pi/2]

    std::size_t size() const { return positions.size(); }

    /// Throws std::invalid_argument if any field is out of range or two
    /// elements share a position.
    void validate() const;
};

/// Uniform planar array on the y-z plane, centered at the origin.
/// ny and nz must be odd so the grid is symmetric about the origin.
/// wavelength/directivity/theta_max are set to the common defaults
/// (0.125 m, p = 4, pi/6) and can be overwritten on the returned object.
ArrayGeometry make_upa(int ny, int nz, double spacing);

/// Unit boresight vector [cos(te), sin(te)sin(ta), sin(te)cos(ta)].
Vec3 pointing_vector(const DeflectionAngles& angles);

/// Inverse of pointing_vector for front-hemisphere unit vectors.
/// Throws std::invalid_argument if f is not unit norm (1e-9 tolerance) or
/// points into the rear hemisphere (f.x() < 0). At zero eccentricity the
/// azimuth is returned as 0 by convention.
DeflectionAngles recover_angles(const Vec3& f);

/// Unit vector from one point toward another. Throws on coincident points.
Vec3 direction_vector(const Vec3& from, const Vec3& to);

/// Stacks per-antenna pointing vectors into a 3xN matrix.
PointingMatrix pointing_matrix(const DeflectionMatrix& angles);

/// Applies recover_angles to every column.
DeflectionMatrix recover_all(const PointingMatrix& f);

/// Maps any angle into [0, 2*pi).
double normalize_azimuth(double azimuth);

/// Bounds check of a full deflection matrix against the owning geometry.
/// Throws std::invalid_argument naming the offending antenna index.
void validate_angles(const ArrayGeometry& geom, const DeflectionMatrix& angles);

} // namespace raopt
