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

#include "raopt/channel.hpp"

namespace raopt {

/// N x K matrix of receive beamformers, column k = v_k, every column unit norm.
using BeamformerSet = Eigen::MatrixXcd;

enum class BeamformerKind { zf, mmse };

/// Per-user SINR of Eq.-(13) form:
/// gamma_k = P_k |v_k^H h_k|^2 / (sum_{j != k} P_j |v_k^H h_j|^2 + 1).
Eigen::VectorXd sinr(const ChannelMatrix& h, const BeamformerSet& v,
                     const Eigen::VectorXd& powers);

double min_sinr(const ChannelMatrix& h, const BeamformerSet& v, const Eigen::VectorXd& powers);

/// Maximum-ratio combiner h / ||h||. Throws on a zero channel.
Eigen::VectorXcd mrc(const Eigen::VectorXcd& h);

/// Zero-forcing receiver for user k: h_k projected onto the orthogonal
/// complement of the other users' channels, normalized. Requires N >= K,
/// full column rank of the interferer matrix and a nonvanishing projection.
Eigen::VectorXcd zf(const ChannelMatrix& h, Eigen::Index k);

/// MMSE receiver C_k^{-1} h_k normalized, with
/// C_k = sum_{j != k} P_j h_j h_j^H + I. Computed through the Woodbury
/// reduction, so only a (K-1) x (K-1) Hermitian system is solved.
Eigen::VectorXcd mmse(const ChannelMatrix& h, Eigen::Index k, const Eigen::VectorXd& powers);

/// Woodbury form of C_k^{-1}: I_N - Hbar (P^{-1} + Hbar^H Hbar)^{-1} Hbar^H,
/// where Hbar holds the interferer channels and P their powers.
Eigen::MatrixXcd mmse_woodbury_inverse(const Eigen::MatrixXcd& h_bar,
                                       const Eigen::VectorXd& powers_bar);

/// All K beamformers of the requested kind.
BeamformerSet beamformer_set(const ChannelMatrix& h, BeamformerKind kind,
                             const Eigen::VectorXd& powers);

/// Rotates the global phase so the first significant component is real
/// nonnegative; the SINR is invariant, snapshots become deterministic.
Eigen::VectorXcd fix_global_phase(Eigen::VectorXcd v);

} // namespace raopt
