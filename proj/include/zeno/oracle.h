// Copyright 2026 The zenogate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZENO_ORACLE_H
#define ZENO_ORACLE_H

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zeno/gate.h"

namespace zeno::oracle {

// Joint target (x) control state space.
//
// Target levels: upper, middle, lower, lost. Control levels: absent, present, lost.
// Basis index = 3 * target + control, giving dimension 12.

enum class TargetLevel : int { upper = 0, middle = 1, lower = 2, lost = 3 };
enum class ControlLevel : int { absent = 0, present = 1, lost = 2 };

inline constexpr int kJointDim = 12;

constexpr int joint_index(TargetLevel t, ControlLevel c) {
    return 3 * static_cast<int>(t) + static_cast<int>(c);
}

using Complex = std::complex<double>;
using JointMatrix = Eigen::Matrix<Complex, kJointDim, kJointDim>;
using JointVector = Eigen::Matrix<Complex, kJointDim, 1>;

struct degenerate_postselection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DensityState {
    JointMatrix rho = JointMatrix::Zero();

    static DensityState pure(const JointVector &psi);
    /// Pure product state. target = (upper, middle, lower), control = (absent, present).
    static DensityState product(const Eigen::Vector3cd &target, const Eigen::Vector2cd &control);
    static DensityState basis(TargetLevel t, ControlLevel c);

    double trace() const { return rho.trace().real(); }
    double population(TargetLevel t, ControlLevel c) const;
    /// Population of a target level summed over control levels.
    double target_population(TargetLevel t) const;
    /// Population of a control level summed over target levels.
    double control_population(ControlLevel c) const;
    double hermiticity_defect() const { return (rho - rho.adjoint()).cwiseAbs().maxCoeff(); }
    double min_eigenvalue() const;
};

/// Completely positive trace-preserving map given by Kraus operators.
struct KrausSet {
    std::string name;
    std::vector<JointMatrix> ops;

    /// max |sum_i K_i^dagger K_i - I| entry.
    double completeness_defect() const;
    bool is_single_unitary(double tol = kIdentityTolerance) const;
    void apply(JointMatrix &rho) const;
};

/// One segment as the ordered channel list
/// [splitter(upper, middle), absorption, control loss, splitter(middle, lower)].
///
/// Absorption damps the target's middle-branch amplitude by exp(-xi_two) when
/// the control is present (both photons are then lost together) and by
/// exp(-xi_one) when the control is absent or already lost. Control loss damps
/// |., present> into |., lost> with exponent xi_control, coherently in the target.
/// Zero-weight jump operators are omitted.
std::vector<KrausSet> build_segment_channel(const GateConfig &config);

/// Apply the segment channel sequence config.segments times.
DensityState evolve(const DensityState &rho, const GateConfig &config);

struct ConcurrenceResult {
    double concurrence = 0;
    double postselect_probability = 0;
};

/// Wootters concurrence of a normalised two-qubit density matrix.
double wootters_concurrence(const Eigen::Matrix4cd &rho);

/// Evolve, project onto target {upper, lower} x control {absent, present},
/// renormalise, and measure entanglement. The logical ordering is
/// |target, control> with upper = 0, lower = 1, absent = 0, present = 1.
/// Throws degenerate_postselection when the kept probability is below 1e-9.
ConcurrenceResult gate_concurrence(const GateConfig &config, const DensityState &input);

}  // namespace zeno::oracle

#endif
