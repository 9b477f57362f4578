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

#include "zeno/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zeno::oracle {

namespace {

constexpr TargetLevel kTargets[] = {TargetLevel::upper, TargetLevel::middle, TargetLevel::lower, TargetLevel::lost};
constexpr ControlLevel kControls[] = {ControlLevel::absent, ControlLevel::present, ControlLevel::lost};

/// Real rotation mixing target levels a and b, identity on every other level.
KrausSet splitter(std::string name, TargetLevel a, TargetLevel b, double epsilon) {
    const double c = std::cos(epsilon);
    const double s = std::sin(epsilon);
    JointMatrix u = JointMatrix::Identity();
    for (ControlLevel k : kControls) {
        const int ia = joint_index(a, k);
        const int ib = joint_index(b, k);
        u(ia, ia) = c;
        u(ia, ib) = -s;
        u(ib, ia) = s;
        u(ib, ib) = c;
    }
    return {std::move(name), {u}};
}

KrausSet absorption(double xi_one, double xi_two) {
    const double keep_one = std::exp(-xi_one);
    const double keep_two = std::exp(-xi_two);
    const double jump_one = std::sqrt(-std::expm1(-2 * xi_one));
    const double jump_two = std::sqrt(-std::expm1(-2 * xi_two));

    JointMatrix keep = JointMatrix::Identity();
    keep(joint_index(TargetLevel::middle, ControlLevel::absent), joint_index(TargetLevel::middle, ControlLevel::absent)) =
        keep_one;
    keep(joint_index(TargetLevel::middle, ControlLevel::present), joint_index(TargetLevel::middle, ControlLevel::present)) =
        keep_two;
    keep(joint_index(TargetLevel::middle, ControlLevel::lost), joint_index(TargetLevel::middle, ControlLevel::lost)) =
        keep_one;

    KrausSet set{"absorption", {keep}};
    auto add_jump = [&](double weight, ControlLevel from, ControlLevel to) {
        if (weight == 0) {
            return;
        }
        JointMatrix k = JointMatrix::Zero();
        k(joint_index(TargetLevel::lost, to), joint_index(TargetLevel::middle, from)) = weight;
        set.ops.push_back(k);
    };
    add_jump(jump_one, ControlLevel::absent, ControlLevel::absent);
    add_jump(jump_two, ControlLevel::present, ControlLevel::lost);
    add_jump(jump_one, ControlLevel::lost, ControlLevel::lost);
    return set;
}

KrausSet control_loss(double xi_control) {
    const double keep = std::exp(-xi_control);
    const double jump = std::sqrt(-std::expm1(-2 * xi_control));
    JointMatrix k0 = JointMatrix::Identity();
    JointMatrix k1 = JointMatrix::Zero();
    for (TargetLevel t : kTargets) {
        const int present = joint_index(t, ControlLevel::present);
        k0(present, present) = keep;
        k1(joint_index(t, ControlLevel::lost), present) = jump;
    }
    KrausSet set{"control_loss", {k0}};
    if (jump != 0) {
        set.ops.push_back(k1);
    }
    return set;
}

}  // namespace

DensityState DensityState::pure(const JointVector &psi) {
    return {psi * psi.adjoint()};
}

DensityState DensityState::product(const Eigen::Vector3cd &target, const Eigen::Vector2cd &control) {
    JointVector psi = JointVector::Zero();
    for (int t = 0; t < 3; ++t) {
        for (int c = 0; c < 2; ++c) {
            psi[3 * t + c] = target[t] * control[c];
        }
    }
    return pure(psi);
}

DensityState DensityState::basis(TargetLevel t, ControlLevel c) {
    DensityState s;
    s.rho(joint_index(t, c), joint_index(t, c)) = 1;
    return s;
}

double DensityState::population(TargetLevel t, ControlLevel c) const {
    const int i = joint_index(t, c);
    return rho(i, i).real();
}

double DensityState::target_population(TargetLevel t) const {
    double sum = 0;
    for (ControlLevel c : kControls) {
        sum += population(t, c);
    }
    return sum;
}

double DensityState::control_population(ControlLevel c) const {
    double sum = 0;
    for (TargetLevel t : kTargets) {
        sum += population(t, c);
    }
    return sum;
}

double DensityState::min_eigenvalue() const {
    const JointMatrix h = (rho + rho.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<JointMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double KrausSet::completeness_defect() const {
    JointMatrix sum = JointMatrix::Zero();
    for (const auto &k : ops) {
        sum += k.adjoint() * k;
    }
    return (sum - JointMatrix::Identity()).cwiseAbs().maxCoeff();
}

bool KrausSet::is_single_unitary(double tol) const {
    if (ops.size() != 1) {
        return false;
    }
    return (ops[0].adjoint() * ops[0] - JointMatrix::Identity()).cwiseAbs().maxCoeff() <= tol;
}

void KrausSet::apply(JointMatrix &rho) const {
    JointMatrix out = JointMatrix::Zero();
    for (const auto &k : ops) {
        out.noalias() += k * rho * k.adjoint();
    }
    rho = out;
}

std::vector<KrausSet> build_segment_channel(const GateConfig &config) {
    config.validate();
    std::vector<KrausSet> channel;
    channel.push_back(splitter("splitter_upper_middle", TargetLevel::upper, TargetLevel::middle, config.epsilon));
    channel.push_back(absorption(config.xi_one, config.xi_two));
    channel.push_back(control_loss(config.xi_control));
    channel.push_back(splitter("splitter_middle_lower", TargetLevel::middle, TargetLevel::lower, config.epsilon));
    return channel;
}

DensityState evolve(const DensityState &rho, const GateConfig &config) {
    const auto channel = build_segment_channel(config);
    DensityState out = rho;
    for (int n = 0; n < config.segments; ++n) {
        for (const auto &k : channel) {
            k.apply(out.rho);
        }
    }
    return out;
}

double wootters_concurrence(const Eigen::Matrix4cd &rho) {
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    // sigma_y (x) sigma_y in the |00>, |01>, |10>, |11> basis.
    yy(0, 3) = -1;
    yy(1, 2) = 1;
    yy(2, 1) = 1;
    yy(3, 0) = -1;
    const Eigen::Matrix4cd flipped = yy * rho.conjugate() * yy;

    const Eigen::Matrix4cd h = (rho + rho.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> root_solver(h);
    Eigen::Vector4d w = root_solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::Matrix4cd sqrt_rho =
        root_solver.eigenvectors() * w.cast<Complex>().asDiagonal() * root_solver.eigenvectors().adjoint();
    const Eigen::Matrix4cd r = sqrt_rho * flipped * sqrt_rho;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> r_solver((r + r.adjoint()) / 2.0, Eigen::EigenvaluesOnly);

    // Eigenvalues below this floor are rounding noise; their square roots
    // would otherwise leak ~1e-8 into the result.
    const double floor = 64 * std::numeric_limits<double>::epsilon() * std::max(1.0, h.trace().real());
    std::array<double, 4> lambda{};
    for (int i = 0; i < 4; ++i) {
        const double mu = r_solver.eigenvalues()[i];
        lambda[i] = mu > floor ? std::sqrt(mu) : 0.0;
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

ConcurrenceResult gate_concurrence(const GateConfig &config, const DensityState &input) {
    for (int i = 0; i < kJointDim; ++i) {
        const int t = i / 3;
        const int c = i % 3;
        const bool logical = (t == 0 || t == 2) && (c == 0 || c == 1);
        if (!logical && std::abs(input.rho(i, i)) > kIdentityTolerance) {
            throw invalid_parameter("gate_concurrence input must be supported on target {upper, lower} x control {absent, present}");
        }
    }
    const DensityState out = evolve(input, config);
    const int logical[4] = {
        joint_index(TargetLevel::upper, ControlLevel::absent),
        joint_index(TargetLevel::upper, ControlLevel::present),
        joint_index(TargetLevel::lower, ControlLevel::absent),
        joint_index(TargetLevel::lower, ControlLevel::present),
    };
    Eigen::Matrix4cd kept;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            kept(a, b) = out.rho(logical[a], logical[b]);
        }
    }
    const double p = kept.trace().real();
    if (!(p >= 1e-9)) {
        throw degenerate_postselection("post-selection probability " + std::to_string(p) + " is below 1e-9");
    }
    return {wootters_concurrence(kept / p), p};
}

}  // namespace zeno::oracle
