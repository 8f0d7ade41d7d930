// Copyright 2026 The nlcnot Authors
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

#include "nlcnot/channel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlcnot/error.h"

namespace nlc {

ChannelSpec::ChannelSpec(double alpha, double beta) : alpha_(alpha), beta_(beta), theta_(0) {
    theta_ = std::acos(std::min(1.0, beta_ / alpha_));
}

ChannelSpec ChannelSpec::from_pair(double alpha, double beta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !(alpha > 0) || !(beta > 0)) {
        throw Error(ErrorCode::InvalidChannel, "channel amplitudes must be finite and positive");
    }
    double n = std::hypot(alpha, beta);
    alpha /= n;
    beta /= n;
    if (alpha < beta - kPerfectTol) {
        throw Error(
            ErrorCode::InvalidChannel,
            "channel requires alpha >= beta (got alpha=" + std::to_string(alpha) + ", beta=" + std::to_string(beta) +
                ")");
    }
    if (std::abs(alpha - beta) <= kPerfectTol) {
        return perfect();
    }
    return ChannelSpec(alpha, beta);
}

ChannelSpec ChannelSpec::from_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha >= 1 || alpha < M_SQRT1_2 - kPerfectTol) {
        throw Error(ErrorCode::InvalidChannel, "alpha must lie in [1/sqrt(2), 1), got " + std::to_string(alpha));
    }
    if (alpha <= M_SQRT1_2 + kPerfectTol) {
        return perfect();
    }
    return ChannelSpec(alpha, std::sqrt((1 - alpha) * (1 + alpha)));
}

ChannelSpec ChannelSpec::perfect() {
    return ChannelSpec(M_SQRT1_2, M_SQRT1_2);
}

bool ChannelSpec::is_perfect() const noexcept {
    return std::abs(alpha_ - beta_) <= kPerfectTol;
}

StateVector prepare_channel(const ChannelSpec &spec) {
    return StateVector({spec.alpha(), 0, 0, spec.beta()}, {qubits::A1, qubits::B1});
}

}  // namespace nlc
