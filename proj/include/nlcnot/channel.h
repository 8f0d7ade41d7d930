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

#ifndef NLCNOT_CHANNEL_H
#define NLCNOT_CHANNEL_H

#include "nlcnot/state_vector.h"

namespace nlc {

/// Fixed qubit roster of the nonlocal C-NOT: A and A1 sit with party A,
/// B, B1 and the corrector ancilla B2 with party B.
namespace qubits {
inline const QubitLabel A{"A"};
inline const QubitLabel A1{"A1"};
inline const QubitLabel B{"B"};
inline const QubitLabel B1{"B1"};
inline const QubitLabel B2{"B2"};
}  // namespace qubits

/// Schmidt pair of the shared e-bit alpha|00> + beta|11>, with
/// alpha >= beta > 0 and cos(theta) = beta / alpha.
class ChannelSpec {
   public:
    /// Tolerance within which alpha == beta is treated as a perfect channel.
    static constexpr double kPerfectTol = 1e-12;

    /// beta = sqrt(1 - alpha^2). Throws InvalidChannel unless
    /// 1/sqrt(2) <= alpha < 1 (lower end within kPerfectTol).
    static ChannelSpec from_alpha(double alpha);
    /// Normalizes (alpha, beta). Throws InvalidChannel unless alpha >= beta > 0.
    static ChannelSpec from_pair(double alpha, double beta);
    static ChannelSpec perfect();

    double alpha() const noexcept {
        return alpha_;
    }
    double beta() const noexcept {
        return beta_;
    }
    double theta() const noexcept {
        return theta_;
    }
    bool is_perfect() const noexcept;

   private:
    ChannelSpec(double alpha, double beta);

    double alpha_;
    double beta_;
    double theta_;
};

/// alpha|00> + beta|11> on (A1, B1).
StateVector prepare_channel(const ChannelSpec &spec);

}  // namespace nlc

#endif
