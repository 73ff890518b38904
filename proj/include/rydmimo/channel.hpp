// SPDX-License-Identifier: Apache-2.0
//
// rydmimo: channel modelling and capacity analysis for Rydberg atomic MIMO receivers
// Copyright (C) 2026 The rydmimo Authors
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

#ifndef rydmimo_channel_H
#define rydmimo_channel_H

#include <Eigen/Dense>

namespace rydmimo
{
    enum class ChannelOrigin
    {
        far_field_random,     // Kronecker sample, laid out transmit x receive (see ffchannel.hpp)
        near_field_classical, // polarisation-resolved dyadic Green's blocks, receive x transmit
        near_field_rydberg    // total-field amplitude with scalar phase, receive x transmit
    };

    struct ChannelMatrix
    {
        Eigen::MatrixXcd h;
        ChannelOrigin origin = ChannelOrigin::near_field_classical;
    };
}

#endif
