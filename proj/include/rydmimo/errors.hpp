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

#ifndef rydmimo_errors_H
#define rydmimo_errors_H

#include <stdexcept>
#include <string>
#include <utility>

// Invalid arguments are reported with std::invalid_argument. The types below cover the
// remaining failure classes so callers (the CLI in particular) can map them to exit codes.
namespace rydmimo
{
    // A pattern with zero radiated power cannot be normalised in the correlation integral.
    class DegeneratePatternError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Matrix factorisation failed or a correlation matrix is further from PSD than quadrature noise explains.
    class NumericalError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Green's function evaluated at coincident source and observation points.
    class SingularityError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Request that the model deliberately does not define (e.g. multi-polarisation Rydberg transmit).
    class UnsupportedError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    // Channel with zero mean power passed to a normalisation.
    class DegenerateChannelError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Sweep configuration problem; key() names the offending field.
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(std::string key, const std::string &message)
            : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
        const std::string &key() const noexcept { return key_; }

    private:
        std::string key_;
    };
}

#endif
