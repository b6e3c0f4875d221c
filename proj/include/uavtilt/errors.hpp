// SPDX-License-Identifier: Apache-2.0
//
// uavtilt - multi-cell downlink simulator for uptilted booster sectors
// Copyright (C) 2026 The uavtilt authors
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

#ifndef UAVTILT_ERRORS_HPP
#define UAVTILT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace uavtilt
{

// Argument outside the documented domain of an operation.
class InvalidParameter : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidAngle : public InvalidParameter
{
public:
    using InvalidParameter::InvalidParameter;
};

// Degenerate link geometry (coincident transmitter and receiver).
class InvalidGeometry : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Configuration document problem; key() holds the dotted path of the offending entry.
class ConfigError : public std::runtime_error
{
public:
    ConfigError(std::string key, const std::string &what)
        : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key))
    {
    }
    const std::string &key() const noexcept { return key_; }

private:
    std::string key_;
};

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace uavtilt

#endif
