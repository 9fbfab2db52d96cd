// SPDX-License-Identifier: Apache-2.0
//
// mmwsim - statistical mmWave multiuser MIMO channel simulator
// Copyright (C) 2026 The mmwsim authors
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

#ifndef MMWSIM_ERRORS_HPP
#define MMWSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mmwsim
{

// Invalid argument to a sampler or closed-form model.
class ParameterError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Invalid experiment configuration (bad file, inconsistent scene, unknown preset).
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Geometry or matrix input for which the requested quantity is undefined.
class DegenerateError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Failures while writing or reading result files.
class OutputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace mmwsim

#endif
