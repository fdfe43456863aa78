// SPDX-License-Identifier: Apache-2.0
//
// rydradar - Rydberg atomic receiver radar simulation toolkit
// Copyright (C) 2026 The rydradar Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace rydradar
{
    /// Argument outside the domain of a physical formula.
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    /// Inputs are valid numbers but break an approximation the model relies on.
    class ModelValidityError : public DomainError
    {
    public:
        using DomainError::DomainError;
    };

    /// Estimator was handed a record with no usable signal energy.
    class NoSignalError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Configuration parse or validation failure. line() is 0 when the problem
    /// is not tied to a specific line (e.g. a cross-field check).
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(std::string field, std::size_t line, const std::string &message)
            : std::runtime_error(format(field, line, message)), field_(std::move(field)), message_(message), line_(line)
        {
        }

        const std::string &field() const noexcept { return field_; }
        const std::string &message() const noexcept { return message_; }
        std::size_t line() const noexcept { return line_; }

    private:
        static std::string format(const std::string &field, std::size_t line, const std::string &message)
        {
            std::string out = line > 0 ? "line " + std::to_string(line) + ": " : std::string{};
            if (!field.empty())
                out += field + ": ";
            return out + message;
        }

        std::string field_;
        std::string message_;
        std::size_t line_;
    };

    namespace detail
    {
        inline void require(bool condition, const char *message)
        {
            if (!condition)
                throw DomainError(message);
        }
    } // namespace detail

} // namespace rydradar
