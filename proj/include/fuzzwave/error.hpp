/* Copyright 2026 The fuzzwave Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef FUZZWAVE_ERROR_HPP
#define FUZZWAVE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzwave {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value lies outside the domain of an operation (e.g. log of a non-positive number).
class domain_error : public error {
public:
    domain_error(const std::string& what, std::size_t index)
        : error(what), index_(index) {}

    /// 1-based position of the offending element.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class insufficient_data_error : public error {
public:
    using error::error;
};

/// Operands have incompatible lengths.
class shape_error : public error {
public:
    using error::error;
};

class parameter_error : public error {
public:
    using error::error;
};

/// Requested decomposition depth is incompatible with the series length.
class level_error : public error {
public:
    using error::error;
};

/// Coefficient pyramid is malformed.
class structure_error : public error {
public:
    using error::error;
};

class solver_error : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

/// Unparsable input; carries the 1-based row of the file.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t row)
        : error(what), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

} // namespace fuzzwave

#endif // FUZZWAVE_ERROR_HPP
