/*
   Copyright 2026 The cyclobmw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file errors.hpp
 * @brief Error kinds raised by the library.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace cyclobmw {

enum class ErrorKind {
    NotAUnit,
    MissingValue,
    NotSquare,
    IndexOutOfRange,
    DegenerateParameters,
    NotAMatching,
    Mismatch,
    TooLarge,
    WrongEnv,
    Parse
};

inline const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::MissingValue: return "MissingValue";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DegenerateParameters: return "DegenerateParameters";
        case ErrorKind::NotAMatching: return "NotAMatching";
        case ErrorKind::Mismatch: return "Mismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::WrongEnv: return "WrongEnv";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cyclobmw
