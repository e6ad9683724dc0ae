/*
   Copyright 2026 The mqg Authors

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

#ifndef MQG_ERROR_HPP
#define MQG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mqg {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class InvalidConductor : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    using Error::Error;
};

/// Raised when an exact computation would exceed a configured size bound.
class ResourceError : public Error {
   public:
    using Error::Error;
};

/// Illegal construction parameters (n, s, q, d, indices).
class ParameterError : public Error {
   public:
    using Error::Error;
};

/// An algebraic structure failed to close up or an equation had no unique solution.
class StructuralError : public Error {
   public:
    using Error::Error;
};

class NotAComodule : public Error {
   public:
    using Error::Error;
};

/// Malformed textual or JSON input.
class FormatError : public Error {
   public:
    using Error::Error;
};

}  // namespace mqg

#endif  // MQG_ERROR_HPP
