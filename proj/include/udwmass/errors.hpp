// Copyright 2026 The udwmass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace udwmass {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside the physical range (negative mass, c <= 0, ...).
class ParameterError : public Error
{
public:
  using Error::Error;
};

/// A square-root argument of a template or closed form is negative.
class DomainError : public Error
{
public:
  using Error::Error;
};

/// Absorption closed form evaluated at or past 2E = M c^2.
class AsymptoteError : public Error
{
public:
  using Error::Error;
};

class InvalidConvention : public Error
{
public:
  using Error::Error;
};

class QuadratureFailure : public Error
{
public:
  using Error::Error;
};

class NoSignChange : public Error
{
public:
  using Error::Error;
};

class UnstableEstimate : public Error
{
public:
  using Error::Error;
};

/// Energy-conserving root where |dDelta/dk| vanishes.
class GrazingRoot : public Error
{
public:
  using Error::Error;
};

/// k grid too coarse to resolve the sinc^2 kernel.
class ResolutionError : public Error
{
public:
  using Error::Error;
};

} // namespace udwmass
