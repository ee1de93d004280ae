// Copyright 2026 The Isogenium Authors.
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

#ifndef ISOGENIUM_ERRORS_HPP_
#define ISOGENIUM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace isogenium {

// Base for every library error. Subclasses exist so callers can tell
// precondition failures apart from broken invariants.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ISOGENIUM_DEFINE_ERROR(Name)     \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

ISOGENIUM_DEFINE_ERROR(InvalidPrime);
ISOGENIUM_DEFINE_ERROR(InvalidDegree);
ISOGENIUM_DEFINE_ERROR(ZeroPolynomial);
ISOGENIUM_DEFINE_ERROR(NotInvertible);
ISOGENIUM_DEFINE_ERROR(UnknownDiscriminant);
ISOGENIUM_DEFINE_ERROR(InvalidDiscriminant);
ISOGENIUM_DEFINE_ERROR(NoStartFound);
ISOGENIUM_DEFINE_ERROR(OracleTooLarge);
ISOGENIUM_DEFINE_ERROR(NotSupersingular);
ISOGENIUM_DEFINE_ERROR(DifferentJInvariants);
ISOGENIUM_DEFINE_ERROR(KernelNotOnCurve);
ISOGENIUM_DEFINE_ERROR(TwistIdentificationFailure);
ISOGENIUM_DEFINE_ERROR(ClassificationIncomplete);
ISOGENIUM_DEFINE_ERROR(Disconnected);
ISOGENIUM_DEFINE_ERROR(SingleComponent);
ISOGENIUM_DEFINE_ERROR(NoConjugatePairs);
ISOGENIUM_DEFINE_ERROR(ConfigError);

// Raised when a computed object violates a structural invariant, for
// example a vertex whose out-degree is not ell + 1.
ISOGENIUM_DEFINE_ERROR(InvariantViolation);

#undef ISOGENIUM_DEFINE_ERROR

}  // namespace isogenium

#endif  // ISOGENIUM_ERRORS_HPP_
