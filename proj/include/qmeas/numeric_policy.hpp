// Copyright 2026 The qmeas Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace qmeas {

/// Tolerances used by every validity check in the library.
///
/// `algebraic` bounds entrywise residuals of exact identities (Hermiticity,
/// completeness, idempotence, normalization). `positivity` is the slack
/// allowed below zero for eigenvalues and probabilities, and the slack used
/// when comparing the two sides of an inequality.
template <typename Scalar = double> struct NumericPolicy {
    Scalar algebraic = Scalar(1e-12);
    Scalar positivity = Scalar(1e-10);
};

} // namespace qmeas
