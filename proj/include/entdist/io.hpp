// Copyright 2026 The entdist authors
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

#include <string>

#include "entdist/measures.hpp"
#include "entdist/qmat.hpp"

namespace entdist {

/// Fixed basis label carried by every matrix file.
inline constexpr const char *kMatrixBasis = "product-00-01-10-11";

/// Formats with `digits` significant digits ("%.<digits>g"). 12 digits for
/// reports and CSV cells, 17 for bit-exact matrix files.
std::string format_significant(double value, int digits);

/// Reads a matrix file: a JSON document with a "basis" field (which must
/// equal kMatrixBasis) and a "matrix" field of 4 rows x 4 entries, each
/// entry a [re, im] pair. Malformed content raises std::invalid_argument
/// naming the offending token.
ComplexMatrix read_matrix_file(const std::string &path);

/// Writes the matrix-file document for a 4x4 matrix, entries at 17
/// significant digits so a read returns bit-identical values.
void write_matrix_file(const std::string &path, const ComplexMatrix &m);

/// Lowercase classification token used by the CLI and the CSV column:
/// separable | entangled | nonphysical.
std::string classification_token(const Classification &c);

/// Header of the sample CSV; column order is fixed.
std::string sample_csv_header();

/// One CSV row; absent measures serialize as empty fields.
std::string sample_csv_row(const StandardState &s, const MeasureReport &report);

} // namespace entdist
