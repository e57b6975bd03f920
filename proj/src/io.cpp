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

#include "entdist/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace entdist {

namespace {

std::string fmt_entry(double value) { return format_significant(value, 17); }

} // namespace

std::string format_significant(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
    return buffer;
}

ComplexMatrix read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("matrix file: cannot open '" + path + "'");

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &err) {
        throw std::invalid_argument(std::string("matrix file: ") + err.what());
    }

    if (!doc.is_object()) throw std::invalid_argument("matrix file: top level is not an object");
    if (!doc.contains("basis") || !doc["basis"].is_string()) {
        throw std::invalid_argument("matrix file: missing string field 'basis'");
    }
    if (doc["basis"].get<std::string>() != kMatrixBasis) {
        throw std::invalid_argument("matrix file: 'basis' must be '" + std::string(kMatrixBasis) +
                                    "'");
    }
    if (!doc.contains("matrix") || !doc["matrix"].is_array() || doc["matrix"].size() != 4) {
        throw std::invalid_argument("matrix file: 'matrix' must be an array of 4 rows");
    }

    ComplexMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto &row = doc["matrix"][i];
        if (!row.is_array() || row.size() != 4) {
            throw std::invalid_argument("matrix file: row " + std::to_string(i) +
                                        " must hold 4 entries");
        }
        for (std::size_t j = 0; j < 4; ++j) {
            const auto &entry = row[j];
            const std::string where =
                "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number()) {
                throw std::invalid_argument("matrix file: " + where +
                                            " must be a [re, im] number pair");
            }
            m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    if (!m.all_finite()) throw std::invalid_argument("matrix file: non-finite entry");
    return m;
}

void write_matrix_file(const std::string &path, const ComplexMatrix &m) {
    if (m.rows() != 4 || m.cols() != 4) {
        throw std::invalid_argument("write_matrix_file: matrix must be 4x4");
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_matrix_file: cannot open '" + path + "'");

    // Hand-formatted so entries carry exactly 17 significant digits.
    out << "{\n  \"basis\": \"" << kMatrixBasis << "\",\n  \"matrix\": [\n";
    for (std::size_t i = 0; i < 4; ++i) {
        out << "    [";
        for (std::size_t j = 0; j < 4; ++j) {
            out << "[" << fmt_entry(m(i, j).real()) << ", " << fmt_entry(m(i, j).imag()) << "]";
            if (j + 1 < 4) out << ", ";
        }
        out << "]" << (i + 1 < 4 ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    if (!out) throw std::runtime_error("write_matrix_file: write failed for '" + path + "'");
}

std::string classification_token(const Classification &c) {
    switch (c.tag) {
        case StateClass::Separable:
            return "separable";
        case StateClass::Entangled:
            return "entangled";
        case StateClass::NonPhysical:
        default:
            return "nonphysical";
    }
}

std::string sample_csv_header() {
    return "r_x,r_y,r_z,classification,concurrence,negativity,euclid_distance,hs_distance";
}

std::string sample_csv_row(const StandardState &s, const MeasureReport &report) {
    const auto cell = [](const std::optional<double> &value) {
        return value ? format_significant(*value, 12) : std::string();
    };
    std::ostringstream row;
    row << format_significant(s.rx, 12) << ',' << format_significant(s.ry, 12) << ','
        << format_significant(s.rz, 12) << ',' << classification_token(report.classification)
        << ',' << cell(report.concurrence) << ',' << cell(report.negativity) << ','
        << cell(report.euclidean_distance) << ',' << cell(report.hs_distance);
    return row.str();
}

} // namespace entdist
