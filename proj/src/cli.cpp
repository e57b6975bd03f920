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

#include "entdist/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "entdist/geometry.hpp"
#include "entdist/io.hpp"
#include "entdist/measures.hpp"
#include "entdist/qmat.hpp"
#include "entdist/states.hpp"
#include "entdist/verify.hpp"

namespace entdist::cli {

namespace {

constexpr double kFileStateTol = 1e-8;
constexpr double kStandardFormTol = 1e-8;
constexpr double kFilterLawTol = 1e-8;

std::string fmt(double value) { return format_significant(value, 12); }

double parse_real_token(const std::string &token, const char *what) {
    const char *begin = token.c_str();
    char *end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(value)) {
        throw std::invalid_argument(std::string(what) + ": invalid number token '" + token + "'");
    }
    return value;
}

StandardState parse_triple(const std::string &text) {
    std::array<double, 3> coords{};
    std::size_t start = 0;
    for (int k = 0; k < 3; ++k) {
        const std::size_t comma = text.find(',', start);
        const bool last = k == 2;
        if ((comma == std::string::npos) != last) {
            throw std::invalid_argument("--r: expected three comma-separated coordinates, got '" +
                                        text + "'");
        }
        const std::string token =
            last ? text.substr(start) : text.substr(start, comma - start);
        coords[k] = parse_real_token(token, "--r");
        start = comma + 1;
    }
    return {coords[0], coords[1], coords[2]};
}

Complex parse_complex_entry(const std::string &token, const char *what) {
    const std::size_t comma = token.find(',');
    if (comma == std::string::npos) return {parse_real_token(token, what), 0.0};
    const double re = parse_real_token(token.substr(0, comma), what);
    const double im = parse_real_token(token.substr(comma + 1), what);
    return {re, im};
}

ComplexMatrix parse_filter_factor(const std::vector<std::string> &entries, const char *what) {
    ComplexMatrix m(2, 2);
    for (std::size_t k = 0; k < 4; ++k) m(k / 2, k % 2) = parse_complex_entry(entries[k], what);
    return m;
}

/// Applies the matrix-file state gate (Hermitian and unit trace within 1e-8)
/// and canonicalizes: exact symmetrization plus trace rescale, so the result
/// satisfies the stricter DensityMatrix invariants.
DensityMatrix load_state_file(const std::string &path) {
    ComplexMatrix m = read_matrix_file(path);
    if (m.hermiticity_defect() > kFileStateTol) {
        throw std::invalid_argument("matrix file: state is not Hermitian within 1e-8");
    }
    const Complex tr = m.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kFileStateTol) {
        throw std::invalid_argument("matrix file: state trace is not 1 within 1e-8");
    }
    m *= Complex(1.0, 0.0) / tr;
    for (std::size_t i = 0; i < 4; ++i) {
        m(i, i) = Complex(m(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < 4; ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }
    return DensityMatrix(m);
}

void print_triple_line(std::ostream &out, const char *label, double x, double y, double z) {
    out << label << "(" << fmt(x) << ", " << fmt(y) << ", " << fmt(z) << ")\n";
}

int print_standard_report(std::ostream &out, const StandardState &s) {
    const MeasureReport report = measure(s);
    out << "path: standard\n";
    out << "classification: " << classification_token(report.classification) << "\n";
    if (report.classification.tag == StateClass::NonPhysical) return kExitNonPhysical;

    if (report.classification.corner) {
        const auto &v = report.classification.corner->v;
        print_triple_line(out, "corner: ", v[0], v[1], v[2]);
    }
    out << "concurrence: " << fmt(*report.concurrence) << "\n";
    out << "negativity: " << fmt(*report.negativity) << "\n";
    out << "euclid_distance: " << fmt(*report.euclidean_distance) << "\n";
    out << "hs_distance: " << fmt(*report.hs_distance) << "\n";
    return kExitOk;
}

int run_measure(const std::string &triple_arg, const std::string &matrix_arg, std::ostream &out) {
    if (!triple_arg.empty()) {
        const StandardState s = parse_triple(triple_arg);
        print_triple_line(out, "r = ", s.rx, s.ry, s.rz);
        return print_standard_report(out, s);
    }

    const DensityMatrix d = load_state_file(matrix_arg);
    out << "matrix: " << matrix_arg << "\n";

    if (const auto s = is_standard_form(d, kStandardFormTol)) {
        return print_standard_report(out, *s);
    }

    out << "path: general\n";
    const HermitianEig eig = hermitian_eig(d.matrix());
    if (eig.eigenvalues.back() < -kBoundaryTol) {
        out << "classification: nonphysical\n";
        return kExitNonPhysical;
    }
    out << "concurrence: " << fmt(concurrence_general(d)) << "\n";
    out << "negativity: " << fmt(negativity_general(d)) << "\n";
    return kExitOk;
}

int run_sample(std::size_t n, std::uint64_t seed, const std::string &region_name,
               const std::string &out_path) {
    static const std::map<std::string, Region> regions = {
        {"cube", Region::Cube},
        {"physical", Region::Physical},
        {"entangled", Region::Entangled},
        {"separable", Region::Separable},
    };
    const auto found = regions.find(region_name);
    if (found == regions.end()) {
        throw std::invalid_argument("--region: unknown region '" + region_name + "'");
    }

    const std::vector<StandardState> states = sample_states(n, seed, found->second);

    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("sample: cannot open output file '" + out_path + "'");
    file << sample_csv_header() << "\n";
    for (const StandardState &s : states) file << sample_csv_row(s, measure(s)) << "\n";
    if (!file) throw std::runtime_error("sample: write failed for '" + out_path + "'");
    return kExitOk;
}

int run_verify(std::size_t n, std::uint64_t seed, bool inject_fault, std::ostream &out) {
    VerifyOptions options;
    options.samples = n;
    options.seed = seed;
    options.inject_distance_sign_fault = inject_fault;

    const std::vector<IdentityCheck> checks = run_verification(options);
    out << "verify: n=" << n << " seed=" << seed << "\n";
    std::vector<std::string> failed;
    for (const IdentityCheck &check : checks) {
        out << "  " << check.name << ": max deviation " << format_significant(check.max_deviation, 6)
            << " (tol " << format_significant(check.tolerance, 6) << ") "
            << (check.pass ? "PASS" : "FAIL") << "\n";
        if (!check.pass) failed.push_back(check.name);
    }
    if (failed.empty()) {
        out << "verify: all identities hold\n";
        return kExitOk;
    }
    out << "verify: FAILED";
    for (const std::string &name : failed) out << " " << name;
    out << "\n";
    return kExitVerificationFailure;
}

int run_filter(const std::string &matrix_arg, const std::vector<std::string> &a_entries,
               const std::vector<std::string> &b_entries, std::ostream &out) {
    const DensityMatrix d = load_state_file(matrix_arg);
    const ComplexMatrix a = parse_filter_factor(a_entries, "--a");
    const ComplexMatrix b = parse_filter_factor(b_entries, "--b");

    const HermitianEig eig = hermitian_eig(d.matrix());
    if (eig.eigenvalues.back() < -kBoundaryTol) {
        throw std::domain_error("filter: state is not physical");
    }

    FilterLawResult law;
    try {
        law = filter_concurrence_law(d, LocalFilter(a, b));
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("filter not invertible");
    } catch (const std::domain_error &e) {
        // With physicality established above, the only domain failure left
        // is an annihilating filter, a precondition violation.
        throw std::invalid_argument(e.what());
    }

    const double delta = std::abs(law.predicted - law.actual);
    out << "concurrence: " << fmt(law.input_concurrence) << "\n";
    out << "predicted_concurrence: " << fmt(law.predicted) << "\n";
    out << "actual_concurrence: " << fmt(law.actual) << "\n";
    out << "abs_delta: " << fmt(delta) << "\n";
    if (law.predicted_exceeds_one) {
        out << "note: predicted value exceeds 1; reported unclipped\n";
    }
    return delta <= kFilterLawTol ? kExitOk : kExitVerificationFailure;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Two-qubit entanglement measures and separability geometry"};
    app.name("entdist");
    app.require_subcommand(1);

    std::string triple_arg;
    std::string matrix_arg;
    CLI::App *measure_cmd =
        app.add_subcommand("measure", "Measure one state given as a triple or a matrix file");
    CLI::Option *opt_r =
        measure_cmd->add_option("--r", triple_arg, "Standard-form point r_x,r_y,r_z");
    CLI::Option *opt_matrix =
        measure_cmd->add_option("--matrix", matrix_arg, "Path to a matrix file");
    opt_r->excludes(opt_matrix);
    opt_matrix->excludes(opt_r);

    std::size_t sample_n = 0;
    std::uint64_t sample_seed = 0;
    std::string region_name;
    std::string out_path;
    CLI::App *sample_cmd =
        app.add_subcommand("sample", "Sample a region and write measures as CSV");
    sample_cmd->add_option("--n", sample_n, "Number of samples")->required()->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", sample_seed, "Sampler seed")->required();
    sample_cmd->add_option("--region", region_name, "cube | physical | entangled | separable")
        ->required();
    sample_cmd->add_option("--out", out_path, "Output CSV path")->required();

    std::size_t verify_n = 10000;
    std::uint64_t verify_seed = 1;
    bool inject_fault = false;
    CLI::App *verify_cmd =
        app.add_subcommand("verify", "Check the distance/measure identities on sampled states");
    verify_cmd->add_option("--n", verify_n, "Samples per identity")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify_seed, "Sampler seed");
    verify_cmd->add_flag("--inject-sign-fault", inject_fault)->group("");

    std::string filter_matrix_arg;
    std::vector<std::string> a_entries;
    std::vector<std::string> b_entries;
    CLI::App *filter_cmd = app.add_subcommand(
        "filter", "Compare predicted and recomputed concurrence under a local filter");
    filter_cmd->add_option("--matrix", filter_matrix_arg, "Path to a matrix file")->required();
    filter_cmd
        ->add_option("--a", a_entries,
                     "First factor, 4 row-major entries, each 're' or 're,im'")
        ->required()
        ->expected(4);
    filter_cmd
        ->add_option("--b", b_entries,
                     "Second factor, 4 row-major entries, each 're' or 're,im'")
        ->required()
        ->expected(4);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        if (app.got_subcommand(measure_cmd)) {
            if (triple_arg.empty() && matrix_arg.empty()) {
                err << "measure: exactly one of --r or --matrix is required\n";
                return kExitInputError;
            }
            return run_measure(triple_arg, matrix_arg, out);
        }
        if (app.got_subcommand(sample_cmd)) {
            return run_sample(sample_n, sample_seed, region_name, out_path);
        }
        if (app.got_subcommand(verify_cmd)) {
            return run_verify(verify_n, verify_seed, inject_fault, out);
        }
        if (app.got_subcommand(filter_cmd)) {
            return run_filter(filter_matrix_arg, a_entries, b_entries, out);
        }
    } catch (const std::invalid_argument &e) {
        err << "entdist: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error &e) {
        err << "entdist: " << e.what() << "\n";
        return kExitNonPhysical;
    } catch (const std::exception &e) {
        err << "entdist: " << e.what() << "\n";
        return kExitInputError;
    }
    err << "entdist: no subcommand given\n";
    return kExitInputError;
}

} // namespace entdist::cli
