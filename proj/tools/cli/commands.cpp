/*
   Copyright 2026 The pfactor Authors

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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "document.hpp"
#include "pfactor/appendix.hpp"
#include "pfactor/errors.hpp"
#include "pfactor/projection.hpp"
#include "pfactor/pythagoras.hpp"
#include "pfactor/quantum.hpp"
#include "pfactor/random.hpp"
#include "report.hpp"

namespace pfactor::cli {

namespace {

struct Options {
    std::string input = "-";
    std::optional<std::string> field;
    std::uint64_t seed = 1;
    std::size_t samples = kLibrarySamples;
    std::optional<double> tol;
    std::string format = "structured";

    std::vector<std::string> names;
    std::string path = "all";

    std::string theorem;
    std::string subspace;
    std::string partition;
    std::string set;
    std::string basis;
    std::optional<std::size_t> q;
    std::vector<std::size_t> random;

    std::size_t trials = 100;
    std::size_t dims_up_to = 8;

    std::string fidelity_with;
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string field_string(Field f) { return std::string(field_name(f)); }

template <Scalar T>
std::vector<FactorPath> selected_paths(const std::string& path, const Subspace<T>& v, const Subspace<T>& w) {
    if (path == "svd") {
        return {FactorPath::SVD};
    }
    if (path == "det") {
        return {FactorPath::OrthonormalDet};
    }
    if (path == "gram") {
        return {FactorPath::GeneralBasisDet};
    }
    if (path == "blade") {
        return {v.dim() == w.dim() ? FactorPath::Blades : FactorPath::Interior};
    }
    if (path == "interior") {
        return {FactorPath::Interior};
    }
    if (path == "grassmann") {
        return {FactorPath::GrassmannAngle};
    }
    if (path == "exterior") {
        return {FactorPath::ExteriorPower};
    }
    std::vector<FactorPath> out;
    for (const FactorReport& r : factor_all_paths(v, w)) {
        out.push_back(r.path);
    }
    return out;
}

template <Scalar T>
void cmd_factor(const Document<T>& d, const Options& o, Report& r) {
    if (o.names.size() < 2) {
        throw InputError("factor needs V and at least one W");
    }
    const Subspace<T>& v = d.subspace(o.names[0]);
    const double tol = o.tol.value_or(kCrossPathTolerance);
    for (std::size_t k = 1; k < o.names.size(); ++k) {
        const std::string& wname = o.names[k];
        const Subspace<T>& w = d.subspace(wname);
        std::vector<FactorReport> reports;
        for (FactorPath p : selected_paths(o.path, v, w)) {
            reports.push_back(factor_by_path(v, w, p));
            r.value(wname, reports.back().value, std::string(path_name(p)));
        }
        if (o.path != "all") {
            continue;
        }
        for (std::size_t a = 0; a < reports.size(); ++a) {
            for (std::size_t b = a + 1; b < reports.size(); ++b) {
                const std::string pair =
                    std::string(path_name(reports[a].path)) + "~" + std::string(path_name(reports[b].path));
                r.check(wname, reports[a].value, std::abs(reports[a].value - reports[b].value), tol, pair);
            }
        }
    }
}

template <Scalar T>
void cmd_angle(const Document<T>& d, const Options& o, Report& r) {
    if (o.names.size() != 2) {
        throw InputError("angle needs exactly V and W");
    }
    const Subspace<T>& v = d.subspace(o.names[0]);
    const Subspace<T>& w = d.subspace(o.names[1]);
    r.value("grassmann-angle", grassmann_angle(v, w));
    if (v.dim() == 1 && w.dim() == 1) {
        r.value("euclidean-angle", euclidean_angle<T>(v.basis().col(0), w.basis().col(0)));
        if constexpr (is_complex_v<T>) {
            r.value("hermitian-angle", hermitian_angle<T>(v.basis().col(0), w.basis().col(0)));
        }
    }
}

template <Scalar T>
void cmd_principal(const Document<T>& d, const Options& o, Report& r) {
    if (o.names.size() != 2) {
        throw InputError("principal needs exactly V and W");
    }
    const Subspace<T>& v = d.subspace(o.names[0]);
    const Subspace<T>& w = d.subspace(o.names[1]);
    const PrincipalDecomposition<T> pd = principal_decomposition(v, w);
    for (std::size_t i = 0; i < pd.size(); ++i) {
        const std::string idx = "[" + std::to_string(i + 1) + "]";
        r.value("cos" + idx, pd.sigma[i]);
        r.value("angle" + idx, pd.theta[i]);
        r.value("factor" + idx, pd.pi_principal[i]);
    }
    const double tol = o.tol.value_or(kCrossPathTolerance);
    const double pi = projection_factor(v, w);
    r.check("factor", pi, std::abs(pi - factor_general_bases(v.basis(), w.basis())), tol, "svd~general-det");
    const ComplementFactors cf = complement_factor(v, w);
    r.value("complement", cf.principal, "principal");
    r.check("complement", cf.orthonormal_det, std::abs(cf.orthonormal_det - cf.principal), tol,
            "principal~orthonormal-det");
    r.check("complement", cf.general_det, std::abs(cf.general_det - cf.principal), tol, "principal~general-det");
    r.check("complement", cf.exterior, std::abs(cf.exterior - cf.principal), tol, "principal~exterior");
}

SumReport with_tolerance(SumReport s, const std::optional<double>& tol) {
    if (tol) {
        s.tolerance = *tol;
        s.pass = s.residual <= *tol;
    }
    return s;
}

template <Scalar T>
CoordinateFamily<T> family_of(const Document<T>& d, const Options& o, std::size_t q) {
    if (o.basis.empty()) {
        return CoordinateFamily<T>::canonical(d.ambient_dim, q);
    }
    return CoordinateFamily<T>(d.subspace(o.basis).basis(), q);
}

template <Scalar T>
OrthogonalPartition<T> partition_of(const Document<T>& d, const std::string& name) {
    const auto it = d.partitions.find(name);
    if (it == d.partitions.end()) {
        throw InputError("unknown partition '" + name + "'");
    }
    std::vector<Subspace<T>> parts;
    for (const auto& part : it->second) {
        parts.push_back(d.subspace(part));
    }
    return OrthogonalPartition<T>(std::move(parts));
}

void require_option(const std::string& value, const std::string& flag, const std::string& theorem) {
    if (value.empty()) {
        throw InputError(theorem + " needs " + flag);
    }
}

template <Scalar T>
void cmd_verify(const Document<T>& d, const Options& o, Report& r) {
    const std::string& th = o.theorem;
    if (th == "line-partition") {
        require_option(o.subspace, "--subspace", th);
        require_option(o.partition, "--partition", th);
        r.sum(th, verify_line_partition(d.subspace(o.subspace), partition_of(d, o.partition),
                                        o.tol.value_or(kLineSumTolerance)));
    } else if (th == "subspace-coords") {
        require_option(o.subspace, "--subspace", th);
        const Subspace<T>& v = d.subspace(o.subspace);
        r.sum(th, verify_subspace_coordinates(v, family_of(d, o, v.dim()), o.tol.value_or(kCoordinateSumTolerance)));
    } else if (th == "binomial") {
        require_option(o.subspace, "--subspace", th);
        if (!o.q) {
            throw InputError("binomial needs --q");
        }
        r.sum(th, verify_binomial_identity(d.subspace(o.subspace), family_of(d, o, *o.q),
                                           o.tol.value_or(kCoordinateSumTolerance)));
    } else {
        require_option(o.set, "--set", th);
        const bool exact = d.parallelotopes.count(o.set) > 0;
        if (!exact && d.sampled.count(o.set) == 0) {
            throw InputError("unknown set '" + o.set + "'");
        }
        if (!o.partition.empty()) {
            const OrthogonalPartition<T> part = partition_of(d, o.partition);
            r.sum(th, exact ? verify_measure_line(d.parallelotopes.at(o.set), part, o.tol.value_or(kLineSumTolerance))
                            : with_tolerance(verify_measure_line(d.sampled_set(o.set, o.samples, o.seed), part), o.tol));
            return;
        }
        if (exact) {
            const Parallelotope<T>& s = d.parallelotopes.at(o.set);
            const std::size_t q = o.q.value_or(Subspace<T>::span_of(s.edges).dim());
            r.sum(th, verify_measure_subspace(s, family_of(d, o, q), o.tol.value_or(kCoordinateSumTolerance)));
        } else {
            const SampledSet<T> s = d.sampled_set(o.set, o.samples, o.seed);
            const std::size_t q = o.q.value_or(s.carrier.dim());
            r.sum(th, with_tolerance(verify_measure_subspace(s, family_of(d, o, q)), o.tol));
        }
    }
}

template <Scalar T>
void cmd_verify_random(const Options& o, Report& r) {
    if (o.random.size() != 3) {
        throw InputError("--random takes N P Q");
    }
    const std::size_t n = o.random[0];
    const std::size_t p = o.random[1];
    const std::size_t q = o.random[2];
    if (n == 0 || p == 0 || p > n || q == 0 || q > n) {
        throw InputError("--random needs 1 <= P, Q <= N");
    }
    Rng rng(o.seed);
    const std::string& th = o.theorem;
    auto family = [&](std::size_t k) { return CoordinateFamily<T>(random_unitary<T>(n, rng), k); };
    if (th == "line-partition") {
        const Subspace<T> line = random_subspace<T>(n, 1, rng);
        const OrthogonalPartition<T> part = random_partition<T>(n, random_composition(n, p, rng), rng);
        r.sum(th, verify_line_partition(line, part, o.tol.value_or(kLineSumTolerance)));
    } else if (th == "subspace-coords") {
        const Subspace<T> v = random_subspace<T>(n, p, rng);
        r.sum(th, verify_subspace_coordinates(v, family(p), o.tol.value_or(kCoordinateSumTolerance)));
    } else if (th == "binomial") {
        const Subspace<T> v = random_subspace<T>(n, p, rng);
        r.sum(th, verify_binomial_identity(v, family(q), o.tol.value_or(kCoordinateSumTolerance)));
    } else {
        if (q < p) {
            throw InputError("measure needs Q >= P");
        }
        const Matrix<T> edges = random_basis<T>(n, p, rng);
        Parallelotope<T> s{edges};
        if constexpr (is_complex_v<T>) {
            s = complex_parallelotope(edges);
        }
        r.sum(th, verify_measure_subspace(s, family(q), o.tol.value_or(kCoordinateSumTolerance)));
    }
}

void cmd_appendix(const Options& o, Report& r) {
    const double tol = o.tol.value_or(kAppendixTolerance);
    auto emit = [&]<Scalar T>(const AppendixReport& rep) {
        const std::string prefix = field_string(field_of<T>) + ":";
        for (const IdentitySummary& s : rep.identities) {
            r.check(prefix + std::string(identity_name(s.id)), s.worst_residual, s.worst_residual, tol);
            r.annotate("kind", is_inequality(s.id) ? "inequality" : "equality");
            r.annotate("worst_trial", s.worst_trial);
        }
    };
    if (!o.field || *o.field == "real") {
        emit.template operator()<double>(run_appendix_suite<double>(o.trials, o.seed, o.dims_up_to, tol));
    }
    if (!o.field || *o.field == "complex") {
        emit.template operator()<Complex>(run_appendix_suite<Complex>(o.trials, o.seed, o.dims_up_to, tol));
    }
}

void quantum_report(const QuantumState& psi, const Observable& obs, const std::optional<QuantumState>& phi,
                    const Options& o, Report& r) {
    const std::vector<double> probs = born_distribution(psi, obs);
    double total = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        r.value("lambda=" + num(obs.eigenvalues()[i]), probs[i]);
        total += probs[i];
    }
    r.check("total", total, std::abs(total - 1.0), o.tol.value_or(kTotalProbabilityTolerance));

    Rng rng(o.seed);
    Complex c;
    do {
        c = rng.entry<Complex>();
    } while (std::abs(c) < 0.1);
    Vector<Complex> scaled(psi.psi().begin(), psi.psi().end());
    for (Complex& x : scaled) {
        x *= c;
    }
    const std::vector<double> again = born_distribution(QuantumState(std::move(scaled)), obs);
    double drift = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        drift = std::max(drift, std::abs(again[i] - probs[i]));
    }
    r.check("ray-invariance", drift, drift, o.tol.value_or(1e-12));
    if (phi) {
        r.value("fidelity", fidelity(psi, *phi));
        r.value("bures-angle", bures_angle(psi, *phi));
    }
}

void cmd_quantum(const Document<Complex>& d, const Options& o, Report& r) {
    if (o.names.size() != 2) {
        throw InputError("quantum needs a state and an observable");
    }
    auto state = [&](const std::string& name) {
        const auto it = d.states.find(name);
        if (it == d.states.end()) {
            throw InputError("unknown state '" + name + "'");
        }
        return QuantumState(it->second);
    };
    const auto it = d.observables.find(o.names[1]);
    if (it == d.observables.end()) {
        throw InputError("unknown observable '" + o.names[1] + "'");
    }
    std::vector<Subspace<Complex>> parts;
    for (const auto& part : it->second.parts) {
        parts.push_back(d.subspace(part));
    }
    const Observable obs(OrthogonalPartition<Complex>(std::move(parts)), it->second.eigenvalues);
    std::optional<QuantumState> phi;
    if (!o.fidelity_with.empty()) {
        phi = state(o.fidelity_with);
    }
    quantum_report(state(o.names[0]), obs, phi, o, r);
}

void cmd_quantum_random(const Options& o, Report& r) {
    if (o.random.size() != 2 || o.random[0] == 0 || o.random[1] == 0 || o.random[1] > o.random[0]) {
        throw InputError("quantum --random takes N K with 1 <= K <= N");
    }
    Rng rng(o.seed);
    const std::size_t n = o.random[0];
    const std::size_t k = o.random[1];
    QuantumState psi(random_vector<Complex>(n, rng));
    std::vector<double> eigenvalues;
    for (std::size_t i = 0; i < k; ++i) {
        eigenvalues.push_back(static_cast<double>(i + 1));
    }
    const Observable obs(random_partition<Complex>(n, random_composition(n, k, rng), rng), std::move(eigenvalues));
    quantum_report(psi, obs, std::nullopt, o, r);
}

/// Loads the input document and dispatches on its field.
template <typename F>
std::string with_document(const Options& o, std::istream& in, F&& f) {
    const AnyDocument doc = parse_document(load_json(o.input, in));
    return std::visit(
        [&](const auto& d) {
            using T = typename std::decay_t<decltype(d)>::scalar_type;
            const std::string field = field_string(field_of<T>);
            if (o.field && *o.field != field) {
                throw InputError("--field " + *o.field + " does not match the document field " + field);
            }
            f(d);
            return field;
        },
        doc);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Projection factors, principal angles and Pythagorean identities", "pfactor"};
    app.require_subcommand(1);
    app.add_option("--field", o.field, "real or complex")->check(CLI::IsMember({"real", "complex"}));
    app.add_option("--seed", o.seed, "random seed")->capture_default_str();
    app.add_option("--samples", o.samples, "Monte Carlo samples for sampled sets")
        ->capture_default_str()
        ->check(CLI::Range(kMinSamples, std::size_t{1} << 40));
    app.add_option("--tol", o.tol, "override the default tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--format", o.format, "text or structured")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "structured"}));

    auto input_option = [&](CLI::App* sub) {
        sub->add_option("-i,--input", o.input, "input document (default: standard input)");
        sub->fallthrough();
    };

    CLI::App* factor = app.add_subcommand("factor", "projection factor of V onto each W");
    factor->add_option("names", o.names, "V W [W...]")->required();
    factor->add_option("--path", o.path, "svd, det, gram, blade, interior, grassmann, exterior or all")
        ->capture_default_str()
        ->check(CLI::IsMember({"svd", "det", "gram", "blade", "interior", "grassmann", "exterior", "all"}));
    input_option(factor);

    CLI::App* angle = app.add_subcommand("angle", "Grassmann angle, and line angles for 1-dimensional V, W");
    angle->add_option("names", o.names, "V W")->required();
    input_option(angle);

    CLI::App* principal = app.add_subcommand("principal", "principal angles and factors of V and W");
    principal->add_option("names", o.names, "V W")->required();
    input_option(principal);

    CLI::App* verify = app.add_subcommand("verify", "check a Pythagorean identity");
    verify->add_option("theorem", o.theorem, "line-partition, subspace-coords, binomial or measure")
        ->required()
        ->check(CLI::IsMember({"line-partition", "subspace-coords", "binomial", "measure"}));
    verify->add_option("--subspace", o.subspace, "subspace name");
    verify->add_option("--partition", o.partition, "partition name");
    verify->add_option("--set", o.set, "set name");
    verify->add_option("--basis", o.basis, "orthogonal basis for the coordinate family (default canonical)");
    verify->add_option("--q", o.q, "coordinate subspace dimension");
    CLI::Option* verify_random = verify->add_option("--random", o.random, "N P Q: random instance instead of input")
                                     ->expected(3);
    input_option(verify);

    CLI::App* appendix = app.add_subcommand("appendix", "randomized projection-factor identity suite");
    appendix->add_option("--trials", o.trials, "trials per field")->capture_default_str();
    appendix->add_option("--dims-up-to", o.dims_up_to, "largest ambient dimension")
        ->capture_default_str()
        ->check(CLI::Range(2, 12));
    appendix->fallthrough();

    CLI::App* quantum = app.add_subcommand("quantum", "Born probabilities of a state for an observable");
    quantum->add_option("names", o.names, "STATE OBSERVABLE");
    quantum->add_option("--fidelity", o.fidelity_with, "second state for fidelity and Bures angle");
    CLI::Option* quantum_random = quantum->add_option("--random", o.random, "N K: random state and observable")
                                      ->expected(2);
    input_option(quantum);

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitInput;
    }

    const Format format = o.format == "text" ? Format::Text : Format::Structured;
    const std::vector<std::string> echoed(args.empty() ? args.begin() : args.begin() + 1, args.end());
    std::string command;
    for (CLI::App* sub : app.get_subcommands()) {
        command = sub->get_name();
    }
    try {
        Report report(command, echoed, o.seed, o.field.value_or(""));
        std::string field = o.field.value_or("");
        if (command == "factor") {
            field = with_document(o, in, [&](const auto& d) { cmd_factor(d, o, report); });
        } else if (command == "angle") {
            field = with_document(o, in, [&](const auto& d) { cmd_angle(d, o, report); });
        } else if (command == "principal") {
            field = with_document(o, in, [&](const auto& d) { cmd_principal(d, o, report); });
        } else if (command == "verify") {
            if (*verify_random) {
                field = o.field.value_or("real");
                if (field == "real") {
                    cmd_verify_random<double>(o, report);
                } else {
                    cmd_verify_random<Complex>(o, report);
                }
            } else {
                field = with_document(o, in, [&](const auto& d) { cmd_verify(d, o, report); });
            }
        } else if (command == "appendix") {
            field = o.field.value_or("real+complex");
            cmd_appendix(o, report);
        } else {
            if (o.field && *o.field != "complex") {
                throw InputError("quantum states live in complex spaces");
            }
            field = "complex";
            if (*quantum_random) {
                cmd_quantum_random(o, report);
            } else {
                with_document(o, in, [&](const auto& d) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(d)>, Document<Complex>>) {
                        cmd_quantum(d, o, report);
                    } else {
                        throw InputError("quantum needs a complex document");
                    }
                });
            }
        }
        report.set_field(field);
        out << report.render(format);
        return report.all_pass() ? kExitPass : kExitFail;
    } catch (const InputError& e) {
        err << "pfactor: " << e.what() << '\n';
        return kExitInput;
    } catch (const NumericalError& e) {
        err << "pfactor: numerical failure: " << e.what() << '\n';
        return kExitFail;
    } catch (const Error& e) {
        err << "pfactor: " << e.what() << '\n';
        return kExitInput;
    }
}

}  // namespace pfactor::cli
