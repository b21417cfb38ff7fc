// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rok/json_io.hpp"
#include "rok/kruglov.hpp"
#include "rok/tensor.hpp"
#include "rok/verify.hpp"

namespace py = pybind11;

namespace {

using PairList = std::vector<std::pair<double, double>>;

rok::DecreasingStep step_from_pairs(const PairList& ps) {
    std::vector<rok::Plateau> v;
    for (const auto& [l, val] : ps) v.push_back({l, val});
    return rok::DecreasingStep::canonical(std::move(v));
}

PairList step_to_pairs(const rok::DecreasingStep& f) {
    PairList out;
    for (const rok::Plateau& p : f.plateaus()) out.emplace_back(p.length, p.value);
    return out;
}

rok::DiscreteDistribution law_from_pairs(const PairList& atoms) {
    std::vector<rok::Atom> v;
    for (const auto& [val, m] : atoms) v.push_back({val, m});
    return rok::DiscreteDistribution::from_atoms(std::move(v));
}

PairList law_to_pairs(const rok::DiscreteDistribution& d) {
    PairList out;
    for (const rok::Atom& a : d.atoms()) out.emplace_back(a.value, a.mass);
    return out;
}

rok::OrliczFunction orlicz_from_spec(const std::string& spec) {
    return rok::orlicz_from_json(rok::json::parse(spec));
}

py::object json_to_py(const rok::json& j) {
    namespace nl = nlohmann;
    switch (j.type()) {
        case nl::detail::value_t::object: {
            py::dict d;
            for (const auto& [k, v] : j.items()) d[py::str(k)] = json_to_py(v);
            return d;
        }
        case nl::detail::value_t::array: {
            py::list l;
            for (const auto& v : j) l.append(json_to_py(v));
            return l;
        }
        case nl::detail::value_t::string:
            return py::str(j.get<std::string>());
        case nl::detail::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nl::detail::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case nl::detail::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case nl::detail::value_t::number_float:
            return py::float_(j.get<double>());
        default:
            return py::none();
    }
}

py::object report_to_py(const rok::VerificationReport& r) { return json_to_py(rok::to_json(r)); }

rok::Matrix matrix_from_rows(const std::vector<std::vector<std::complex<double>>>& rows) {
    const int n = static_cast<int>(rows.size());
    rok::Matrix m(n);
    for (int i = 0; i < n; ++i) {
        rok::require(static_cast<int>(rows[static_cast<std::size_t>(i)].size()) == n,
                     "matrix must be square");
        for (int j = 0; j < n; ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_rok, m) {
    m.doc() = "rearrangement / Orlicz / Kruglov calculus core";

    py::register_exception<rok::PreconditionError>(m, "PreconditionError");
    py::register_exception<rok::AtomExplosionError>(m, "AtomExplosionError");

    m.def(
        "rearrange",
        [](const std::vector<double>& x) { return step_to_pairs(rok::rearrange_sequence(x)); },
        py::arg("x"), "decreasing rearrangement of |x| as (length, value) plateaus");

    m.def(
        "singular_values",
        [](const std::vector<std::vector<std::complex<double>>>& rows, bool normalized) {
            return step_to_pairs(rok::singular_values(
                matrix_from_rows(rows),
                normalized ? rok::TraceMode::Normalized : rok::TraceMode::Counting));
        },
        py::arg("matrix"), py::arg("normalized") = false);

    m.def(
        "submajorizes",
        [](const PairList& a, const PairList& b, double tol) {
            return rok::submajorizes(step_from_pairs(a), step_from_pairs(b), tol);
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-12,
        "true iff b is submajorized by a (partial integrals of mu(b) below mu(a))");

    m.def("dilate", &rok::dilate_discrete, py::arg("x"), py::arg("n"));
    m.def("average", &rok::average_discrete, py::arg("x"), py::arg("n"));

    m.def(
        "distribution_of",
        [](const PairList& f) {
            const rok::DistributionFn d = rok::DistributionFn::of(step_from_pairs(f));
            PairList out;
            for (std::size_t j = 0; j < d.levels().size(); ++j)
                out.emplace_back(d.levels()[j], d.masses()[j]);
            return out;
        },
        py::arg("plateaus"), "(level, measure{mu >= level}) pairs, levels descending");

    m.def(
        "right_inverse",
        [](const PairList& levels_masses) {
            std::vector<rok::Plateau> ps;
            double prev = 0.0;
            for (const auto& [level, mass] : levels_masses) {
                ps.push_back({mass - prev, level});
                prev = mass;
            }
            return step_to_pairs(rok::DecreasingStep::canonical(std::move(ps)));
        },
        py::arg("distribution"));

    m.def(
        "direct_sum",
        [](const std::vector<PairList>& fs) {
            std::vector<rok::DecreasingStep> steps;
            for (const PairList& f : fs) steps.push_back(step_from_pairs(f));
            return step_to_pairs(rok::direct_sum(steps));
        },
        py::arg("steps"));

    m.def(
        "luxemburg_norm",
        [](const std::string& spec, const std::vector<double>& x) {
            return rok::luxemburg_seq_norm(orlicz_from_spec(spec), x);
        },
        py::arg("orlicz"), py::arg("x"), "Luxemburg norm of a sequence; orlicz is a JSON spec");

    m.def(
        "luxemburg_fn_norm",
        [](const std::string& spec, const PairList& f) {
            return rok::luxemburg_fn_norm(orlicz_from_spec(spec), step_from_pairs(f));
        },
        py::arg("orlicz"), py::arg("plateaus"));

    m.def(
        "orlicz_eval",
        [](const std::string& spec, double t) { return orlicz_from_spec(spec)(t); },
        py::arg("orlicz"), py::arg("t"));
    m.def(
        "orlicz_inverse",
        [](const std::string& spec, double y) { return orlicz_from_spec(spec).inverse(y); },
        py::arg("orlicz"), py::arg("y"));

    m.def(
        "lp_plus_l2_kfunc",
        [](const PairList& f, double p) { return rok::lp_plus_l2_kfunc(step_from_pairs(f), p); },
        py::arg("plateaus"), py::arg("p"));

    m.def(
        "kruglov_exact",
        [](const PairList& atoms, int k_max) {
            const rok::KruglovResult kr = rok::kruglov_exact(law_from_pairs(atoms), k_max);
            py::dict out;
            out["atoms"] = law_to_pairs(kr.mixture);
            out["tail_mass"] = kr.tail_mass;
            return out;
        },
        py::arg("atoms"), py::arg("k_max") = 20);

    m.def(
        "kruglov_charfn",
        [](const PairList& atoms, double t) { return rok::kruglov_charfn(law_from_pairs(atoms), t); },
        py::arg("atoms"), py::arg("t"));

    m.def(
        "kruglov_mc",
        [](const PairList& atoms, std::uint64_t seed, std::int64_t trials) {
            return law_to_pairs(rok::kruglov_mc(law_from_pairs(atoms), seed, trials));
        },
        py::arg("atoms"), py::arg("seed") = 0, py::arg("trials") = 100000);

    m.def(
        "maj_bound_check",
        [](const PairList& atoms, int k_max) {
            return report_to_py(rok::maj_bound_check(law_from_pairs(atoms), k_max));
        },
        py::arg("atoms"), py::arg("k_max") = 20);

    m.def(
        "certify_p_convex",
        [](const std::string& spec, double p) {
            return rok::certify_p_convex(orlicz_from_spec(spec), p, rok::default_cert_grid());
        },
        py::arg("orlicz"), py::arg("p"));
    m.def(
        "certify_q_concave",
        [](const std::string& spec, double q) {
            return rok::certify_q_concave(orlicz_from_spec(spec), q, rok::default_cert_grid());
        },
        py::arg("orlicz"), py::arg("q"));

    m.def(
        "bk_build",
        [](const std::string& phi_spec, double d, int depth) {
            const rok::QuasiConcaveFn phi =
                rok::quasiconcave_from_json(rok::json::parse(phi_spec));
            const rok::BkBuild built = rok::bk_build(phi, d, depth);
            const rok::VerificationReport rep =
                rok::bk_verify(phi, built.x, d, rok::log_grid(1e-6, 1.0, 64));
            py::dict out;
            out["x"] = step_to_pairs(built.x);
            out["t"] = built.seq.t;
            out["s"] = built.seq.s;
            out["u"] = built.seq.u;
            out["finite_branch"] = built.seq.finite_branch;
            out["band_report"] = report_to_py(rep);
            return out;
        },
        py::arg("phi"), py::arg("d") = 2.0, py::arg("depth") = 60);

    m.def(
        "ms_identity",
        [](const PairList& a0, double p, const std::vector<double>& a) {
            const rok::MsIdentityPair pair = rok::ms_identity_pair(step_from_pairs(a0), p, a);
            return std::make_pair(pair.tensor_side, pair.orlicz_side);
        },
        py::arg("a0"), py::arg("p"), py::arg("a"));

    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, std::int64_t trials) {
            py::list out;
            for (const rok::VerificationReport& r : rok::run_suite(name, seed, trials))
                out.append(report_to_py(r));
            return out;
        },
        py::arg("name"), py::arg("seed") = 0, py::arg("trials") = 0);
}
