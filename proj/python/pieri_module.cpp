#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pieri/betti.hpp"
#include "pieri/classical.hpp"
#include "pieri/complex.hpp"
#include "pieri/golden.hpp"
#include "pieri/json_io.hpp"
#include "pieri/olver.hpp"
#include "pieri/schur.hpp"
#include "pieri/straighten.hpp"

namespace py = pybind11;
using namespace pieri;

namespace {

Partition as_partition(const std::vector<int>& parts) { return Partition(parts); }

std::vector<Partition> as_partitions(const std::vector<std::vector<int>>& xs) {
    std::vector<Partition> out;
    for (auto& x : xs) out.emplace_back(x);
    return out;
}

py::list complex_terms(const EquivariantComplex& c) {
    py::list out;
    for (auto& [k, m] : c.terms) {
        py::dict d;
        d["hom_degree"] = k.hom_degree;
        d["internal_degree"] = k.internal_degree;
        d["partition"] = k.partition.parts();
        d["multiplicity"] = m;
        out.append(d);
    }
    return out;
}

py::dict schur_terms(const SymmetricPolynomial& f) {
    py::dict out;
    for (auto& [p, c] : f.terms()) out[py::tuple(py::cast(p.parts()))] = c;
    return out;
}

GroupType group_of(const std::string& family, int rank) {
    if (family == "B") return {Family::B, rank};
    if (family == "C") return {Family::C, rank};
    if (family == "D") return {Family::D, rank};
    throw std::invalid_argument("family must be 'B', 'C' or 'D'");
}

}  // namespace

PYBIND11_MODULE(_pieri, m) {
    m.doc() = "equivariant Pieri resolutions, Betti tables and their decompositions";

    m.def("dual", [](const std::vector<int>& p) { return as_partition(p).dual().parts(); });
    m.def("is_vertical_strip", [](const std::vector<int>& b, const std::vector<int>& a) {
        return is_vertical_strip(as_partition(b), as_partition(a));
    });
    m.def("is_horizontal_strip", [](const std::vector<int>& b, const std::vector<int>& a) {
        return is_horizontal_strip(as_partition(b), as_partition(a));
    });
    m.def("lex_less", [](const std::vector<int>& a, const std::vector<int>& b) {
        return lex_less(as_partition(a), as_partition(b));
    });
    m.def("dimension",
          [](const std::vector<int>& p, int n) { return dimension(as_partition(p), n); });

    m.def("multiply_schur", [](const std::vector<int>& a, const std::vector<int>& b, int n) {
        return schur_terms(SymmetricPolynomial::schur(as_partition(a), n) *
                           SymmetricPolynomial::schur(as_partition(b), n));
    });
    m.def("pieri_multiply", [](const std::vector<int>& lam, int b, bool exterior, int n) {
        return schur_terms(pieri_multiply(as_partition(lam), b,
                                          exterior ? PieriKind::Exterior : PieriKind::Symmetric, n));
    });
    m.def("schur_monomials", [](const std::vector<int>& lam, int n) {
        py::dict out;
        for (auto& [w, c] : schur_in_monomials(as_partition(lam), n))
            out[py::tuple(py::cast(w))] = c;
        return out;
    });

    m.def(
        "resolve",
        [](const std::vector<int>& alpha, const std::vector<std::vector<int>>& betas, int n,
           bool do_minimize, int effort) {
            auto spec = CokernelSpec::make(as_partition(alpha), as_partitions(betas), n);
            EquivariantComplex c = resolve(spec);
            if (do_minimize) c = minimize(c, effort);
            py::dict out;
            out["n"] = c.n;
            out["minimal"] = c.provenance == Provenance::GuaranteedMinimal;
            out["terms"] = complex_terms(c);
            return out;
        },
        py::arg("alpha"), py::arg("betas"), py::arg("n"), py::arg("minimize") = false,
        py::arg("effort") = 1);

    m.def("pure_resolution", [](const std::vector<int>& alpha, const std::vector<int>& beta, int n) {
        return complex_terms(pure_resolution(as_partition(alpha), as_partition(beta), n));
    });

    m.def("cokernel_character",
          [](const std::vector<int>& alpha, const std::vector<std::vector<int>>& betas, int n,
             int bound) {
              auto spec = CokernelSpec::make(as_partition(alpha), as_partitions(betas), n);
              py::list out;
              for (auto& [p, d] : cokernel_character(spec, bound)) {
                  out.append(py::make_tuple(py::cast(p.parts()), d));
              }
              return out;
          });

    m.def("hk_pure_table", [](const std::vector<int>& d) {
        py::dict out;
        for (auto& [k, v] : hk_pure_table(d).entries)
            out[py::make_tuple(k.first, k.second)] = std::stoll(v.str());
        return out;
    });

    m.def("bs_decompose", [](const std::vector<std::tuple<int, int, long long>>& entries) {
        BettiTable t;
        for (auto& [i, j, v] : entries) t.set(i, j, Rational(v));
        auto dec = bs_decompose_numeric(t);
        py::list steps;
        for (auto& s : dec.steps) {
            py::dict step;
            step["coefficient"] = s.coefficient.str();
            step["degrees"] = s.degrees;
            steps.append(step);
        }
        py::dict out;
        out["steps"] = steps;
        out["success"] = dec.success();
        return out;
    });

    m.def("bott", [](const std::string& family, int rank, const std::vector<int>& weight) {
        BottResult r = dotted_bott(group_of(family, rank), weight);
        py::dict out;
        out["zero"] = r.zero;
        if (!r.zero) {
            out["degree"] = r.degree;
            out["weight"] = r.weight;
            out["dual"] = r.dualized;
        }
        return out;
    });

    m.def("wedge_cohomology",
          [](const std::string& family, int rank, const std::vector<int>& lam, int i) {
              py::dict out;
              for (auto& [deg, ws] : wedge_cohomology(group_of(family, rank), as_partition(lam), i))
                  out[py::cast(deg)] = ws;
              return out;
          });

    m.def("newell_littlewood",
          [](const std::vector<int>& lam, const std::vector<int>& mu, int n) {
              py::dict out;
              for (auto& [nu, c] : newell_littlewood(as_partition(lam), as_partition(mu), n))
                  out[py::tuple(py::cast(nu.parts()))] = c;
              return out;
          });

    m.def("verify_golden", []() {
        auto report = run_golden_checks();
        py::list results;
        for (auto& [name, ok] : report.results) results.append(py::make_tuple(name, ok));
        py::dict out;
        out["passed"] = report.passed;
        out["failed"] = report.failed;
        out["results"] = results;
        return out;
    });

    m.def("set_size_cap", [](long long cap) { set_schur_module_size_cap(cap); });
}
