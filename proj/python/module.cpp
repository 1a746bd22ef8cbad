#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagpart/analysis.hpp"
#include "flagpart/flag_count.hpp"
#include "flagpart/hecke_chars.hpp"
#include "flagpart/paper_data.hpp"

namespace py = pybind11;
using namespace flagpart;

namespace {

py::dict counts_to_dict(const CountVector& cv) {
    const CoxeterGroup& W = CoxeterGroup::get(cv.type_label);
    py::dict d;
    for (int w = 0; w < W.order(); ++w)
        d[py::str(W.element_to_string(w))] = cv.counts[w];
    return d;
}

py::dict count_py(const std::string& type, uint32_t q, const std::string& cls,
                  const std::string& variant, const std::string& cache_dir, int jobs) {
    CountStore store(cache_dir, jobs, false);
    const CountVector& cv = store.unipotent(type, q, partition_from_string(cls), variant);
    return counts_to_dict(cv);
}

py::dict interpolate_py(const std::string& type, const std::vector<uint32_t>& qs,
                        const std::string& cls, const std::string& variant,
                        const std::string& cache_dir, int jobs) {
    CountStore store(cache_dir, jobs, false);
    XiEntry entry = xi_from_samples(store, type, partition_from_string(cls), variant, qs);
    const CoxeterGroup& W = CoxeterGroup::get(type);
    py::dict d;
    for (const auto& [cid, poly] : entry.by_class) {
        auto [min_exp, coeffs] = poly.serialize();
        py::list arr;
        for (const auto& c : coeffs) arr.append(py::int_(py::str(c.get_str())));
        d[py::str(W.conjugacy_classes()[cid].label)] = py::make_tuple(min_exp, arr);
    }
    return d;
}

py::dict solve_traces_py(const std::string& type, uint32_t q, const std::string& cls,
                         const std::string& variant, const std::string& cache_dir, int jobs) {
    CountStore store(cache_dir, jobs, false);
    const CountVector& cv = store.unipotent(type, q, partition_from_string(cls), variant);
    const CoxeterGroup& W = CoxeterGroup::get(type);
    auto x = solve_unipotent_traces(W, cv.counts, mpq_class(q));
    auto labels = irr_labels(W);
    py::dict d;
    for (std::size_t i = 0; i < labels.size(); ++i)
        d[py::str(labels[i].to_string())] = py::str(x[i].get_str());
    return d;
}

py::dict verify_py(const std::vector<std::string>& types, const std::vector<uint32_t>& rank3_primes,
                   const std::string& cache_dir, int jobs) {
    RunConfig cfg;
    if (!types.empty()) cfg.types = types;
    if (!rank3_primes.empty()) cfg.rank3_primes = rank3_primes;
    cfg.cache_dir = cache_dir;
    cfg.jobs = jobs;
    Report report = verify_all(cfg);
    py::list checks;
    for (const auto& c : report.checks) {
        py::dict e;
        e["id"] = c.id;
        e["grade"] = c.grade;
        e["status"] = c.status;
        e["expected"] = c.expected;
        e["actual"] = c.actual;
        e["paper_ref"] = c.ref;
        checks.append(e);
    }
    py::dict out;
    out["all_pass"] = report.all_pass();
    out["checks"] = checks;
    return out;
}

std::vector<std::string> data_check_py() { return data_integrity_issues(); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "point counts of flag-manifold partitions and Hecke-central elements";

    m.def("count", &count_py, py::arg("type"), py::arg("q"), py::arg("partition"),
          py::arg("variant") = "std", py::arg("cache_dir") = "cache", py::arg("jobs") = 2,
          "exact piece counts {word: N_w} for one unipotent class representative");
    m.def("interpolate", &interpolate_py, py::arg("type"), py::arg("qs"), py::arg("partition"),
          py::arg("variant") = "std", py::arg("cache_dir") = "cache", py::arg("jobs") = 2,
          "interpolated class polynomials {class: (min_exp, coeffs)}");
    m.def("solve_traces", &solve_traces_py, py::arg("type"), py::arg("q"), py::arg("partition"),
          py::arg("variant") = "std", py::arg("cache_dir") = "cache", py::arg("jobs") = 2,
          "solved module traces {label: rational string}");
    m.def("verify", &verify_py, py::arg("types") = std::vector<std::string>{},
          py::arg("rank3_primes") = std::vector<uint32_t>{}, py::arg("cache_dir") = "cache",
          py::arg("jobs") = 2, "run the verification suite; returns the structured report");
    m.def("data_check", &data_check_py, "audit the transcribed tables; empty list means clean");
    m.def("flag_total", [](const std::string& type, uint32_t q) {
        return flag_total(CoxeterGroup::get(type), q);
    });

    m.attr("__version__") = "1.0.0";
}
