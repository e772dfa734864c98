#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phik/io.hpp"
#include "phik/phik.hpp"

namespace py = pybind11;
using namespace phik;

namespace {

// Big values cross the boundary as Python ints / Fractions, never as doubles.
py::object to_py(const BigInt& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& v) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(BigInt(v.get_num())), to_py(BigInt(v.get_den())));
}

py::tuple to_py(const Enclosure& e) { return py::make_tuple(to_py(e.lo), to_py(e.hi)); }

SumOptions sum_options(unsigned threads) {
    SumOptions o;
    o.threads = threads;
    return o;
}

}  // namespace

PYBIND11_MODULE(_phik, m) {
    m.doc() = "Higher-order Euler totients, Menon-type identities and summatory functions";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    m.def("phi_k", [](unsigned k, u64 n) { return to_py(phi_k(k, n)); }, py::arg("k"), py::arg("n"));
    m.def("phi_k_oracle", [](unsigned k, u64 n, u64 budget) { return to_py(phi_k_oracle(k, n, budget)); },
          py::arg("k"), py::arg("n"), py::arg("budget") = kDefaultOracleBudget);
    m.def("phi_k_nm", [](unsigned k, u64 n, u64 m_) { return to_py(phi_k_nm({k, n, m_})); },
          py::arg("k"), py::arg("n"), py::arg("m"));
    m.def("phi_k_nm_recursion", [](unsigned k, u64 n, u64 m_) { return to_py(phi_k_nm_recursion({k, n, m_})); },
          py::arg("k"), py::arg("n"), py::arg("m"));
    m.def("g_k", [](unsigned k, u64 n) { return to_py(g_k(k, n).value); }, py::arg("k"), py::arg("n"));
    m.def("jordan", [](unsigned k, u64 n) { return to_py(jordan(k)(n)); }, py::arg("k"), py::arg("n"));
    m.def("factorize", [](u64 n) {
        std::vector<std::pair<u64, unsigned>> out;
        for (const auto& pp : factorize(n).factors()) out.emplace_back(pp.prime, pp.exponent);
        return out;
    }, py::arg("n"));

    m.def("n_k", [](unsigned k, u64 n, u64 d, u64 delta, const std::string& method) {
        const NkQuery q{k, n, d, delta};
        if (method == "closed") return to_py(n_k_closed(q));
        if (method == "recursion") return to_py(n_k_recursion(q));
        if (method == "oracle") return to_py(n_k_oracle(q));
        throw DomainError("method must be closed, recursion or oracle");
    }, py::arg("k"), py::arg("n"), py::arg("d"), py::arg("delta") = 1, py::arg("method") = "closed");

    m.def("menon_lhs", [](unsigned k, u64 n, const std::string& f) {
        return to_py(menon_lhs_oracle(k, n, io::parse_function_spec(f).f));
    }, py::arg("k"), py::arg("n"), py::arg("f") = "id");
    m.def("menon_rhs", [](unsigned k, u64 n, const std::string& f) {
        return to_py(menon_rhs_closed(k, n, io::parse_function_spec(f).f));
    }, py::arg("k"), py::arg("n"), py::arg("f") = "id");

    m.def("verify", [](const std::string& identity, unsigned k_max, u64 n_max, unsigned threads) {
        SweepConfig c;
        const auto id = parse_identity(identity);
        if (!id) throw DomainError("unknown identity: " + identity);
        c.identity = *id;
        c.k_min = c.identity == Identity::sita_ramaiah ? 2 : 1;
        c.k_max = k_max;
        c.n_max = n_max;
        c.threads = threads;
        return io::to_json(verify_identity_sweep(c)).dump();
    }, py::arg("identity"), py::arg("k_max"), py::arg("n_max"), py::arg("threads") = 1,
       "Run an identity sweep and return the JSON report as a string.");

    m.def("sum_phi_k", [](unsigned k, u64 x, const std::string& method, unsigned threads) {
        if (method == "direct") return to_py(sum_phi_k_direct(k, x, sum_options(threads)).value);
        if (method == "convolution") return to_py(sum_phi_k_convolution(k, x, sum_options(threads)).value);
        throw DomainError("method must be direct or convolution");
    }, py::arg("k"), py::arg("x"), py::arg("method") = "direct", py::arg("threads") = 1);

    m.def("euler_constant", [](unsigned k, u64 prime_bound, unsigned threads) {
        ConstantOptions o;
        o.threads = threads;
        return to_py(euler_constant(k, prime_bound, o));
    }, py::arg("k"), py::arg("prime_bound") = 1'000'000, py::arg("threads") = 1,
       "Rigorous enclosure (lo, hi) of the Euler-product constant, as Fractions.");

    m.def("error_table", [](unsigned k, const std::vector<u64>& grid, u64 prime_bound) {
        return io::error_table_csv(error_term_monitor(k, grid, euler_constant(k, prime_bound)));
    }, py::arg("k"), py::arg("grid"), py::arg("prime_bound") = 1'000'000);
}
