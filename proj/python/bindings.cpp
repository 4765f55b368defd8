#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "constakit/cli.hpp"
#include "constakit/code.hpp"
#include "constakit/cyclo.hpp"
#include "constakit/field.hpp"
#include "constakit/matrix.hpp"
#include "constakit/oracle.hpp"
#include "constakit/poly.hpp"
#include "constakit/selfdual.hpp"
#include "constakit/text.hpp"

namespace py = pybind11;

namespace {

using namespace constakit;

struct PyField;
struct PyFelt;
struct PyPoly;
struct PyCode;

struct PyField {
    Field f;
};

struct PyFelt {
    Felt x;
};

struct PyPoly {
    Poly g;
};

struct PyCode {
    ConstaCode c;
};

py::object py_bigint(const BigUint& v) {
    return py::module_::import("builtins").attr("int")(v.to_string());
}

PyFelt parse_token(const PyField& f, const py::object& token) {
    if (py::isinstance<PyFelt>(token)) {
        PyFelt e = token.cast<PyFelt>();
        if (!e.x.field()->same(*f.f)) fail(errc::field_mismatch, "element from a different field");
        return e;
    }
    if (py::isinstance<py::int_>(token)) {
        return PyFelt{felt_from_int(f.f, token.cast<long long>())};
    }
    return PyFelt{parse_element(f.f, token.cast<std::string>())};
}

PyPoly parse_poly_arg(const PyField& f, const py::object& arg) {
    if (py::isinstance<PyPoly>(arg)) {
        PyPoly g = arg.cast<PyPoly>();
        if (!g.g.field()->same(*f.f)) fail(errc::field_mismatch, "polynomial from a different field");
        return g;
    }
    if (py::isinstance<py::str>(arg)) return PyPoly{parse_poly(f.f, arg.cast<std::string>())};
    std::vector<std::uint32_t> coeffs;
    for (const auto& item : arg.cast<py::sequence>()) {
        long long v = item.cast<long long>();
        coeffs.push_back(felt_from_int(f.f, v).value());
    }
    return PyPoly{Poly(f.f, std::move(coeffs))};
}

py::dict shape_dict(const CodeShape& sh) {
    py::dict d;
    d["p"] = sh.p;
    d["a"] = sh.a;
    d["m"] = sh.m;
    d["r"] = sh.r;
    d["n"] = sh.n;
    return d;
}

py::dict verdict_dict(const ExistenceVerdict& v) {
    py::dict d;
    d["exists"] = v.exists;
    if (v.witness) {
        d["witness"] = PyCode{*v.witness};
    } else {
        d["witness"] = py::none();
    }
    py::list obs;
    for (const auto& g : v.obstruction) obs.append(PyPoly{g});
    d["obstruction"] = obs;
    if (v.ord_m_q) {
        d["ord_m_q"] = *v.ord_m_q;
    } else {
        d["ord_m_q"] = py::none();
    }
    return d;
}

py::list matrix_rows(const FMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(m.at(i, j));
        rows.append(row);
    }
    return rows;
}

py::list words_list(const CodewordSet& ws) {
    py::list out;
    for (const auto& w : ws.words) out.append(py::tuple(py::cast(w)));
    return out;
}

struct PyCodeIter {
    CodeEnumerator en;
};

struct PySelfDualIter {
    SelfDualEnumerator en;
};

py::object iter_next(std::optional<EnumeratedCode> ec) {
    if (!ec) throw py::stop_iteration();
    return py::make_tuple(py::cast(ec->exps), PyCode{std::move(ec->code)});
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact arithmetic for repeated-root constacyclic codes over F_{p^s}";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<PyField>(mod, "Field")
        .def(py::init([](std::uint64_t p, std::uint32_t s,
                         const std::optional<std::vector<std::uint32_t>>& modulus) {
                 if (modulus) return PyField{make_field(p, s, *modulus)};
                 return PyField{make_field(p, s)};
             }),
             py::arg("p"), py::arg("s") = 1, py::arg("modulus") = py::none())
        .def_property_readonly("p", [](const PyField& f) { return f.f->p(); })
        .def_property_readonly("s", [](const PyField& f) { return f.f->s(); })
        .def_property_readonly("q", [](const PyField& f) { return f.f->q(); })
        .def_property_readonly("modulus", [](const PyField& f) { return f.f->modulus(); })
        .def_property_readonly("generator", [](const PyField& f) { return PyFelt{generator(f.f)}; })
        .def_property_readonly("zero", [](const PyField& f) { return PyFelt{zero_of(f.f)}; })
        .def_property_readonly("one", [](const PyField& f) { return PyFelt{one_of(f.f)}; })
        .def("element", &parse_token, py::arg("token"),
             "element from a packed value, a signed int, an element token, or an element")
        .def("poly", &parse_poly_arg, py::arg("coeffs"),
             "polynomial from a coefficient list (constant first) or a CSV token string")
        .def("root_of_unity",
             [](const PyField& f, std::uint64_t n) { return PyFelt{root_of_unity(f.f, n)}; },
             py::arg("n"))
        .def("__eq__",
             [](const PyField& a, const PyField& b) { return a.f->same(*b.f); })
        .def("__repr__", [](const PyField& f) {
            std::ostringstream os;
            os << "Field(p=" << f.f->p() << ", s=" << f.f->s() << ", q=" << f.f->q() << ")";
            return os.str();
        });

    py::class_<PyFelt>(mod, "Felt")
        .def_property_readonly("value", [](const PyFelt& e) { return e.x.value(); })
        .def_property_readonly("digits", [](const PyFelt& e) { return e.x.coeffs(); })
        .def_property_readonly("field", [](const PyFelt& e) { return PyField{e.x.field()}; })
        .def_property_readonly("order", [](const PyFelt& e) { return element_order(e.x); })
        .def_property_readonly("dlog",
                               [](const PyFelt& e) -> py::object {
                                   auto k = e.x.field()->dlog(e.x.value());
                                   if (!k) return py::none();
                                   return py::cast(*k);
                               })
        .def("__add__", [](const PyFelt& a, const PyFelt& b) { return PyFelt{a.x + b.x}; })
        .def("__sub__", [](const PyFelt& a, const PyFelt& b) { return PyFelt{a.x - b.x}; })
        .def("__mul__", [](const PyFelt& a, const PyFelt& b) { return PyFelt{a.x * b.x}; })
        .def("__truediv__", [](const PyFelt& a, const PyFelt& b) { return PyFelt{a.x / b.x}; })
        .def("__neg__", [](const PyFelt& a) { return PyFelt{-a.x}; })
        .def("__pow__", [](const PyFelt& a, long long e) { return PyFelt{a.x.pow(e)}; })
        .def("inverse", [](const PyFelt& a) { return PyFelt{a.x.inv()}; })
        .def("__eq__",
             [](const PyFelt& a, const PyFelt& b) {
                 return a.x.field()->same(*b.x.field()) && a.x == b.x;
             })
        .def("__hash__", [](const PyFelt& a) { return py::hash(py::cast(a.x.value())); })
        .def("__repr__", [](const PyFelt& a) {
            return "Felt(" + format_element(a.x) + " = " + format_element_pow(a.x) + ")";
        });

    py::class_<PyPoly>(mod, "Poly")
        .def_property_readonly("coeffs", [](const PyPoly& g) { return g.g.values(); })
        .def_property_readonly("degree", [](const PyPoly& g) { return g.g.degree(); })
        .def_property_readonly("field", [](const PyPoly& g) { return PyField{g.g.field()}; })
        .def_property_readonly("csv", [](const PyPoly& g) { return format_poly(g.g); })
        .def_property_readonly("is_monic", [](const PyPoly& g) { return g.g.is_monic(); })
        .def("__add__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.g + b.g}; })
        .def("__sub__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.g - b.g}; })
        .def("__mul__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.g * b.g}; })
        .def("__mod__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.g % b.g}; })
        .def("__floordiv__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.g / b.g}; })
        .def("__pow__", [](const PyPoly& a, std::uint64_t e) { return PyPoly{a.g.pow(e)}; })
        .def("__neg__", [](const PyPoly& a) { return PyPoly{-a.g}; })
        .def("__eq__", [](const PyPoly& a, const PyPoly& b) {
            return a.g.field()->same(*b.g.field()) && a.g == b.g;
        })
        .def("monic", [](const PyPoly& g) { return PyPoly{g.g.monicize()}; })
        .def("reciprocal",
             [](const PyPoly& g, bool make_monic) { return PyPoly{g.g.reciprocal(make_monic)}; },
             py::arg("monic") = false)
        .def("substitute_scaled",
             [](const PyPoly& g, const PyFelt& c) { return PyPoly{g.g.substitute_scaled(c.x)}; })
        .def("eval", [](const PyPoly& g, const PyFelt& x) { return PyFelt{g.g.eval(x.x)}; })
        .def("derivative", [](const PyPoly& g) { return PyPoly{g.g.derivative()}; })
        .def("is_squarefree", [](const PyPoly& g) { return g.g.is_squarefree(); })
        .def("__repr__", [](const PyPoly& g) { return "Poly(" + pretty_poly(g.g) + ")"; });

    mod.def("gcd", [](const PyPoly& a, const PyPoly& b) { return PyPoly{gcd(a.g, b.g)}; });

    py::class_<CodeShape>(mod, "CodeShape")
        .def_readonly("p", &CodeShape::p)
        .def_readonly("a", &CodeShape::a)
        .def_readonly("m", &CodeShape::m)
        .def_readonly("r", &CodeShape::r)
        .def_readonly("n", &CodeShape::n)
        .def("__eq__", [](const CodeShape& x, const CodeShape& y) { return x == y; })
        .def("__repr__", [](const CodeShape& sh) {
            std::ostringstream os;
            os << "CodeShape(n=" << sh.n << " = 2^" << sh.a << " * " << sh.m << " * " << sh.p
               << "^" << sh.r << ")";
            return os.str();
        });

    mod.def("shape_decompose", &shape_decompose, py::arg("n"), py::arg("p"));

    py::class_<PyCode>(mod, "Code")
        .def_property_readonly("n", [](const PyCode& c) { return c.c.n(); })
        .def_property_readonly("dim", [](const PyCode& c) { return c.c.dim(); })
        .def_property_readonly("lam", [](const PyCode& c) { return PyFelt{c.c.lam()}; })
        .def_property_readonly("gen", [](const PyCode& c) { return PyPoly{c.c.gen()}; })
        .def_property_readonly("shape", [](const PyCode& c) { return c.c.shape(); })
        .def_property_readonly("field", [](const PyCode& c) { return PyField{c.c.field()}; })
        .def("__eq__", [](const PyCode& a, const PyCode& b) { return a.c == b.c; })
        .def("__repr__", [](const PyCode& c) {
            std::ostringstream os;
            os << "Code(n=" << c.c.n() << ", dim=" << c.c.dim() << ", lam=" << c.c.lam().value()
               << ", gen=" << format_poly(c.c.gen()) << ")";
            return os.str();
        });

    mod.def(
        "make_code",
        [](const PyField& f, std::uint64_t n, const py::object& lam, const py::object& gen) {
            return PyCode{make_code(f.f, n, parse_token(f, lam).x, parse_poly_arg(f, gen).g)};
        },
        py::arg("field"), py::arg("n"), py::arg("lam"), py::arg("gen"));

    mod.def("multiplicative_order", &multiplicative_order, py::arg("q"), py::arg("m"));

    mod.def(
        "cyclotomic_cosets",
        [](std::uint64_t n, std::uint64_t q) {
            py::list out;
            for (const auto& c : cyclotomic_cosets(n, q)) {
                py::dict d;
                d["rep"] = c.rep;
                d["members"] = c.members;
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("q"));

    mod.def(
        "minimal_polynomial",
        [](const PyField& f, std::uint64_t n, std::uint64_t rep) {
            for (const auto& c : cyclotomic_cosets(n, f.f->q())) {
                if (c.rep == rep % n) return PyPoly{minimal_polynomial(f.f, n, c)};
            }
            fail(errc::bad_argument, "no coset with that representative");
        },
        py::arg("field"), py::arg("n"), py::arg("rep"));

    mod.def(
        "factor_binomial",
        [](const PyField& f, std::uint64_t m, const py::object& c) {
            FactorList fl = factor_binomial(f.f, m, parse_token(f, c).x);
            py::dict d;
            d["target"] = PyPoly{fl.target};
            py::list factors;
            for (const auto& [g, mult] : fl.factors) {
                factors.append(py::make_tuple(PyPoly{g}, mult));
            }
            d["factors"] = factors;
            return d;
        },
        py::arg("field"), py::arg("m"), py::arg("c"));

    mod.def("factor_squarefree_monic", [](const PyPoly& g) {
        py::list out;
        for (const auto& h : factor_squarefree_monic(g.g)) out.append(PyPoly{h});
        return out;
    });

    mod.def(
        "factor_grid",
        [](const PyField& f, std::uint32_t a, std::uint64_t m, const py::object& scale,
           const std::string& variant) {
            GridVariant v = GridVariant::all;
            if (variant == "even") v = GridVariant::even;
            else if (variant == "odd") v = GridVariant::odd;
            else if (variant != "all") fail(errc::bad_argument, "variant must be all, even, or odd");
            FactorGrid grid = factor_grid(f.f, a, m, parse_token(f, scale).x, v);
            py::dict d;
            d["a"] = grid.a;
            d["m"] = grid.m;
            d["variant"] = variant;
            d["alpha"] = PyFelt{grid.alpha};
            d["scale"] = PyFelt{grid.scale};
            py::list base;
            for (const auto& [g, mult] : grid.base.factors) base.append(PyPoly{g});
            d["base_factors"] = base;
            d["twist_exponents"] = grid.twist_exponents;
            py::list rows;
            for (const auto& row : grid.entries) {
                py::list r;
                for (const auto& g : row) r.append(PyPoly{g});
                rows.append(r);
            }
            d["rows"] = rows;
            d["target"] = PyPoly{grid.target};
            return d;
        },
        py::arg("field"), py::arg("a"), py::arg("m"), py::arg("scale") = 1,
        py::arg("variant") = "all");

    mod.def(
        "count_codes",
        [](const PyField& f, std::uint64_t n, const py::object& lam) {
            CodeEnumerator en(f.f, shape_decompose(n, f.f->p()), parse_token(f, lam).x);
            return py_bigint(en.total());
        },
        py::arg("field"), py::arg("n"), py::arg("lam") = 1);

    py::class_<PyCodeIter>(mod, "CodeEnumerator")
        .def(py::init([](const PyField& f, std::uint64_t n, const py::object& lam) {
                 return PyCodeIter{
                     CodeEnumerator(f.f, shape_decompose(n, f.f->p()), parse_token(f, lam).x)};
             }),
             py::arg("field"), py::arg("n"), py::arg("lam") = 1)
        .def_property_readonly("total", [](const PyCodeIter& it) { return py_bigint(it.en.total()); })
        .def_property_readonly("base",
                               [](const PyCodeIter& it) {
                                   py::list out;
                                   for (const auto& g : it.en.base()) out.append(PyPoly{g});
                                   return out;
                               })
        .def("__iter__", [](PyCodeIter& it) -> PyCodeIter& { return it; })
        .def("__next__", [](PyCodeIter& it) { return iter_next(it.en.next()); });

    mod.def("dual", [](const PyCode& c) { return PyCode{dual(c.c)}; });
    mod.def("is_self_dual", [](const PyCode& c) { return is_self_dual(c.c); });
    mod.def("generator_matrix", [](const PyCode& c) { return matrix_rows(generator_matrix(c.c)); });

    mod.def("cyclic_equivalent", [](const PyCode& c) -> py::object {
        auto eq = cyclic_equivalent(c.c);
        if (!eq) return py::none();
        py::dict d;
        d["delta"] = PyFelt{eq->map.delta};
        d["cyclic"] = PyCode{eq->cyclic};
        return d;
    });

    mod.def(
        "map_to_cyclic",
        [](const PyCode& c, const std::vector<std::uint32_t>& word) {
            auto eq = cyclic_equivalent(c.c);
            if (!eq) fail(errc::no_such_root, "lambda has no n-th root");
            return eq->map.constacyclic_to_cyclic(word);
        },
        py::arg("code"), py::arg("word"));

    mod.def(
        "classify_factors",
        [](const PyField& f, std::uint64_t M) {
            PairClassification cls = classify_factors(f.f, M);
            py::dict d;
            d["target"] = PyPoly{cls.target};
            py::list selfrec;
            for (const auto& g : cls.self_reciprocal) selfrec.append(PyPoly{g});
            d["self_reciprocal"] = selfrec;
            py::list pairs;
            for (const auto& [h, hstar] : cls.pairs) {
                pairs.append(py::make_tuple(PyPoly{h}, PyPoly{hstar}));
            }
            d["pairs"] = pairs;
            return d;
        },
        py::arg("field"), py::arg("M"));

    mod.def(
        "selfdual_exists_structural",
        [](const PyField& f, std::uint64_t n) {
            return verdict_dict(selfdual_exists_structural(f.f, shape_decompose(n, f.f->p())));
        },
        py::arg("field"), py::arg("n"));

    mod.def(
        "selfdual_exists_paper",
        [](const PyField& f, std::uint64_t n) {
            return verdict_dict(selfdual_exists_paper(f.f, shape_decompose(n, f.f->p())));
        },
        py::arg("field"), py::arg("n"));

    py::class_<PySelfDualIter>(mod, "SelfDualEnumerator")
        .def(py::init([](const PyField& f, std::uint64_t n) {
                 return PySelfDualIter{SelfDualEnumerator(f.f, shape_decompose(n, f.f->p()))};
             }),
             py::arg("field"), py::arg("n"))
        .def_property_readonly("total",
                               [](const PySelfDualIter& it) { return py_bigint(it.en.total()); })
        .def("__iter__", [](PySelfDualIter& it) -> PySelfDualIter& { return it; })
        .def("__next__", [](PySelfDualIter& it) { return iter_next(it.en.next()); });

    mod.def(
        "consistency_report",
        [](const PyField& f, std::uint64_t n, bool run_oracle) {
            ConsistencyReport rep =
                consistency_report(f.f, shape_decompose(n, f.f->p()), run_oracle);
            py::dict d;
            d["shape"] = rep.shape;
            d["structural"] = verdict_dict(rep.structural);
            d["paper_applicable"] = rep.paper_applicable;
            d["paper"] = rep.paper ? py::object(verdict_dict(*rep.paper)) : py::none();
            d["agree"] = rep.agree ? py::object(py::cast(*rep.agree)) : py::none();
            d["oracle_checked"] = rep.oracle_checked;
            d["oracle_confirms"] = rep.oracle_confirms;
            return d;
        },
        py::arg("field"), py::arg("n"), py::arg("run_oracle") = true);

    mod.def(
        "codeword_set",
        [](const PyCode& c, std::uint64_t max_words) {
            OracleBounds bounds;
            bounds.max_words = max_words;
            return words_list(codeword_set(c.c, bounds));
        },
        py::arg("code"), py::arg("max_words") = 20000);

    mod.def(
        "check_shift_closure",
        [](const PyCode& c, std::uint64_t max_words) {
            OracleBounds bounds;
            bounds.max_words = max_words;
            CodewordSet ws = codeword_set(c.c, bounds);
            return check_shift_closure(ws, c.c.lam());
        },
        py::arg("code"), py::arg("max_words") = 20000);

    mod.def(
        "bruteforce_dual_words",
        [](const PyCode& c, std::uint64_t max_words, std::uint64_t max_space) {
            OracleBounds bounds{max_words, max_space};
            CodewordSet ws = codeword_set(c.c, bounds);
            return words_list(bruteforce_dual(ws, bounds));
        },
        py::arg("code"), py::arg("max_words") = 20000, py::arg("max_space") = 20000);

    mod.def("check_matrix_selfdual",
            [](const PyCode& c) { return check_matrix_selfdual(generator_matrix(c.c)); });

    mod.def(
        "min_distance",
        [](const PyCode& c, std::uint32_t cap, std::uint64_t max_words) {
            OracleBounds bounds;
            bounds.max_words = max_words;
            MinDistanceResult r = min_distance(c.c, cap, bounds);
            const char* kind = "unbounded";
            switch (r.kind) {
                case MinDistanceResult::Kind::exact: kind = "exact"; break;
                case MinDistanceResult::Kind::at_most: kind = "at_most"; break;
                case MinDistanceResult::Kind::above_cap: kind = "above_cap"; break;
                case MinDistanceResult::Kind::unbounded: kind = "unbounded"; break;
            }
            return py::make_tuple(kind, r.value);
        },
        py::arg("code"), py::arg("cap") = 64, py::arg("max_words") = 20000);

    mod.def(
        "prth_root",
        [](const PyField& f, const py::object& lam, std::uint32_t r) {
            return PyFelt{prth_root(f.f, parse_token(f, lam).x, r)};
        },
        py::arg("field"), py::arg("lam"), py::arg("r"));

    mod.def(
        "nth_root_of",
        [](const PyField& f, const py::object& lam, std::uint64_t n) -> py::object {
            auto root = nth_root_of(f.f, parse_token(f, lam).x, n);
            if (!root) return py::none();
            return py::cast(PyFelt{*root});
        },
        py::arg("field"), py::arg("lam"), py::arg("n"));

    mod.def("format_element", [](const PyFelt& x) { return format_element(x.x); });
    mod.def("format_element_pow", [](const PyFelt& x) { return format_element_pow(x.x); });
    mod.def("format_poly", [](const PyPoly& g) { return format_poly(g.g); });
    mod.def("pretty_poly", [](const PyPoly& g) { return pretty_poly(g.g); });

    mod.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "run the command-line interface in-process; returns (exit, out, err)");
}
