#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symshift/io.hpp"
#include "symshift/localmaps.hpp"
#include "symshift/shifts.hpp"

namespace py = pybind11;
using namespace symshift;

namespace {

// Words cross the boundary as strings in the alphabet's own notation.
std::string text(const Alphabet &a, const Word &w) { return a.format_word(w); }

std::optional<std::string> text(const Alphabet &a, const std::optional<Word> &w) {
    if (!w)
        return std::nullopt;
    return a.format_word(*w);
}

SftSpec make_sft(const std::vector<std::string> &alphabet, const std::vector<std::string> &forbidden) {
    Alphabet a(alphabet);
    std::vector<Word> words;
    for (const auto &f : forbidden)
        words.push_back(a.parse_word(f));
    return SftSpec(a, words);
}

py::dict census_dict(const PeriodicCensus &c) {
    py::dict d;
    d["p"] = c.p;
    d["q"] = c.q;
    return d;
}

} // namespace

PYBIND11_MODULE(_symshift, m) {
    m.doc() = "Decision procedures for one-dimensional shift spaces";

    // Messages start with the error code, e.g. "E_PARSE: ...".
    py::register_exception<Error>(m, "SymshiftError", PyExc_ValueError);

    py::class_<Alphabet>(m, "Alphabet")
        .def(py::init<std::vector<std::string>>())
        .def_property_readonly("symbols", &Alphabet::symbols)
        .def("__len__", &Alphabet::size);

    py::class_<SftSpec>(m, "Sft")
        .def(py::init(&make_sft), py::arg("alphabet"), py::arg("forbidden"))
        .def_property_readonly("alphabet", [](const SftSpec &s) { return s.alphabet().symbols(); })
        .def_property_readonly("forbidden",
                               [](const SftSpec &s) {
                                   std::vector<std::string> out;
                                   for (const auto &w : s.forbidden())
                                       out.push_back(text(s.alphabet(), w));
                                   return out;
                               })
        .def_property_readonly("memory", &SftSpec::memory)
        .def("__str__", [](const SftSpec &s) { return io::format_sft(s); });

    m.def("parse_sft", [](const std::string &t) { return io::parse_sft(t); });
    m.def("load_sft", [](const std::string &path) { return io::load_sft(path); });

    m.def("is_empty", &is_empty);
    m.def("language_member", [](const SftSpec &s, const std::string &w) {
        return language_member(s, s.alphabet().parse_word(w));
    });
    m.def("is_irreducible", [](const SftSpec &s) { return is_irreducible(s); });
    m.def("is_mixing", [](const SftSpec &s) { return is_mixing(s); });
    m.def("periodic_density", [](const SftSpec &s) { return periodic_density(s); });
    m.def(
        "periodic_census",
        [](const SftSpec &s, std::size_t max_n, std::optional<std::size_t> order) {
            return census_dict(periodic_census(s, max_n, order));
        },
        py::arg("spec"), py::arg("max_n"), py::arg("order") = py::none());
    m.def(
        "enumerate_periodic",
        [](const SftSpec &s, std::size_t n) {
            std::vector<std::string> out;
            for (const auto &c : enumerate_periodic(s, n))
                out.push_back(text(s.alphabet(), c.primitive()));
            return out;
        },
        "Primitive blocks of the points of period dividing n");
    m.def("periodic_witness", [](const SftSpec &s, const std::string &w) -> std::optional<std::string> {
        auto c = periodic_witness(s, s.alphabet().parse_word(w));
        if (!c)
            return std::nullopt;
        return text(s.alphabet(), c->primitive());
    });
    m.def(
        "sofic_equal",
        [](const SftSpec &a, const SftSpec &b) {
            const auto cmp = sofic_equal(essential_presentation(a).graph, essential_presentation(b).graph);
            return py::make_tuple(cmp.equal, text(a.alphabet(), cmp.counterexample));
        },
        "Compare two SFTs through their presentations; returns (equal, counterexample)");
    m.def("sofic_equal_files", [](const std::string &a, const std::string &b) {
        const auto ga = io::load_presentation(a);
        const auto gb = io::load_presentation(b);
        const auto cmp = sofic_equal(ga, gb);
        return py::make_tuple(cmp.equal, ga.alphabet() ? text(*ga.alphabet(), cmp.counterexample) : std::nullopt);
    });

    py::class_<LocalRule>(m, "Rule")
        .def_static("from_index", &LocalRule::from_index, py::arg("domain"), py::arg("radius"), py::arg("index"))
        .def_property_readonly("radius", &LocalRule::radius)
        .def_property_readonly("domain", &LocalRule::domain)
        .def("apply", [](const LocalRule &r, const std::string &w) {
            const auto &a = r.domain().alphabet();
            return text(a, r.apply_word(a.parse_word(w)));
        })
        .def("apply_periodic",
             [](const LocalRule &r, const std::string &w) {
                 const auto &a = r.domain().alphabet();
                 return text(a, apply_to_periodic(r, normalize_periodic(a.parse_word(w))).primitive());
             })
        .def("__str__", [](const LocalRule &r) { return io::format_rule(r); });

    m.def("parse_rule", [](const std::string &t, const SftSpec &d) { return io::parse_rule(t, d); });
    m.def("load_rule", [](const std::string &path, const SftSpec &d) { return io::load_rule(path, d); });
    m.def("xor_rule", &rules::xor_rule);
    m.def("compose", &compose);

    m.def(
        "is_surjective",
        [](const LocalRule &r, std::optional<SftSpec> target) {
            const auto v = is_surjective(r, target ? *target : r.domain());
            return py::make_tuple(v.surjective, text(r.domain().alphabet(), v.orphan));
        },
        py::arg("rule"), py::arg("target") = py::none(), "Returns (surjective, orphan)");
    m.def("is_injective", &is_injective);
    m.def("is_preinjective", &is_preinjective);
    m.def(
        "find_goe_pattern",
        [](const LocalRule &r, std::optional<SftSpec> target) {
            return text(r.domain().alphabet(), find_goe_pattern(r, target ? *target : r.domain()));
        },
        py::arg("rule"), py::arg("target") = py::none());
    m.def(
        "audit_all_rules",
        [](const SftSpec &domain, std::size_t radius, std::uint64_t limit) {
            const auto report = audit_all_rules(domain, radius, limit);
            py::list entries;
            for (const auto &e : report.entries) {
                py::dict d;
                d["index"] = e.index;
                d["selfmap"] = e.selfmap;
                d["injective"] = e.injective;
                d["surjective"] = e.surjective;
                d["preinjective"] = e.preinjective;
                d["orphan"] = text(domain.alphabet(), e.orphan);
                entries.append(d);
            }
            py::dict out;
            out["entries"] = entries;
            out["violations"] = report.violations;
            return out;
        },
        py::arg("domain"), py::arg("radius"), py::arg("limit") = 65536);
}
