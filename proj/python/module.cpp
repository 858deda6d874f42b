#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chainforge/closed_forms.hpp"
#include "chainforge/diagram.hpp"
#include "chainforge/oracle.hpp"

namespace py = pybind11;
using namespace chainforge;

namespace {

py::int_ big_to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.to_string().c_str(), nullptr, 10));
}

Point to_point(const std::vector<int>& digits, int d) { return make_point(digits, d); }

CandidateVariant variant_from(const std::string& name) {
    if (name == "floor") return CandidateVariant::Floor;
    if (name == "ceil") return CandidateVariant::Ceil;
    throw std::invalid_argument("variant must be 'floor' or 'ceil'");
}

FootprintStyle style_from(const std::string& name) {
    if (name == "basic") return FootprintStyle::Basic;
    if (name == "anti") return FootprintStyle::AntiBasic;
    throw std::invalid_argument("style must be 'basic' or 'anti'");
}

py::list point_set_to_list(const PointSet& s) {
    py::list out;
    for (const Point& p : s.points) out.append(p.digits);
    return out;
}

py::dict table_to_dict(const WeightTable& t) {
    py::dict entries;
    for (std::size_t gi = 0; gi < t.groups.size(); ++gi) {
        const ChainGroup& g = t.groups[gi];
        py::object key = t.d == 1 ? py::object(py::int_(g.owner_layer()))
                                  : py::object(py::make_tuple(g.owner.a, g.owner.b, g.owner.c));
        py::dict e;
        e["width"] = g.width;
        e["full_width"] = g.full_width;
        e["W"] = t.weights[gi].to_fraction_string();
        entries[key] = e;
    }
    py::dict out;
    out["n"] = t.n;
    out["d"] = t.d;
    out["k"] = t.k;
    out["entries"] = entries;
    return out;
}

}  // namespace

PYBIND11_MODULE(chainforge, m) {
    m.doc() = "weighted chain decompositions of {0..d}^n with exact verification oracles";

    m.def("binomial", [](long long nn, long long kk) { return big_to_py(binomial(nn, kk)); });
    m.def("binom_signed", [](long long u, long long l) { return big_to_py(binom_signed(u, l)); });
    m.def("figurate", [](long long dd, long long i) { return big_to_py(figurate(dd, i)); });
    m.def("layer_size", [](int nn, int dd, int mm) { return big_to_py(layer_size(nn, dd, mm)); });
    m.def("type_size", [](int a, int b, int c) { return big_to_py(type_size(make_type(a, b, c))); });

    m.def("forbidden_pair", [](const std::vector<int>& x, const std::vector<int>& y, int d, int kk) {
        return forbidden_pair(to_point(x, d), to_point(y, d), kk);
    });

    m.def("candidate_set_size", [](int nn, int dd, int kk, const std::string& variant) {
        return big_to_py(candidate_set_size(nn, dd, kk, variant_from(variant)));
    }, py::arg("n"), py::arg("d"), py::arg("k"), py::arg("variant") = "floor");

    m.def("candidate_points", [](int nn, int dd, int kk, const std::string& variant) {
        return point_set_to_list(build_candidate_set(nn, dd, kk, variant_from(variant)));
    }, py::arg("n"), py::arg("d"), py::arg("k"), py::arg("variant") = "floor");

    m.def("validate_set", [](const std::vector<std::vector<int>>& pts, int d, int kk) -> py::object {
        std::vector<Point> points;
        for (const auto& digits : pts) points.push_back(to_point(digits, d));
        auto witness = validate_points(points, kk);
        if (!witness) return py::none();
        return py::make_tuple(witness->first.digits, witness->second.digits);
    });

    m.def("weight_table", [](int nn, int dd, int kk, const std::string& style) {
        return table_to_dict(assign_weights_generic(nn, dd, kk, style_from(style)));
    }, py::arg("n"), py::arg("d"), py::arg("k"), py::arg("style") = "basic");

    m.def("weight_table_fast", [](int nn, int dd, int kk) {
        return table_to_dict(dd == 1 ? assign_weights_fast_d1(nn, kk) : assign_weights_fast_d2(nn, kk));
    });

    m.def("verify_induced", [](int nn, int dd, int kk, const std::string& mode) {
        WeightTable t = assign_weights_generic(nn, dd, kk);
        InducedReport rep = verify_induced(t, mode == "point" ? InducedMode::Point : InducedMode::Type);
        return rep.ok();
    }, py::arg("n"), py::arg("d"), py::arg("k"), py::arg("mode") = "type");

    m.def("positivity", [](int nn, int dd, int kk) {
        WeightTable t = assign_weights_generic(nn, dd, kk);
        py::list out;
        for (const auto& [owner, w] : positivity_report(t)) {
            out.append(py::make_tuple(py::make_tuple(owner.a, owner.b, owner.c),
                                      w.to_fraction_string()));
        }
        return out;
    });

    m.def("sperner", [](int nn) {
        WeightTable t = sperner_table(nn);
        py::dict out = table_to_dict(t);
        out["bound"] = total_weight(t).to_fraction_string();
        out["induced_ok"] = verify_induced(t, InducedMode::Type).ok();
        return out;
    });

    m.def("u_type", [](int nn, int kk, int a, int c) {
        ClosedForms forms(nn, kk);
        return big_to_py(forms.u_type(a, c));
    });
    m.def("f_sum", [](int nn, int kk, int B, int C) {
        ClosedForms forms(nn, kk);
        return big_to_py(forms.f_sum(B, C));
    });
    m.def("s_eval", [](int nn, int kk, int dd, int a, int c, const std::string& via) {
        ClosedForms forms(nn, kk);
        return big_to_py(via == "closed" ? forms.s_closed(dd, a, c) : forms.s_sum(dd, a, c));
    }, py::arg("n"), py::arg("k"), py::arg("d"), py::arg("a"), py::arg("c"), py::arg("via") = "sum");
    m.def("s_diff_positive", [](int nn, int dd, int a, int c) {
        return ClosedForms(nn, 1).s_diff_positive(dd, a, c);
    });
    m.def("layer_mod_sum", [](int nn, int kk, int mm) { return big_to_py(layer_mod_sum(nn, kk, mm)); });

    m.def("check_lemma", [](const std::string& name, int nn, int kk) {
        PropertyReport rep = check_lemma(name, nn, kk);
        py::dict out;
        out["lemma"] = rep.lemma;
        out["n"] = rep.n;
        out["k"] = rep.k;
        out["status"] = rep.status;
        out["note"] = rep.note;
        out["counterexample"] = rep.counterexample;
        out["instances"] = rep.instances;
        return out;
    });
    m.def("lemma_names", [] { return all_lemma_names(); });

    m.def("mis_size", [](int nn, int dd, int kk) {
        ConflictGraph g = build_conflict_graph(nn, dd, kk, Budget::from_env());
        return max_independent_set(g).size;
    });

    m.def("certify", [](int nn, int dd, int kk, bool unique) {
        Verdict v = certify_theorem(nn, dd, kk, Budget::from_env(), unique);
        py::dict out;
        out["status"] = v.status;
        out["proven"] = v.proven;
        out["mis"] = v.mis_size;
        out["candidate"] = big_to_py(v.candidate_size);
        if (v.unique) out["unique"] = *v.unique;
        if (v.maximum_set_count) out["maximum_set_count"] = *v.maximum_set_count;
        return out;
    }, py::arg("n"), py::arg("d"), py::arg("k"), py::arg("unique") = false);

    m.def("render_staircase", [](int nn, int kk, const std::string& mode, int a, int c,
                                 const std::string& fmt) {
        DiagramSpec spec = mode == "footprint" ? diagram_footprint(nn, kk, a, c)
                          : mode == "contributions" ? diagram_contributions(nn, kk, a, c)
                                                    : diagram_plain(nn);
        return fmt == "ascii" ? render_staircase_ascii(spec) : render_staircase_svg(spec);
    }, py::arg("n"), py::arg("k") = 0, py::arg("mode") = "plain", py::arg("a") = 0, py::arg("c") = 0,
       py::arg("format") = "svg");
}
