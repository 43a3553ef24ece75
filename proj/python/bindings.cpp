#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "magnus/decide.hpp"
#include "magnus/error.hpp"
#include "magnus/kernel.hpp"
#include "magnus/presentation.hpp"
#include "magnus/special.hpp"

namespace py = pybind11;
using namespace magnus;

namespace {

// Indexed words are kernel words, anything else is rewritten from H.
KernelWord kernel_input(Kernel const& kernel, std::string const& text) {
  Word const w = parse_word(text);
  bool const indexed = std::any_of(w.begin(), w.end(),
                                   [](Letter const& l) { return l.sym.index.has_value(); });
  return indexed ? kernel.from_word(w) : kernel.rs_rewrite(w);
}

Route route_from(std::string const& name) {
  if (name == "auto") return Route::Auto;
  if (name == "magnus") return Route::MagnusA;
  if (name == "swap") return Route::Swap;
  throw py::value_error("route must be 'auto', 'magnus' or 'swap'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Normal closures in <a, b, y | [a^k, b] u v>";

  static py::exception<Error> error(m, "MagnusError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (Error const& e) {
      py::set_error(error, (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<FamilyPresentation>(m, "Presentation")
      .def(py::init([](std::string magnus_gen, std::string b_gen, std::vector<std::string> y_gens,
                       std::int64_t k, std::string const& u, std::string const& v) {
             return validate({std::move(magnus_gen), std::move(b_gen), std::move(y_gens), k,
                              parse_word(u), parse_word(v)});
           }),
           py::arg("magnus_gen"), py::arg("b_gen"), py::arg("y_gens"), py::arg("k"), py::arg("u"),
           py::arg("v"))
      .def_static("surface", &from_surface_genus, py::arg("genus"), py::arg("u_squares") = 1)
      .def_static("from_config", [](std::string const& text) { return parse_presentation_config(text); })
      .def_property_readonly("magnus_gen", &FamilyPresentation::magnus_gen)
      .def_property_readonly("b_gen", &FamilyPresentation::b_gen)
      .def_property_readonly("y_gens", &FamilyPresentation::y_gens)
      .def_property_readonly("k", &FamilyPresentation::k)
      .def_property_readonly("u", [](FamilyPresentation const& p) { return to_string(p.u()); })
      .def_property_readonly("v", [](FamilyPresentation const& p) { return to_string(p.v()); })
      .def_property_readonly("relator", [](FamilyPresentation const& p) { return to_string(p.relator()); })
      .def("swap", &swap_presentation)
      .def("psi", [](FamilyPresentation const& p, std::string const& w, std::int64_t n) {
             return to_string(psi_apply(p, parse_word(w), n));
           }, py::arg("word"), py::arg("n") = 1)
      .def("__eq__", [](FamilyPresentation const& a, FamilyPresentation const& b) { return a == b; })
      .def("__repr__", &describe);

  m.def("reduce", [](std::string const& w) { return to_string(parse_word(w)); });
  m.def("conjugate_free", [](std::string const& a, std::string const& b) -> std::optional<std::string> {
    auto h = is_conjugate_free(parse_word(a), parse_word(b));
    if (!h) return std::nullopt;
    return to_string(*h);
  });

  m.def("is_trivial", [](FamilyPresentation const& p, std::string const& w) {
    Kernel const kernel(p);
    Word const word = parse_word(w);
    bool const indexed = std::any_of(word.begin(), word.end(),
                                     [](Letter const& l) { return l.sym.index.has_value(); });
    return indexed ? kernel.is_trivial(kernel.from_word(word)) : kernel.is_trivial_in_H(word);
  });
  m.def("rs_rewrite", [](FamilyPresentation const& p, std::string const& w) {
    Kernel const kernel(p);
    return to_string(kernel.to_word(kernel.rs_rewrite(parse_word(w))));
  });
  m.def("canonicalize", [](FamilyPresentation const& p, std::string const& w) {
    Kernel const kernel(p);
    return to_string(kernel.to_word(kernel.canonicalize(kernel_input(kernel, w)).word()));
  });
  m.def("width", [](FamilyPresentation const& p, std::string const& w) {
    Kernel const kernel(p);
    WidthInfo const i = kernel.alpha_omega(kernel_input(kernel, w));
    return py::make_tuple(i.alpha, i.omega, i.width);
  });
  m.def("specialize", [](FamilyPresentation const& p, std::string const& w, std::int64_t psi_cap) {
    Kernel const kernel(p);
    SpecialElement const g = specialize(kernel, kernel_input(kernel, w), {psi_cap, 0});
    py::dict out;
    out["element"] = to_string(kernel.to_word(g.element));
    out["alpha"] = g.alpha;
    out["omega"] = g.omega;
    out["width"] = g.width;
    out["pieces"] = g.pieces.size();
    out["conjugator"] = to_string(g.conjugator);
    out["psi_power"] = g.psi_power;
    return out;
  }, py::arg("presentation"), py::arg("word"), py::arg("psi_cap") = 64);

  py::class_<Verdict>(m, "Verdict")
      .def(py::init([](int sign, std::string const& conjugator) {
             Verdict v;
             v.kind = VerdictKind::SameClosure;
             v.sign = sign;
             v.conjugator = parse_word(conjugator);
             return v;
           }),
           py::arg("sign"), py::arg("conjugator"))
      .def_property_readonly("same", &Verdict::same)
      .def_readonly("sign", &Verdict::sign)
      .def_property_readonly("conjugator", [](Verdict const& v) { return to_string(v.conjugator); })
      .def_property_readonly("g_conjugator", [](Verdict const& v) -> std::optional<std::string> {
        if (!v.g_conjugator) return std::nullopt;
        return to_string(*v.g_conjugator);
      })
      .def_property_readonly("reason", [](Verdict const& v) -> std::optional<std::string> {
        if (!v.reason) return std::nullopt;
        return std::string(reason_name(*v.reason));
      })
      .def_property_readonly("ambient", [](Verdict const& v) {
        return v.ambient == Ambient::Free ? "free" : (v.ambient == Ambient::G ? "G" : "H");
      })
      .def_readonly("psi_power", &Verdict::psi_power)
      .def("__repr__", [](Verdict const& v) {
        if (!v.same()) return "Verdict(different, " + std::string(reason_name(*v.reason)) + ")";
        return "Verdict(same, sign=" + std::to_string(v.sign) + ", conjugator='" +
               to_string(v.conjugator) + "')";
      });

  m.def("free_magnus", [](std::string const& r, std::string const& s) {
    return free_magnus(parse_word(r), parse_word(s));
  });
  m.def("verify_free_certificate", [](std::string const& r, std::string const& s, Verdict const& v) {
    return verify_free_certificate(parse_word(r), parse_word(s), v);
  });
  m.def("magnus_same_closure",
        [](FamilyPresentation const& p, std::string const& r, std::string const& s,
           std::string const& route, std::int64_t psi_cap) {
          return magnus_same_closure(p, parse_word(r), parse_word(s), {route_from(route), psi_cap});
        },
        py::arg("presentation"), py::arg("r"), py::arg("s"), py::arg("route") = "auto",
        py::arg("psi_cap") = 64);
  m.def("verify_certificate", [](FamilyPresentation const& p, std::string const& r,
                                 std::string const& s, Verdict const& v) {
    return verify_certificate(p, parse_word(r), parse_word(s), v);
  });
  m.def("nc_member_bounded",
        [](std::string const& target, std::string const& r, std::optional<FamilyPresentation> const& p,
           std::optional<std::vector<std::string>> alphabet, std::int64_t depth, std::int64_t conj_len) {
          Word const t = parse_word(target), rr = parse_word(r);
          std::vector<std::string> names;
          if (alphabet) {
            names = *alphabet;
          } else if (p) {
            names = p->generators();
          } else {
            std::set<std::string> seen;
            for (Word const* w : {&t, &rr}) {
              for (Letter const& l : *w) seen.insert(l.sym.name);
            }
            names.assign(seen.begin(), seen.end());
          }
          return nc_member_bounded(t, rr, p ? &*p : nullptr, names, {depth, conj_len});
        },
        py::arg("target"), py::arg("r"), py::arg("presentation") = py::none(),
        py::arg("alphabet") = py::none(), py::arg("depth") = 2, py::arg("conj_len") = 2);
}
