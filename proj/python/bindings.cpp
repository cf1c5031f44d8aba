#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relogic/classify.hpp"
#include "relogic/constructions.hpp"
#include "relogic/logic.hpp"

namespace py = pybind11;
using namespace relogic;

namespace {

Dfa compile_checked(const std::string& regex, const std::string& alphabet) {
  return compile(regex, Alphabet(alphabet));
}

Monoid syntactic(const std::string& regex, const std::string& alphabet) {
  return syntactic_monoid(regex, Alphabet(alphabet));
}

}  // namespace

PYBIND11_MODULE(relogic, m) {
  m.doc() = "Syntactic monoids and logical classification of regular languages";

  py::register_exception<ParseError>(m, "RegexOrFormulaError");
  py::register_exception<BudgetError>(m, "BudgetError");
  py::register_exception<ValueError>(m, "InputError");

  py::class_<Dfa>(m, "Dfa")
      .def_property_readonly("num_states", [](const Dfa& d) { return d.num_states; })
      .def("accepts", [](const Dfa& d, const std::string& w) { return d.accepts(w); })
      .def("enumerate", [](const Dfa& d, std::size_t max_len) { return enumerate_words(d, max_len); });

  py::class_<Monoid>(m, "Monoid")
      .def_property_readonly("size", [](const Monoid& m_) { return m_.size; })
      .def_property_readonly("identity", [](const Monoid& m_) { return m_.identity; })
      .def_property_readonly("table", [](const Monoid& m_) { return m_.table; })
      .def_property_readonly("reps", [](const Monoid& m_) { return m_.reps; })
      .def("mul", [](const Monoid& m_, Element a, Element b) { return m_.mul(a, b); })
      .def("eval_word", [](const Monoid& m_, const std::string& w) { return m_.eval_word(w); })
      .def("idempotents", &Monoid::idempotents)
      .def("element_name", &Monoid::element_name)
      .def("__len__", [](const Monoid& m_) { return m_.size; });

  m.def("compile_regex", &compile_checked, py::arg("regex"), py::arg("alphabet"),
        "Compile a regular expression to a minimal-on-demand complete DFA");
  m.def("minimize", [](const Dfa& d) { return minimize(d); });
  m.def("syntactic_monoid", &syntactic, py::arg("regex"), py::arg("alphabet"));
  m.def("neutral_letters", [](const Monoid& m_) {
    std::string out;
    for (char c : neutral_letters(m_)) out += c;
    return out;
  });

  m.def("check_variety",
        [](const Monoid& m_, const std::string& variety) {
          auto v = variety_from_string(variety);
          if (!v) throw ValueError("unknown variety: " + variety);
          Verdict verdict = check_variety(m_, *v);
          return py::make_tuple(verdict.member,
                                verdict.witness ? describe(*verdict.witness, m_) : std::string());
        },
        py::arg("monoid"), py::arg("variety"));

  m.def("classify_json",
        [](const std::string& regex, const std::string& alphabet) {
          Alphabet a(alphabet);
          Monoid mo = syntactic_monoid(regex, a);
          ClassificationReport report = classify(mo);
          report.language = regex;
          report.alphabet = alphabet;
          return report_to_json(report, mo);
        },
        py::arg("regex"), py::arg("alphabet"));

  m.def("eval_fo",
        [](const std::string& formula, const std::string& alphabet, const std::string& word,
           const std::map<std::string, int>& pointers) {
          Alphabet a(alphabet);
          a.require_word(word);
          return eval_fo(parse_fo(formula, a), word, pointers);
        },
        py::arg("formula"), py::arg("alphabet"), py::arg("word"),
        py::arg("pointers") = std::map<std::string, int>{});

  m.def("eval_ltl",
        [](const std::string& formula, const std::string& alphabet, const std::string& word,
           int position) {
          Alphabet a(alphabet);
          a.require_word(word);
          return eval_ltl(parse_ltl(formula, a), word, position);
        },
        py::arg("formula"), py::arg("alphabet"), py::arg("word"), py::arg("position") = 0);

  m.def("agree",
        [](const std::string& formula, const std::string& regex, const std::string& alphabet,
           std::size_t max_len, bool is_ltl) -> std::optional<std::string> {
          Alphabet a(alphabet);
          Dfa dfa = compile(regex, a);
          if (is_ltl) return agreement(parse_ltl(formula, a), dfa, max_len);
          return agreement(parse_fo_sentence(formula, a), dfa, max_len);
        },
        py::arg("formula"), py::arg("regex"), py::arg("alphabet"), py::arg("max_len") = 8,
        py::arg("ltl") = false,
        "None if the sentence agrees with the regex up to max_len, else the "
        "shortest disagreeing word");
}
