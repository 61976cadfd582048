#include "dist3/json_io.hpp"

#include <json.hpp>

#include "dist3/parser.hpp"

namespace dist3 {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return j;
}

constexpr const char* kPluckerKeys[6] = {"01", "02", "03", "12", "13", "23"};

template <class F>
TwistedForm<F> build_form(F field, const FormSpec& spec) {
  if (spec.has_plucker) {
    std::array<Polynomial<F>, 6> b;
    for (int i = 0; i < 6; ++i) {
      auto q = parse_polynomial(spec.plucker[static_cast<std::size_t>(i)]);
      if (!q.is_zero() && (!q.homogeneous() || q.total_degree() != spec.degree))
        throw InputError("plucker entry " + std::string(kPluckerKeys[i]) +
                         " must be homogeneous of degree " + std::to_string(spec.degree));
      b[static_cast<std::size_t>(i)] = convert_poly(q, field);
    }
    auto w = from_plucker(field, b);
    if (w.degree != spec.degree)
      throw InputError("plucker coefficients do not match the declared degree");
    return w;
  }
  std::array<Polynomial<F>, 4> a;
  for (int i = 0; i < 4; ++i)
    a[static_cast<std::size_t>(i)] =
        convert_poly(parse_polynomial(spec.coefficients[static_cast<std::size_t>(i)]), field);
  auto w = make_form(field, std::move(a));
  if (w.degree != spec.degree)
    throw InputError("coefficients have degree " + std::to_string(w.degree + 1) +
                     ", which does not match the declared degree " +
                     std::to_string(spec.degree));
  return w;
}

}  // namespace

FormSpec form_spec_from_json(const std::string& json_text) {
  json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_integer())
    throw InputError("form JSON must be an object with an integer \"degree\"");
  FormSpec spec;
  spec.degree = j["degree"].get<int>();
  if (j.contains("plucker")) {
    const auto& p = j["plucker"];
    if (!p.is_object()) throw InputError("\"plucker\" must be an object");
    spec.has_plucker = true;
    for (int i = 0; i < 6; ++i) {
      const char* key = kPluckerKeys[i];
      spec.plucker[static_cast<std::size_t>(i)] =
          p.contains(key) ? p[key].get<std::string>() : "0";
    }
  } else if (j.contains("coefficients")) {
    const auto& c = j["coefficients"];
    if (!c.is_array() || c.size() != 4)
      throw InputError("\"coefficients\" must be an array of 4 polynomial strings");
    spec.has_plucker = false;
    for (int i = 0; i < 4; ++i)
      spec.coefficients[static_cast<std::size_t>(i)] =
          c[static_cast<std::size_t>(i)].get<std::string>();
  } else {
    throw InputError("form JSON needs either \"plucker\" or \"coefficients\"");
  }
  return spec;
}

std::string form_spec_to_json(const FormSpec& spec) {
  json j;
  j["degree"] = spec.degree;
  if (spec.has_plucker) {
    json p = json::object();
    for (int i = 0; i < 6; ++i)
      p[kPluckerKeys[i]] = spec.plucker[static_cast<std::size_t>(i)];
    j["plucker"] = p;
  } else {
    j["coefficients"] = spec.coefficients;
  }
  return j.dump(2);
}

DistributionReport analyze_form_json(const std::string& form_json, const AnalyzeOptions& opts) {
  FormSpec spec = form_spec_from_json(form_json);
  if (opts.field.prime) return analyze(build_form(PrimeField(opts.field.p), spec), opts);
  return analyze(build_form(RationalField{}, spec), opts);
}

std::string report_to_json(const DistributionReport& report, int indent) {
  json j;
  j["degree"] = report.degree;
  j["chern"] = {report.chern.c1, report.chern.c2, report.chern.c3};
  if (report.scheme.curve_empty) {
    j["curve"] = nullptr;
  } else {
    j["curve"] = {{"degree", report.scheme.curve_degree},
                  {"genus", report.scheme.curve_genus},
                  {"ideal", report.scheme.curve_ideal}};
  }
  j["residual_length"] = report.scheme.residual_length;
  j["residual_ideal"] = report.scheme.residual_ideal;
  j["singular_scheme"] = {{"raw_ideal", report.scheme.raw_ideal},
                          {"saturated_ideal", report.scheme.saturated_ideal},
                          {"dimension", report.scheme.saturated_dim}};
  switch (report.stability) {
    case Stability::Stable:
      j["stable"] = true;
      break;
    case Stability::NotStable:
      j["stable"] = false;
      break;
    default:
      j["stable"] = nullptr;
  }
  j["h0_tangent"] = report.h0_tangent_value;
  j["integrable"] = report.integrable;
  j["hilbert_consistent"] = report.hilbert_consistent;
  j["tangent_hilbert_polynomial"] = report.tangent_hp_formula;
  if (!report.hilbert_consistent)
    j["tangent_hilbert_polynomial_from_sequence"] = report.tangent_hp_sequence;
  j["field"] = report.field_name;
  if (report.probabilistic_field) j["probabilistic_field_reduction"] = true;
  j["seed"] = report.seed;
  return j.dump(indent);
}

std::vector<std::string> ideal_strings_from_json(const std::string& json_text) {
  json j = parse_json(json_text);
  if (j.is_object() && j.contains("generators")) j = j["generators"];
  if (!j.is_array()) throw InputError("ideal JSON must be a list of polynomial strings");
  std::vector<std::string> gens;
  for (const auto& g : j) {
    if (!g.is_string()) throw InputError("ideal JSON must be a list of polynomial strings");
    gens.push_back(g.get<std::string>());
  }
  return gens;
}

namespace {

template <class F>
QPoly ideal_hp(F field, const std::vector<std::string>& gen_strings, Budget& budget) {
  std::vector<Polynomial<F>> gens;
  for (const auto& s : gen_strings) gens.push_back(convert_poly(parse_polynomial(s), field));
  return hilbert_polynomial(Ideal<F>(field, std::move(gens)), budget);
}

}  // namespace

QPoly hilbert_polynomial_of_ideal_json(const std::string& json_text,
                                       const AnalyzeOptions& opts) {
  auto gens = ideal_strings_from_json(json_text);
  Budget budget{opts.budget, 0};
  if (opts.field.prime) return ideal_hp(PrimeField(opts.field.p), gens, budget);
  return ideal_hp(RationalField{}, gens, budget);
}

std::string moduli_derivation_to_json(int indent) {
  auto d = moduli::moduli_dim_335();
  json steps = json::array();
  for (const auto& s : d.steps)
    steps.push_back({{"step", s.label}, {"value", s.value}, {"provenance", s.provenance}});
  json j = {{"case", "D^st(3,3,5)"}, {"steps", steps}, {"dimension", d.result}};
  return j.dump(indent);
}

}  // namespace dist3
