#include "belyi/json_io.hpp"

#include <sstream>

namespace belyi {

json to_json(const Permutation& p) {
  json arr = json::array();
  for (int i = 0; i < p.degree(); ++i) arr.push_back(p(i) + 1);
  return arr;
}

Permutation permutation_from_json(const json& j) {
  std::vector<int> img;
  for (const auto& v : j) img.push_back(v.get<int>() - 1);
  return Permutation(img);
}

json to_json(const PermutationTriple& t) {
  return json{{"d", t.degree()},
              {"s0", to_json(t.s0())},
              {"s1", to_json(t.s1())},
              {"sInf", to_json(t.sInf())}};
}

PermutationTriple triple_from_json(const json& j) {
  return PermutationTriple(permutation_from_json(j.at("s0")),
                           permutation_from_json(j.at("s1")),
                           permutation_from_json(j.at("sInf")));
}

json to_json(const CycleType& c) { return c.to_string(); }

CycleType cycle_type_from_json(const json& j) { return CycleType::parse(j.get<std::string>()); }

json to_json(const Passport& p) {
  return json{{"genus", p.genus},
              {"groupOrder", p.group_order.get_str()},
              {"groupTag", p.group_tag},
              {"transitive", p.transitive},
              {"classes", {to_json(p.c0), to_json(p.c1), to_json(p.cInf)}}};
}

json to_json(const PolynomialSystem& sys) {
  json vars = json::array();
  std::vector<std::string> names;
  for (const auto& v : sys.vars) {
    vars.push_back(json{{"name", v.name}, {"role", v.role}, {"nonvanishing", v.nonvanishing}});
    names.push_back(v.name);
  }
  json eqs = json::array();
  for (const auto& e : sys.eqs) {
    json terms = json::array();
    for (const auto& [exp, coeff] : e.poly.terms()) {
      json mono = json::object();
      mono["coeff"] = coeff.get_str();
      json exps = json::array();
      for (uint8_t x : exp) exps.push_back((int)x);
      mono["exponents"] = exps;
      terms.push_back(mono);
    }
    eqs.push_back(json{{"provenance", e.provenance},
                       {"monomials", terms},
                       {"text", e.poly.to_string(names)}});
  }
  return json{{"classes", {to_json(sys.c0), to_json(sys.c1), to_json(sys.cInf)}},
              {"degree", sys.degree},
              {"case", sys.case_label},
              {"seedSliced", sys.seed_sliced},
              {"variables", vars},
              {"equations", eqs}};
}

namespace {

json nf_elem_to_json(const NFElem& e) {
  json arr = json::array();
  for (const auto& q : e.coords()) arr.push_back(q.get_str());
  return arr;
}

NFElem nf_elem_from_json(const FieldPtr& K, const json& j) {
  std::vector<mpq_class> c;
  for (const auto& v : j) {
    mpq_class q(v.get<std::string>());
    q.canonicalize();
    c.push_back(q);
  }
  return NFElem(K, std::move(c));
}

json nf_poly_to_json(const NFPoly& f) {
  json arr = json::array();
  for (int i = 0; i <= f.degree(); ++i) arr.push_back(nf_elem_to_json(f.coeff(i)));
  return arr;
}

NFPoly nf_poly_from_json(const FieldPtr& K, const json& j) {
  std::vector<NFElem> c;
  for (const auto& v : j) c.push_back(nf_elem_from_json(K, v));
  return NFPoly(K, std::move(c));
}

}  // namespace

json to_json(const BelyiMapModel& m) {
  json field = json::array();
  for (const auto& z : m.field->minpoly_z().c) field.push_back(z.get_str());
  return json{{"fieldMinPoly", field},
              {"num", nf_poly_to_json(m.num)},
              {"den", nf_poly_to_json(m.den)},
              {"classes", {to_json(m.c0), to_json(m.c1), to_json(m.cInf)}},
              {"genus", 0},
              {"text", m.to_string()}};
}

BelyiMapModel model_from_json(const json& j) {
  ZPoly mp;
  for (const auto& v : j.at("fieldMinPoly")) mp.c.emplace_back(v.get<std::string>());
  mp.normalize();
  FieldPtr K = mp.degree() <= 1 ? NumberField::rationals() : NumberField::create(mp);
  NFPoly num = nf_poly_from_json(K, j.at("num"));
  NFPoly den = nf_poly_from_json(K, j.at("den"));
  auto classes = j.at("classes");
  return BelyiMapModel::make(K, num, den, CycleType::parse(classes[0].get<std::string>()),
                             CycleType::parse(classes[1].get<std::string>()),
                             CycleType::parse(classes[2].get<std::string>()));
}

json to_json(const SolveReport& rep) {
  json trail = json::array();
  for (const auto& t : rep.trail) {
    trail.push_back(json{{"p", t.p},
                         {"extDegree", t.ext_degree},
                         {"case", t.case_label},
                         {"seeds", t.seeds},
                         {"lifted", t.lifted},
                         {"notes", t.notes}});
  }
  json models = json::array();
  for (const auto& m : rep.models) models.push_back(to_json(m));
  return json{{"classes", {to_json(rep.c0), to_json(rep.c1), to_json(rep.cInf)}},
              {"passportTransitive", rep.passport_transitive},
              {"degreeBound", rep.field_degree_bound},
              {"trail", trail},
              {"models", models},
              {"unresolved", rep.unresolved},
              {"complete", rep.complete}};
}

PermutationTriple parse_triple_cycles(const std::string& s0, const std::string& s1,
                                      const std::string& sInf, int degree, bool* repaired) {
  Permutation a = Permutation::from_cycles(s0, degree);
  Permutation b = Permutation::from_cycles(s1, degree);
  Permutation c = Permutation::from_cycles(sInf, degree);
  if (repaired) *repaired = false;
  if ((a * b * c).is_identity()) return PermutationTriple(a, b, c);
  // the other composition convention: valid iff the inverted triple works
  Permutation ai = a.inverse(), bi = b.inverse(), ci = c.inverse();
  if ((ai * bi * ci).is_identity()) {
    if (repaired) *repaired = true;
    return PermutationTriple(ai, bi, ci);
  }
  throw std::invalid_argument("triple product is not the identity under either convention");
}

void parse_classes(const std::string& text, CycleType& c0, CycleType& c1, CycleType& cInf) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == '/') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    throw std::invalid_argument("expected three classes separated by '/'");
  c0 = CycleType::parse(parts[0]);
  c1 = CycleType::parse(parts[1]);
  cInf = CycleType::parse(parts[2]);
  if (c0.degree() != c1.degree() || c0.degree() != cInf.degree())
    throw std::invalid_argument("classes must partition the same degree");
}

}  // namespace belyi
