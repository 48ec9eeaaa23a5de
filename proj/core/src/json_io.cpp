#include "ppart/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace ppart {

namespace {

using nlohmann::ordered_json;

ordered_json coeff_json(const CoeffElement& c) {
  ordered_json monos = ordered_json::array();
  for (const auto& m : c.monomials()) {
    ordered_json gauss = ordered_json::array();
    for (const auto& g : m.gauss) {
      gauss.push_back(ordered_json{{"t", g.symbol.t}, {"c", g.symbol.c}, {"pow", g.pow}});
    }
    monos.push_back(ordered_json{{"int", m.coeff}, {"q", m.q_exp}, {"gauss", gauss}});
  }
  return ordered_json{{"monomials", monos}};
}

}  // namespace

std::string coeff_to_json(const CoeffElement& c) { return coeff_json(c).dump(); }

CoeffElement coeff_from_json(std::string_view text, int n) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed coefficient JSON: ") + e.what());
  }
  std::vector<Monomial> out;
  try {
    for (const auto& m : j.at("monomials")) {
      Monomial x;
      x.coeff = m.at("int").get<std::int64_t>();
      x.q_exp = m.at("q").get<int>();
      for (const auto& g : m.at("gauss")) {
        GaussSymbol s{g.at("t").get<int>(), n, g.at("c").get<int>()};
        if (s.c < 0 || s.c >= n) throw InvalidInput("gauss residue out of range for n=" + std::to_string(n));
        x.gauss.push_back(GaussPower{s, g.at("pow").get<int>()});
      }
      out.push_back(std::move(x));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("coefficient JSON has the wrong shape: ") + e.what());
  }
  return CoeffElement::from_monomials(std::move(out));
}

std::string polynomial_to_json(const RootSystem& rs, const Weight& lam, int n, const WeightPolynomial& p) {
  ordered_json doc;
  doc["family"] = std::string(1, family_letter(rs.family()));
  doc["rank"] = rs.rank();
  doc["n"] = n;
  doc["lambda"] = lam.to_vector();
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : p.sorted_terms(WeightOrder(rs))) {
    terms.push_back(ordered_json{{"wt", w.to_vector()}, {"coeff", coeff_json(c)}});
  }
  doc["terms"] = terms;
  return doc.dump();
}

std::string polynomial_to_text(const RootSystem& rs, const WeightPolynomial& p) {
  const auto terms = p.sorted_terms(WeightOrder(rs));
  std::size_t width = 6;
  std::vector<std::string> labels;
  for (const auto& [w, c] : terms) {
    labels.push_back(to_string(w));
    width = std::max(width, labels.back().size());
  }
  std::ostringstream os;
  os << "weight" << std::string(width - 6 + 2, ' ') << "coefficient\n";
  for (std::size_t k = 0; k < terms.size(); ++k) {
    os << labels[k] << std::string(width - labels[k].size() + 2, ' ') << to_string(terms[k].second) << '\n';
  }
  return os.str();
}

}  // namespace ppart
