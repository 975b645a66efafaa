#include <istream>
#include <ostream>

#include <json.hpp>

#include "boolgb/groebner.hpp"

namespace boolgb {

void write_basis_json(std::ostream& out, const GroebnerBasis& basis) {
  out << "{\"n\": " << basis.n << ", \"mode\": \"" << to_string(basis.mode) << "\", \"order\": \""
      << to_string(basis.order.scheme) << "\", \"elements\": [";
  std::vector<Polynomial> elements = basis.elements;
  sort_by_leading_monomial(elements, basis.order);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    out << (i ? ",\n  " : "\n  ") << '[';
    auto terms = sorted_terms(elements[i], basis.order);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      if (t) out << ',';
      out << '[';
      auto powers = terms[t].powers();
      for (std::size_t k = 0; k < powers.size(); ++k) {
        if (k) out << ',';
        out << '[' << powers[k].var << ',' << powers[k].exp << ']';
      }
      out << ']';
    }
    out << ']';
  }
  out << (elements.empty() ? "]}\n" : "\n]}\n");
}

GroebnerBasis read_basis_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed basis dump: ") + e.what());
  }
  try {
    GroebnerBasis basis;
    basis.n = doc.at("n").get<std::uint32_t>();
    basis.mode = mode_from_string(doc.at("mode").get<std::string>());
    basis.order = MonomialOrder{order_from_string(doc.at("order").get<std::string>())};
    const VarIndex num_vars = 3 * basis.n;
    for (const auto& element : doc.at("elements")) {
      std::vector<Monomial> terms;
      for (const auto& monomial : element) {
        std::vector<VarPower> powers;
        for (const auto& pair : monomial) {
          auto var = pair.at(0).get<VarIndex>();
          auto exp = pair.at(1).get<Exponent>();
          if (var >= num_vars || exp == 0) throw Error("basis dump has an invalid variable power");
          powers.push_back({var, exp});
        }
        terms.push_back(Monomial::from_powers(std::move(powers)));
      }
      Polynomial f = Polynomial::from_terms(std::move(terms), basis.mode);
      if (!f.is_zero()) basis.elements.push_back(std::move(f));
    }
    sort_by_leading_monomial(basis.elements, basis.order);
    return basis;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed basis dump: ") + e.what());
  }
}

}  // namespace boolgb
