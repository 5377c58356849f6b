#include "diagsurf/export.hpp"

#include <sstream>

namespace diagsurf {

const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::Scan: return "scan";
    case Provenance::Direct: return "direct";
    case Provenance::Recursive: return "recursive";
    case Provenance::Complement: return "complement";
  }
  return "unknown";
}

namespace {

void field_header(std::ostream& os, const Field& field) {
  os << "# field F_" << field.size() << ": p=" << field.p() << " m=" << field.m() << " modulus=";
  const auto& mod = field.spec().modulus;
  for (std::size_t i = 0; i < mod.size(); ++i) os << (i ? "," : "") << mod[i];
  os << " (coefficients c_0..c_m)\n";
  os << "# element code = sum c_i p^i for the element sum c_i x^i mod modulus; alpha = x\n";
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

Json strings(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

Json rationals(const SeriesQ& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(c.get_str());
  return out;
}

}  // namespace

std::string point_matrix_csv(const Field& field, const PointMatrix& points) {
  std::ostringstream os;
  os << "# diagsurf point matrix: one row per projective point, first nonzero coordinate = 1\n";
  field_header(os, field);
  os << "# p=" << field.p();
  if (field.m() % 2 == 0) os << ",r=" << field.m() / 2;
  os << ",s=" << points.dim << ",points=" << points.size() << ",provenance=" << to_string(points.provenance)
     << "\n";
  for (unsigned i = 0; i <= points.dim; ++i) os << (i ? "," : "") << "x" << i;
  os << "\n";
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto pt = points.point(j);
    for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? "," : "") << pt[i].code;
    os << "\n";
  }
  return os.str();
}

PointMatrix parse_point_matrix_csv(const std::string& text) {
  PointMatrix out;
  std::istringstream is(text);
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') {
      const auto pos = line.find("provenance=");
      if (pos != std::string::npos) {
        const std::string tag = line.substr(pos + 11);
        for (Provenance p : {Provenance::Scan, Provenance::Direct, Provenance::Recursive, Provenance::Complement}) {
          if (tag == to_string(p)) out.provenance = p;
        }
      }
      continue;
    }
    const auto cells = split(line, ',');
    if (!have_header) {
      if (cells.empty()) throw Error(ErrorKind::BadParams, "missing column header");
      out.dim = static_cast<unsigned>(cells.size()) - 1;
      have_header = true;
      continue;
    }
    if (cells.size() != out.width()) throw Error(ErrorKind::BadParams, "ragged point row: " + line);
    for (const auto& c : cells) out.coords.push_back(Element{static_cast<std::uint32_t>(std::stoul(c))});
  }
  return out;
}

std::string generator_matrix_csv(const Field& field, const GeneratorMatrix& g) {
  std::ostringstream os;
  os << "# diagsurf generator matrix: one row per monomial, one column per point\n";
  field_header(os, field);
  os << "# rows=" << g.rows << ",cols=" << g.cols << "\n";
  for (std::size_t j = 0; j < g.cols; ++j) os << (j ? "," : "") << "c" << j;
  os << "\n";
  for (std::size_t i = 0; i < g.rows; ++i) {
    for (std::size_t j = 0; j < g.cols; ++j) os << (j ? "," : "") << g.at(i, j).code;
    os << "\n";
  }
  return os.str();
}

std::string spectrum_csv(const WeightDistribution& wd) {
  std::ostringstream os;
  os << "# n=" << wd.n << ",k=" << wd.kdim << "\n";
  os << "weight,count\n";
  for (const auto& [w, c] : wd.counts) os << w << "," << c << "\n";
  return os.str();
}

Json to_json(const CountTriple& c) {
  return Json{{"N0", to_decimal(c.N0)}, {"N1", to_decimal(c.N1)}, {"N2", to_decimal(c.N2)}};
}

Json to_json(const BoundReport& b) {
  return Json{{"value", to_decimal(b.value)},         {"center", to_decimal(b.center)},
              {"deviation", to_decimal(b.deviation)}, {"bound", to_decimal(b.bound)},
              {"slack", to_decimal(b.slack)},         {"met", b.met},
              {"equality", b.equality}};
}

Json to_json(const IdentityReport& r) {
  return Json{{"identity", r.name}, {"lhs", to_decimal(r.lhs)}, {"rhs", to_decimal(r.rhs)}, {"holds", r.holds}};
}

Json to_json(const ValueProfile& v) {
  Json j{{"Q", v.Q}, {"d", v.d}, {"s", v.s}, {"zero_count", to_decimal(v.zero_count)}};
  j["unit_count"] = v.unit_count ? Json(to_decimal(*v.unit_count)) : Json(nullptr);
  j["nonunit_count"] = v.nonunit_count ? Json(to_decimal(*v.nonunit_count)) : Json(nullptr);
  j["class_constant"] = v.class_constant;
  j["counts"] = strings(v.counts);
  return j;
}

Json to_json(const FactoredRational& z) { return Json::parse(z.to_json()); }

Json to_json(const RatioReport& r) {
  return Json{{"p", r.p},
              {"r", r.r},
              {"d", r.d},
              {"s", r.s},
              {"K", r.K},
              {"quotient", rationals(r.quotient)},
              {"class_one_exp", rationals(r.class_one)},
              {"closed_form", rationals(r.closed_form)},
              {"equal", r.equal}};
}

Json to_json(const TowerReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"k", row.k},
                        {"oracle", to_decimal(row.oracle)},
                        {"literal_zeta", to_decimal(row.literal_zeta)},
                        {"literal_zeta_diff", to_decimal(row.literal_zeta - row.oracle)},
                        {"printed_sum", to_decimal(row.printed_sum)},
                        {"printed_sum_diff", to_decimal(row.printed_sum - row.oracle)},
                        {"printed_split", to_decimal(row.printed_split)},
                        {"printed_split_diff", to_decimal(row.printed_split - row.oracle)}});
  }
  return Json{{"p", r.p}, {"r", r.r}, {"s", r.s}, {"literal_zeta", to_json(r.literal_zeta)}, {"rows", rows}};
}

Json to_json(const RecursionReport& r) {
  Json steps = Json::array();
  for (const auto& st : r.steps) {
    steps.push_back(Json{{"s", st.s},
                         {"direct_size", st.direct_size},
                         {"recursive_size", st.recursive_size},
                         {"closed_form", to_decimal(st.closed_form)},
                         {"bose_literal", st.bose_literal.get_str()},
                         {"bose_corrected", to_decimal(st.bose_corrected)},
                         {"sets_equal", st.sets_equal},
                         {"recursion_holds", st.recursion_holds},
                         {"closed_form_matches", st.closed_form_matches},
                         {"certificate_valid", st.certificate_valid},
                         {"bose_literal_matches", st.bose_literal_matches},
                         {"bose_corrected_matches", st.bose_corrected_matches},
                         {"pass", st.pass()}});
  }
  return Json{{"p", r.p}, {"r", r.r}, {"steps", steps}, {"pass", r.pass()}};
}

Json to_json(const WeightDistribution& wd) {
  Json weights = Json::object();
  for (const auto& [w, c] : wd.counts) weights[std::to_string(w)] = c;
  return Json{{"n", wd.n}, {"k", wd.kdim}, {"weights", weights}};
}

Json to_json(const TwoWeightReport& r) {
  auto big_set = [](const std::set<BigInt>& s) {
    Json out = Json::array();
    for (const auto& v : s) out.push_back(to_decimal(v));
    return out;
  };
  return Json{{"p", r.p},
              {"r", r.r},
              {"s", r.s},
              {"spectrum", to_json(r.spectrum)},
              {"observed_weights", r.observed},
              {"corrected_weights", big_set(r.corrected)},
              {"literal_weights", big_set(r.literal)},
              {"two_weights", r.two_weights},
              {"corrected_matches", r.corrected_matches},
              {"literal_matches", r.literal_matches}};
}

Json to_json(const TssCodeReport& r) {
  return Json{{"p", r.p},           {"r", r.r},   {"s", r.s},
              {"h", r.h},           {"n", r.n},   {"k", r.kdim},
              {"min_weight", r.min_weight},       {"bound", to_decimal(r.bound)},
              {"met", r.met},       {"equality", r.equality}};
}

}  // namespace diagsurf
