#include "qschur/json_io.hpp"

namespace qschur {

json to_json(const GaussianRational& x) {
  return json{{"re", GaussianRational::rational_string(x.re())}, {"im", GaussianRational::rational_string(x.im())}};
}

json to_json(const NatMatrix& m) {
  json rows = json::array();
  for (int i = 1; i <= m.n; ++i) {
    json row = json::array();
    for (int j = 1; j <= m.n; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const SuperMatrix& m) { return json{{"even", to_json(m.even)}, {"odd", to_json(m.odd)}}; }

json to_json(const QElement& q) {
  json out = json::array();
  for (const auto& [m, c] : q.terms()) out.push_back(json{{"matrix", to_json(m)}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const SergeevElement& e) {
  json out = json::array();
  for (const auto& [w, mask, c] : e.sorted_terms()) {
    json bits = json::array();
    for (int i = 0; i < e.degree(); ++i) bits.push_back((mask >> i) & 1u);
    out.push_back(json{{"perm", w.images()}, {"mask", bits}, {"coeff", to_json(c)}});
  }
  return out;
}

json to_json(const ASpec& s) { return json{{"matrix", to_json(s.a)}, {"j", s.j}}; }

json to_json(const AComb& c) {
  json out = json::array();
  for (const auto& [s, v] : c) out.push_back(json{{"matrix", to_json(s.a)}, {"j", s.j}, {"coeff", to_json(v)}});
  return out;
}

json to_json(const TruncatedFamily& f) {
  json out = json::array();
  for (int r = 0; r <= f.R(); ++r) out.push_back(json{{"r", r}, {"terms", to_json(f.level(r))}});
  return out;
}

json to_json(const IdentitySuiteReport& rep) {
  json ids = json::object();
  for (const auto& [name, t] : rep.by_name)
    ids[name] = json{{"cases", t.cases}, {"passed", t.passed}, {"failed", t.failed}, {"examples", t.failures}};
  return json{{"cases", rep.cases}, {"failures", rep.failures}, {"identities", ids}};
}

json to_json(const RelationReport& rep) {
  return json{{"suite", rep.suite},       {"n", rep.n},           {"R", rep.R},
              {"instances", rep.instances}, {"checks", rep.checks}, {"groups", rep.per_group},
              {"failures", rep.failures}};
}

json to_json(const TriangularResult& t) {
  return json{{"matrix", to_json(t.a)},
              {"R", t.R},
              {"leading_sign", t.leading_sign},
              {"expansion", to_json(t.expansion)},
              {"degreewise_match", t.degreewise_match},
              {"expansion_match", t.expansion_match},
              {"violations", t.violations},
              {"ok", t.ok()}};
}

// ---- parsing

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

GaussianRational scalar_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return GaussianRational(j.get<long>());
    if (j.is_string()) return GaussianRational::parse(j.get<std::string>(), "0");
    if (j.is_object()) {
      std::string re = j.contains("re") ? j.at("re").get<std::string>() : "0";
      std::string im = j.contains("im") ? j.at("im").get<std::string>() : "0";
      return GaussianRational::parse(re, im);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad scalar: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("bad scalar: ") + e.what());
  }
  throw ParseError("bad scalar: expected an integer, a \"p/q\" string or {\"re\",\"im\"}");
}

static NatMatrix nat_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ParseError(std::string(what) + ": expected a non-empty square array");
  int n = static_cast<int>(j.size());
  NatMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(std::string(what) + ": rows must have length " + std::to_string(n));
    for (int k = 0; k < n; ++k) {
      if (!row[k].is_number_integer()) throw ParseError(std::string(what) + ": entries must be integers");
      m(i + 1, k + 1) = row[k].get<int>();
    }
  }
  return m;
}

SuperMatrix super_matrix_from_json(const json& j, int n) {
  if (!j.is_object() || !j.contains("even") || !j.contains("odd"))
    throw ParseError("super matrix: expected {\"even\": [[..]], \"odd\": [[..]]}");
  NatMatrix e = nat_from_json(j.at("even"), "even"), o = nat_from_json(j.at("odd"), "odd");
  if (e.n != o.n) throw ParseError("super matrix: even and odd parts differ in size");
  if (n > 0 && e.n != n) throw ParseError("super matrix: expected size " + std::to_string(n));
  try {
    return SuperMatrix(e, o);
  } catch (const InvalidArgument& ex) {
    throw ParseError(std::string("super matrix: ") + ex.what());
  }
}

QElement qelement_from_json(const json& j, int n, int r) {
  if (!j.is_array()) throw ParseError("element: expected an array of terms");
  QElement q(n, r);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("matrix")) throw ParseError("element term: expected {\"matrix\", \"coeff\"}");
    SuperMatrix m = super_matrix_from_json(t.at("matrix"), n);
    if (m.total() != r) throw ParseError("element term: matrix is not in degree " + std::to_string(r));
    q.add_term(m, t.contains("coeff") ? scalar_from_json(t.at("coeff")) : GaussianRational(1));
  }
  return q;
}

SergeevElement sergeev_from_json(const json& j, int r) {
  if (!j.is_array()) throw ParseError("Sergeev element: expected an array of terms");
  SergeevElement out(r);
  try {
    for (const auto& t : j) {
      auto imgs = t.at("perm").get<std::vector<int>>();
      if (static_cast<int>(imgs.size()) != r) throw ParseError("Sergeev term: perm has the wrong length");
      CliffordMask mask = 0;
      if (t.contains("mask")) {
        auto bits = t.at("mask").get<std::vector<int>>();
        if (static_cast<int>(bits.size()) != r) throw ParseError("Sergeev term: mask has the wrong length");
        for (int i = 0; i < r; ++i)
          if (bits[i]) mask |= CliffordMask{1} << i;
      }
      GaussianRational c = t.contains("coeff") ? scalar_from_json(t.at("coeff")) : GaussianRational(1);
      out += SergeevElement::monomial(Permutation::from_images(imgs), mask, c);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("Sergeev element: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("Sergeev element: ") + e.what());
  }
  return out;
}

}  // namespace qschur
