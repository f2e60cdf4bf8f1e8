#include "shl/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "shl/error.hpp"

namespace shl {

using nlohmann::json;

namespace {

Mat read_matrix(const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw InputError(what + ": expected " + std::to_string(n) + " rows");
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw InputError(what + ": row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < n; ++k) {
      const json& e = j[i][k];
      const std::string at = what + "[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      if (e.is_string()) {
        try {
          m(i, k) = parse_rat(e.get<std::string>());
        } catch (const InputError& err) {
          throw InputError(at + ": " + err.what());
        }
      } else if (e.is_number_integer()) {
        m(i, k) = e.get<long>();
      } else {
        throw InputError(at + ": entries must be rational strings or integers");
      }
    }
  }
  return m;
}

json write_matrix(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t get_size(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long>() < 0)
    throw InputError(std::string("space.") + key + " must be a nonnegative integer");
  return j[key].get<std::size_t>();
}

}  // namespace

SuperRep parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("space") || !doc.contains("generators"))
    throw InputError("algebra spec needs 'space' and 'generators'");
  const json& sp = doc["space"];
  const std::size_t d0 = get_size(sp, "d0"), d1 = get_size(sp, "d1");
  const std::string form = sp.value("form", std::string("ortho"));

  SuperSpace v;
  if (form == "none") {
    v = SuperSpace::bare(d0, d1);
  } else if (form == "ortho" || form == "skew-ortho") {
    const FormKind kind = form == "ortho" ? FormKind::Ortho : FormKind::SkewOrtho;
    if (sp.contains("gram_even") || sp.contains("gram_odd")) {
      if (!sp.contains("gram_even") || !sp.contains("gram_odd"))
        throw InputError("give both gram_even and gram_odd, or neither");
      v = SuperSpace::with_form(kind, read_matrix(sp["gram_even"], d0, "space.gram_even"),
                                read_matrix(sp["gram_odd"], d1, "space.gram_odd"));
    } else {
      if (kind != FormKind::Ortho) throw InputError("skew-ortho spaces need explicit Gram blocks");
      const std::size_t p = get_size(sp, "p"), q = get_size(sp, "q");
      if (p + q != d0) throw InputError("p + q must equal d0");
      v = SuperSpace::canonical(p, q, d1);
    }
  } else {
    throw InputError("unknown form type '" + form + "'");
  }

  std::vector<SuperEndo> gens;
  if (!doc["generators"].is_array()) throw InputError("'generators' must be an array");
  for (std::size_t i = 0; i < doc["generators"].size(); ++i) {
    const json& g = doc["generators"][i];
    const std::string where = "generators[" + std::to_string(i) + "]";
    if (!g.is_object()) throw InputError(where + ": expected an object");
    const json par_j = g.value("parity", json());
    const std::string par = par_j.is_string() ? par_j.get<std::string>() : "";
    if (par != "even" && par != "odd") throw InputError(where + ".parity: must be 'even' or 'odd'");
    Mat m = read_matrix(g.value("matrix", json()), v.dim(), where + ".matrix");
    Parity p = par == "even" ? Parity::Even : Parity::Odd;
    if (homogeneous_parity(m, v.d0()) != p && !m.is_zero())
      throw InputError(where + ": declared " + par + " but the matrix is not " + par);
    gens.push_back(SuperEndo{v.d0(), p, std::move(m)});
  }
  return SuperRep::make(doc.value("name", std::string("custom")), std::move(v), std::move(gens));
}

SuperRep load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open algebra file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

std::string emit_algebra(const SuperRep& r) {
  const SuperSpace& v = r.space();
  json sp;
  sp["d0"] = v.d0();
  sp["d1"] = v.d1();
  if (!v.has_form()) {
    sp["form"] = "none";
  } else {
    sp["form"] = to_string(v.kind());
    if (v.kind() == FormKind::Ortho) {
      auto [p, q] = v.signature();
      sp["p"] = p;
      sp["q"] = q;
    }
    if (!v.is_canonical()) {
      sp["gram_even"] = write_matrix(v.gram_even());
      sp["gram_odd"] = write_matrix(v.gram_odd());
    }
  }
  json gens = json::array();
  for (const auto& g : r.generators()) gens.push_back({{"parity", to_string(g.parity)}, {"matrix", write_matrix(g.m)}});
  json doc{{"name", r.name()}, {"space", sp}, {"generators", gens}};
  return doc.dump(2) + "\n";
}

}  // namespace shl
