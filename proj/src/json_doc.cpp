#include "cq/json_doc.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>

namespace cq {

namespace {

using nlohmann::json;

class Writer {
 public:
  Writer& raw(const std::string& s) {
    out_ += s;
    return *this;
  }
  Writer& str(const std::string& s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
    return *this;
  }
  Writer& num(double x) { return raw(format_double(x)); }
  Writer& num(int x) { return raw(std::to_string(x)); }
  Writer& boolean(bool b) { return raw(b ? "true" : "false"); }
  const std::string& done() {
    out_ += '\n';
    return out_;
  }

 private:
  std::string out_;
};

void write_cvec(Writer& w, const CVec& v) {
  w.raw("[");
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (k) w.raw(",");
    w.raw("[").num(v[k].real()).raw(",").num(v[k].imag()).raw("]");
  }
  w.raw("]");
}

void write_basis(Writer& w, const std::vector<CVec>& basis) {
  w.raw("[");
  for (size_t j = 0; j < basis.size(); ++j) {
    if (j) w.raw(",");
    write_cvec(w, basis[j]);
  }
  w.raw("]");
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw std::invalid_argument("field \"" + field + "\": " + what);
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("format_double: non-finite value");
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

RealSubspace SubspaceDocument::to_subspace() const {
  return RealSubspace::span(basis, m, tol.value_or(kDefaultTol));
}

SubspaceDocument parse_subspace_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("document: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) field_error("(document)", "not a JSON object");

  SubspaceDocument doc;
  if (!j.contains("m") || !j["m"].is_number_integer()) {
    field_error("m", "missing or not an integer");
  }
  doc.m = j["m"].get<int>();
  if (doc.m < 1) field_error("m", "must be a positive integer");

  if (j.contains("tol")) {
    if (!j["tol"].is_number()) field_error("tol", "not a number");
    doc.tol = j["tol"].get<double>();
    if (!(*doc.tol > 0.0) || !std::isfinite(*doc.tol)) {
      field_error("tol", "must be a positive finite number");
    }
  }

  if (!j.contains("basis") || !j["basis"].is_array()) {
    field_error("basis", "missing or not an array");
  }
  for (size_t row = 0; row < j["basis"].size(); ++row) {
    const json& vec = j["basis"][row];
    const std::string where = "basis[" + std::to_string(row) + "]";
    if (!vec.is_array() || vec.size() != static_cast<size_t>(doc.m)) {
      field_error(where, "vector must have exactly m entries");
    }
    CVec v(doc.m);
    for (int k = 0; k < doc.m; ++k) {
      const json& entry = vec[k];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        field_error(where + "[" + std::to_string(k) + "]",
                    "entry must be a [re, im] number pair");
      }
      v[k] = Complex(entry[0].get<double>(), entry[1].get<double>());
      if (!std::isfinite(v[k].real()) || !std::isfinite(v[k].imag())) {
        field_error(where + "[" + std::to_string(k) + "]", "non-finite entry");
      }
    }
    doc.basis.push_back(v);
  }
  return doc;
}

std::string emit_subspace_document(const SubspaceDocument& doc) {
  Writer w;
  w.raw("{\"m\":").num(doc.m);
  if (doc.tol) w.raw(",\"tol\":").num(*doc.tol);
  w.raw(",\"basis\":");
  write_basis(w, doc.basis);
  w.raw("}");
  return w.done();
}

std::string emit_classification(const Classification& c) {
  Writer w;
  const bool is_lts = c.type.tag != Tag::NotLieTriple;
  w.raw("{\"is_lts\":").boolean(is_lts);
  w.raw(",\"type\":").str(tag_name(c.type.tag));
  w.raw(",\"params\":{");
  switch (c.type.tag) {
    case Tag::G1:
    case Tag::P1:
    case Tag::I1:
    case Tag::I2:
      w.raw("\"k\":").num(c.type.k);
      break;
    case Tag::G2:
      w.raw("\"k1\":").num(c.type.k1).raw(",\"k2\":").num(c.type.k2);
      break;
    default: break;
  }
  w.raw("},\"dim\":").num(c.dim);
  w.raw(",\"rank\":");
  if (c.rank > 0) {
    w.num(c.rank);
  } else {
    w.raw("null");
  }
  w.raw(",\"angle\":");
  if (c.rank == 1 && c.angle >= 0.0) {
    w.num(c.angle);
  } else {
    w.raw("null");
  }
  w.raw(",\"flags\":{\"is_complex\":").boolean(c.flags.is_complex);
  w.raw(",\"is_totally_real\":").boolean(c.flags.is_totally_real);
  w.raw(",\"is_isotropic\":").boolean(c.flags.is_isotropic);
  w.raw(",\"is_cq_subspace\":").boolean(c.flags.is_cq_subspace);
  w.raw("},\"residual\":").num(c.residual);
  if (!c.diagnostic.empty()) w.raw(",\"diagnostic\":").str(c.diagnostic);
  w.raw("}");
  return w.done();
}

std::string emit_root_table(const std::vector<RootDatum>& table, int m) {
  Writer w;
  w.raw("{\"m\":").num(m).raw(",\"roots\":[");
  for (size_t j = 0; j < table.size(); ++j) {
    if (j) w.raw(",");
    w.raw("{\"k\":").num(table[j].k);
    w.raw(",\"riesz\":");
    write_cvec(w, table[j].riesz);
    w.raw(",\"multiplicity\":").num(table[j].multiplicity);
    w.raw(",\"root_space\":");
    write_basis(w, table[j].root_space.basis());
    w.raw("}");
  }
  w.raw("]}");
  return w.done();
}

std::string emit_decomposition(const RestrictedRootReport& report,
                               const CartanFrame& frame) {
  Writer w;
  w.raw("{\"rank\":").num(report.rank);
  w.raw(",\"frame\":{\"phase\":[").num(frame.phase.real()).raw(",");
  w.num(frame.phase.imag()).raw("],\"x\":");
  write_cvec(w, frame.x);
  w.raw(",\"y\":");
  write_cvec(w, frame.y);
  w.raw("}");
  w.raw(",\"zero_part\":");
  write_basis(w, report.zero_part.basis());
  w.raw(",\"parts\":[");
  for (size_t j = 0; j < report.parts.size(); ++j) {
    const RestrictedPart& p = report.parts[j];
    if (j) w.raw(",");
    w.raw("{\"value\":").num(p.value);
    w.raw(",\"label\":").str(p.elementary() ? "Elementary" : "Composite");
    w.raw(",\"ambient\":[");
    for (size_t a = 0; a < p.ambient.size(); ++a) {
      if (a) w.raw(",");
      w.num(p.ambient[a]);
    }
    w.raw("],\"signs\":[");
    for (size_t a = 0; a < p.signs.size(); ++a) {
      if (a) w.raw(",");
      w.num(p.signs[a]);
    }
    w.raw("],\"part\":");
    write_basis(w, p.part.basis());
    w.raw("}");
  }
  w.raw("]}");
  return w.done();
}

std::string emit_angles(const std::vector<double>& angles) {
  Writer w;
  w.raw("{\"angles\":[");
  for (size_t j = 0; j < angles.size(); ++j) {
    if (j) w.raw(",");
    w.num(angles[j]);
  }
  w.raw("]}");
  return w.done();
}

std::string emit_period(double formula, double oracle) {
  Writer w;
  w.raw("{\"formula\":").num(formula).raw(",\"oracle\":").num(oracle).raw("}");
  return w.done();
}

std::string emit_embedding_check(const EmbeddingCheck& check) {
  Writer w;
  w.raw("{\"pass\":").boolean(check.pass);
  w.raw(",\"expected_type\":").str(check.expected_type.to_string());
  w.raw(",\"tangent_type\":").str(check.tangent_type.to_string());
  w.raw(",\"max_quadric_residual\":").num(check.max_quadric_residual);
  w.raw(",\"max_isometry_deviation\":").num(check.max_isometry_deviation);
  w.raw(",\"max_covering_deviation\":").num(check.max_covering_deviation);
  if (!check.detail.empty()) w.raw(",\"detail\":").str(check.detail);
  w.raw("}");
  return w.done();
}

std::string emit_oracle_result(int m, int trials, double max_deviation) {
  Writer w;
  w.raw("{\"check\":\"curvature\",\"m\":").num(m);
  w.raw(",\"trials\":").num(trials);
  w.raw(",\"max_deviation\":").num(max_deviation).raw("}");
  return w.done();
}

}  // namespace cq
