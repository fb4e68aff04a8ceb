#include "hmap/mapping_io.hpp"

#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace hmap {

namespace {

using nlohmann::json;

json series_to_json(const PowerSeries& s) {
  json arr = json::array();
  for (const Complex& c : s.coeffs()) arr.push_back({c.real(), c.imag()});
  return arr;
}

PowerSeries series_from_json(const json& arr, const std::string& field) {
  if (!arr.is_array() || arr.empty())
    throw std::runtime_error("field '" + field +
                             "': expected a non-empty array of [re, im] pairs");
  std::vector<Complex> v;
  v.reserve(arr.size());
  for (const json& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number())
      throw std::runtime_error("field '" + field +
                               "': each coefficient must be a [re, im] pair");
    v.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  try {
    return PowerSeries(std::move(v));
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error("field '" + field + "': " + ex.what());
  }
}

double require_number(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number())
    throw std::runtime_error("field '" + field + "': expected a number");
  return j[field].get<double>();
}

}  // namespace

std::string document_to_json(const MappingDocument& doc) {
  json j;
  j["schema"] = 1;
  j["alpha"] = doc.params.alpha;
  j["beta"] = doc.params.beta;
  j["h"] = series_to_json(doc.mapping.h());
  j["g"] = series_to_json(doc.mapping.g());
  return j.dump(2) + "\n";
}

MappingDocument document_from_json(const std::string& text, bool require_h0) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw std::runtime_error(std::string("parse error: ") + ex.what());
  }
  if (!j.is_object()) throw std::runtime_error("document must be an object");

  MappingDocument doc;
  const double alpha = require_number(j, "alpha");
  const double beta = require_number(j, "beta");
  try {
    doc.params = ClassParams(alpha, beta);
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error(std::string("field 'alpha'/'beta': ") + ex.what());
  }
  if (!j.contains("h")) throw std::runtime_error("field 'h': missing");
  if (!j.contains("g")) throw std::runtime_error("field 'g': missing");
  PowerSeries h = series_from_json(j["h"], "h");
  PowerSeries g = series_from_json(j["g"], "g");
  try {
    doc.mapping = make_mapping(std::move(h), std::move(g), require_h0);
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error(std::string("normalization: ") + ex.what());
  }
  return doc;
}

MappingDocument load_mapping(const std::string& path, bool require_h0) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  return document_from_json(text, require_h0);
}

void save_mapping(const std::string& path, const MappingDocument& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << document_to_json(doc);
}

PowerSeries load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& ex) {
    throw std::runtime_error(std::string("parse error: ") + ex.what());
  }
  if (j.is_object() && j.contains("coeffs"))
    return series_from_json(j["coeffs"], "coeffs");
  if (j.is_object() && j.contains("h")) return series_from_json(j["h"], "h");
  if (j.is_array()) return series_from_json(j, "coeffs");
  throw std::runtime_error("expected {\"coeffs\": [[re, im], ...]}");
}

void emit_curves(const HarmonicMapping& f, const std::vector<double>& radii,
                 int samples, std::ostream& out) {
  if (samples < 16)
    throw std::invalid_argument("emit_curves: samples must be >= 16");
  for (double r : radii)
    if (!(r > 0.0 && r < 1.0))
      throw std::invalid_argument("emit_curves: radii must lie in (0,1)");
  out << "r,theta,re_f,im_f,jacobian\n";
  json num;  // reuse nlohmann's shortest round-trip double formatting
  const auto fmt = [&num](double x) {
    num = x;
    return num.dump();
  };
  for (double r : radii) {
    for (int k = 0; k < samples; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / samples;
      const Complex z = std::polar(r, theta);
      const PointData d = point_data(f, z);
      out << fmt(r) << ',' << fmt(theta) << ',' << fmt(d.value.real()) << ','
          << fmt(d.value.imag()) << ',' << fmt(d.jacobian) << '\n';
    }
  }
}

}  // namespace hmap
