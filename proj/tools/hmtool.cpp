#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hmap/classes.hpp"
#include "hmap/extremal.hpp"
#include "hmap/harmonic.hpp"
#include "hmap/hypergeo.hpp"
#include "hmap/mapping_io.hpp"
#include "hmap/radii.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInconclusive = 3;

hmap::Grid effective_grid() {
  hmap::Grid grid = hmap::Grid::default_grid();
  if (const char* env = std::getenv("HGFT_GRID_ANGLES")) {
    const int angles = std::atoi(env);
    if (angles < 4) throw std::runtime_error("HGFT_GRID_ANGLES must be >= 4");
    grid.angles = angles;
  }
  return grid;
}

json report_base() { return json{{"schema", 1}}; }

const char* verdict_name(hmap::Verdict v) {
  switch (v) {
    case hmap::Verdict::member: return "member";
    case hmap::Verdict::non_member: return "non_member";
    default: return "inconclusive";
  }
}

json membership_json(const hmap::MembershipReport& rep) {
  json j = report_base();
  j["verdict"] = verdict_name(rep.verdict);
  j["margin"] = rep.margin;
  j["method"] = rep.method;
  j["certificate"] = rep.certificate;
  if (!rep.note.empty()) j["note"] = rep.note;
  if (rep.witness)
    j["witness"] = {rep.witness->real(), rep.witness->imag()};
  return j;
}

int verdict_exit(hmap::Verdict v) {
  switch (v) {
    case hmap::Verdict::member: return kExitOk;
    case hmap::Verdict::non_member: return kExitFails;
    default: return kExitInconclusive;
  }
}

json radius_json(const hmap::RadiusResult& res) {
  json j = report_base();
  j["value"] = res.value;
  switch (res.provenance) {
    case hmap::RadiusProvenance::closed_form: j["provenance"] = "closed_form"; break;
    case hmap::RadiusProvenance::polynomial_root: j["provenance"] = "polynomial_root"; break;
    case hmap::RadiusProvenance::empirical: j["provenance"] = "empirical"; break;
  }
  j["lo"] = res.lo;
  j["hi"] = res.hi;
  j["residual"] = res.residual;
  j["case"] = res.case_tag;
  j["whole_disk"] = res.whole_disk;
  return j;
}

json condition_json(const hmap::ConditionReport& rep) {
  json j = report_base();
  j["condition"] = rep.condition_id;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["satisfied"] = rep.satisfied;
  j["gamma_form_applicable"] = rep.gamma_form_applicable;
  j["coefficient_sum"] = rep.coefficient_sum;
  return j;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_document(const std::string& path, const hmap::MappingDocument& doc,
                    const std::string& kind) {
  hmap::save_mapping(path, doc);
  json j = report_base();
  j["written"] = path;
  j["kind"] = kind;
  j["h_order"] = doc.mapping.h().order();
  j["g_order"] = doc.mapping.g().order();
  print(j);
}

std::vector<double> parse_radii(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  if (out.empty()) throw std::runtime_error("--radii: empty list");
  return out;
}

struct Options {
  std::string input, with_path, hat_path, out_path;
  double alpha = 0.0, beta = 0.0;
  double a = 0.0, b = 0.0, c = 1.0;
  int p = 2, q = 2, n = 2, order = hmap::kDefaultOrder;
  std::uint64_t seed = 1;
  std::string kind, variant = "theorem", method, which, id, selector;
  std::string radii_csv = "0.3,0.5,0.7,0.9";
  int samples = 64;
  bool sufficient = false, full = false;
};

int run(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for a class of planar harmonic mappings"};
  app.require_subcommand(1);
  Options o;

  CLI::App* check = app.add_subcommand("check", "Membership test for a mapping document");
  check->add_option("--input", o.input)->required();
  check->add_flag("--sufficient", o.sufficient, "Use the coefficient-sum sufficient condition");

  CLI::App* bounds = app.add_subcommand("bounds", "Coefficient bound slacks");
  bounds->add_option("--input", o.input)->required();

  CLI::App* growth = app.add_subcommand("growth", "Growth envelope check");
  growth->add_option("--input", o.input)->required();
  growth->add_option("--order", o.order);

  CLI::App* radius = app.add_subcommand("radius", "Convexity radii of sections");
  radius->add_option("--kind", o.kind)->required()
      ->check(CLI::IsMember({"quarter", "r1", "r2", "s22", "empirical"}));
  radius->add_option("--variant", o.variant)->check(CLI::IsMember({"theorem", "proof"}));
  radius->add_option("--alpha", o.alpha);
  radius->add_option("--beta", o.beta);
  radius->add_option("--p", o.p);
  radius->add_option("--q", o.q);
  radius->add_option("--input", o.input);

  CLI::App* convolve = app.add_subcommand("convolve", "Harmonic or hat convolution");
  convolve->add_option("--input", o.input)->required();
  convolve->add_option("--with", o.with_path);
  convolve->add_option("--hat", o.hat_path);
  convolve->add_option("--out", o.out_path)->required();

  CLI::App* sections = app.add_subcommand("sections", "Partial sums s_{p,q}");
  sections->add_option("--input", o.input)->required();
  sections->add_option("--p", o.p)->required();
  sections->add_option("--q", o.q)->required();
  sections->add_option("--out", o.out_path)->required();

  CLI::App* extremal = app.add_subcommand("extremal", "Sharpness witnesses");
  extremal->add_option("--alpha", o.alpha);
  extremal->add_option("--beta", o.beta);
  extremal->add_option("--n", o.n);
  extremal->add_flag("--full", o.full, "All co-analytic coefficients at their bound");
  extremal->add_option("--order", o.order);
  extremal->add_option("--out", o.out_path)->required();

  CLI::App* generate = app.add_subcommand("generate", "Seeded random member");
  generate->add_option("--seed", o.seed)->required();
  generate->add_option("--alpha", o.alpha);
  generate->add_option("--beta", o.beta);
  generate->add_option("--order", o.order);
  generate->add_option("--out", o.out_path)->required();

  CLI::App* hyper = app.add_subcommand("hypergeo", "Hypergeometric oracles and conditions");
  hyper->require_subcommand(1);
  CLI::App* hg_coeffs = hyper->add_subcommand("coeffs");
  hg_coeffs->add_option("--a", o.a)->required();
  hg_coeffs->add_option("--b", o.b)->required();
  hg_coeffs->add_option("--c", o.c)->required();
  hg_coeffs->add_option("--n", o.n)->required();
  CLI::App* hg_gauss = hyper->add_subcommand("gauss");
  hg_gauss->add_option("--a", o.a)->required();
  hg_gauss->add_option("--b", o.b)->required();
  hg_gauss->add_option("--c", o.c)->required();
  hg_gauss->add_option("--method", o.method)->check(CLI::IsMember({"gamma", "series"}));
  CLI::App* hg_lemma = hyper->add_subcommand("lemma");
  hg_lemma->add_option("--which", o.which)->required()->check(CLI::IsMember({"i", "ii", "iii"}));
  hg_lemma->add_option("--a", o.a)->required();
  hg_lemma->add_option("--b", o.b)->required();
  hg_lemma->add_option("--c", o.c)->required();
  hg_lemma->add_option("--method", o.method)->check(CLI::IsMember({"closed", "series"}));
  CLI::App* hg_build = hyper->add_subcommand("build");
  hg_build->add_option("--f", o.selector)->required()->check(CLI::IsMember({"f1", "f2", "f3"}));
  hg_build->add_option("--a", o.a)->required();
  hg_build->add_option("--b", o.b)->required();
  hg_build->add_option("--c", o.c)->required();
  hg_build->add_option("--alpha", o.alpha);
  hg_build->add_option("--beta", o.beta);
  hg_build->add_option("--order", o.order);
  hg_build->add_option("--out", o.out_path)->required();
  CLI::App* hg_cond = hyper->add_subcommand("cond");
  hg_cond->add_option("--id", o.id)->required()
      ->check(CLI::IsMember({"G3", "G4", "G5", "C63i", "C63ii", "C63iii",
                             "C64i", "C64ii", "C64iii"}));
  hg_cond->add_option("--a", o.a);
  hg_cond->add_option("--b", o.b);
  hg_cond->add_option("--c", o.c);
  hg_cond->add_option("--m", o.n);
  hg_cond->add_option("--alpha", o.alpha);
  hg_cond->add_option("--beta", o.beta);

  CLI::App* plot = app.add_subcommand("plot-data", "CSV images of concentric circles");
  plot->add_option("--input", o.input)->required();
  plot->add_option("--radii", o.radii_csv);
  plot->add_option("--samples", o.samples);
  plot->add_option("--out", o.out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (check->parsed()) {
    const hmap::MappingDocument doc = hmap::load_mapping(o.input);
    const hmap::MembershipReport rep =
        o.sufficient ? hmap::sufficient_membership(doc.mapping, doc.params)
                     : hmap::grid_membership(doc.mapping, doc.params, effective_grid());
    print(membership_json(rep));
    return verdict_exit(rep.verdict);
  }

  if (bounds->parsed()) {
    const hmap::MappingDocument doc = hmap::load_mapping(o.input);
    const hmap::CoeffBoundReport rep = hmap::coeff_bound_check(doc.mapping, doc.params);
    json j = report_base();
    j["violation"] = rep.violation;
    json rows = json::array();
    for (const hmap::CoeffBoundRow& r : rep.rows)
      rows.push_back({{"n", r.n},
                      {"slack_bn", r.slack_bn},
                      {"slack_sum", r.slack_sum},
                      {"slack_diff", r.slack_diff},
                      {"slack_an", r.slack_an}});
    j["rows"] = rows;
    print(j);
    return rep.violation ? kExitFails : kExitOk;
  }

  if (growth->parsed()) {
    const hmap::MappingDocument doc = hmap::load_mapping(o.input);
    const hmap::GrowthReport rep =
        hmap::growth_check(doc.mapping, doc.params, effective_grid(), o.order);
    json j = report_base();
    j["ok"] = rep.ok;
    j["worst_lower_slack"] = rep.worst_lower_slack;
    j["worst_upper_slack"] = rep.worst_upper_slack;
    print(j);
    return rep.ok ? kExitOk : kExitFails;
  }

  if (radius->parsed()) {
    const hmap::R2Variant variant = o.variant == "proof"
                                        ? hmap::R2Variant::proof
                                        : hmap::R2Variant::theorem;
    hmap::RadiusResult res;
    if (o.kind == "quarter") {
      res = hmap::radius_quarter(o.p, o.q);
    } else if (o.kind == "r1") {
      res = hmap::smallest_root(hmap::radius_polynomial(hmap::RadiusCase::r1, o.beta));
    } else if (o.kind == "r2") {
      res = hmap::smallest_root(
          hmap::radius_polynomial(hmap::RadiusCase::r2, o.beta, variant));
    } else if (o.kind == "s22") {
      res = hmap::radius_s22(hmap::ClassParams(o.alpha, o.beta));
    } else {
      if (o.input.empty())
        throw std::runtime_error("radius --kind empirical requires --input");
      const hmap::MappingDocument doc = hmap::load_mapping(o.input);
      res = hmap::empirical_convexity_radius(doc.mapping, o.p, o.q);
    }
    print(radius_json(res));
    return kExitOk;
  }

  if (convolve->parsed()) {
    const hmap::MappingDocument doc = hmap::load_mapping(o.input);
    json extra = json::object();
    hmap::MappingDocument out_doc;
    out_doc.params = doc.params;
    if (!o.hat_path.empty()) {
      const hmap::PowerSeries phi = hmap::load_series(o.hat_path);
      const hmap::HatConvolveResult res = hmap::hat_convolve(doc.mapping, phi);
      out_doc.mapping = res.mapping;
      extra["normalization_preserved"] = res.normalization_preserved;
    } else if (!o.with_path.empty()) {
      const hmap::MappingDocument other = hmap::load_mapping(o.with_path);
      out_doc.mapping = hmap::convolve(doc.mapping, other.mapping);
    } else {
      throw std::runtime_error("convolve requires --with or --hat");
    }
    hmap::save_mapping(o.out_path, out_doc);
    json j = report_base();
    j["written"] = o.out_path;
    j.update(extra);
    print(j);
    return kExitOk;
  }

  if (sections->parsed()) {
    const hmap::MappingDocument doc = hmap::load_mapping(o.input);
    hmap::MappingDocument out_doc{doc.params,
                                  hmap::section(doc.mapping, o.p, o.q)};
    write_document(o.out_path, out_doc, "section");
    return kExitOk;
  }

  if (extremal->parsed()) {
    const hmap::ClassParams params(o.alpha, o.beta);
    hmap::MappingDocument doc;
    doc.params = params;
    doc.mapping = o.full ? hmap::extremal_full(params, o.order)
                         : hmap::extremal_bn(o.n, params);
    write_document(o.out_path, doc, o.full ? "extremal_full" : "extremal_bn");
    return kExitOk;
  }

  if (generate->parsed()) {
    const hmap::ClassParams params(o.alpha, o.beta);
    hmap::MappingDocument doc{params,
                              hmap::member_from_budget(params, o.seed, o.order)};
    write_document(o.out_path, doc, "budget_member");
    return kExitOk;
  }

  if (hg_coeffs->parsed()) {
    const hmap::PowerSeries s =
        hmap::f21_coeffs(hmap::HGParams(o.a, o.b, o.c), o.n);
    json j = report_base();
    json arr = json::array();
    for (const hmap::Complex& c : s.coeffs()) arr.push_back(c.real());
    j["coeffs"] = arr;
    print(j);
    return kExitOk;
  }

  if (hg_gauss->parsed()) {
    const hmap::GaussMethod m = o.method == "series" ? hmap::GaussMethod::series
                                                     : hmap::GaussMethod::gamma;
    json j = report_base();
    j["value"] = hmap::gauss_value(hmap::HGParams(o.a, o.b, o.c), m);
    j["method"] = o.method.empty() ? "gamma" : o.method;
    print(j);
    return kExitOk;
  }

  if (hg_lemma->parsed()) {
    const hmap::Lemma61Sum which = o.which == "i" ? hmap::Lemma61Sum::i
                                   : o.which == "ii" ? hmap::Lemma61Sum::ii
                                                     : hmap::Lemma61Sum::iii;
    const hmap::SumMethod m = o.method == "series" ? hmap::SumMethod::series
                                                   : hmap::SumMethod::closed;
    json j = report_base();
    j["value"] = hmap::lemma61_sum(hmap::HGParams(o.a, o.b, o.c), which, m);
    j["which"] = o.which;
    j["method"] = o.method.empty() ? "closed" : o.method;
    print(j);
    return kExitOk;
  }

  if (hg_build->parsed()) {
    const hmap::MappingSelector sel = o.selector == "f1" ? hmap::MappingSelector::f1
                                      : o.selector == "f2" ? hmap::MappingSelector::f2
                                                           : hmap::MappingSelector::f3;
    hmap::MappingDocument doc{
        hmap::ClassParams(o.alpha, o.beta),
        hmap::build_mapping(sel, hmap::HGParams(o.a, o.b, o.c), o.order)};
    write_document(o.out_path, doc, "hypergeometric_" + o.selector);
    return kExitOk;
  }

  if (hg_cond->parsed()) {
    const hmap::ClassParams params(o.alpha, o.beta);
    hmap::ConditionReport rep;
    if (o.id == "G3" || o.id == "G4" || o.id == "G5") {
      const hmap::MembershipConditionId id =
          o.id == "G3" ? hmap::MembershipConditionId::G3
          : o.id == "G4" ? hmap::MembershipConditionId::G4
                         : hmap::MembershipConditionId::G5;
      rep = hmap::membership_condition(id, hmap::HGParams(o.a, o.b, o.c), params);
    } else {
      const hmap::CorollaryConditionId id =
          o.id == "C63i" ? hmap::CorollaryConditionId::C63i
          : o.id == "C63ii" ? hmap::CorollaryConditionId::C63ii
          : o.id == "C63iii" ? hmap::CorollaryConditionId::C63iii
          : o.id == "C64i" ? hmap::CorollaryConditionId::C64i
          : o.id == "C64ii" ? hmap::CorollaryConditionId::C64ii
                            : hmap::CorollaryConditionId::C64iii;
      rep = hmap::corollary_condition(id, o.n, o.c, params);
    }
    print(condition_json(rep));
    return rep.satisfied ? kExitOk : kExitFails;
  }

  if (plot->parsed()) {
    const hmap::MappingDocument doc = hmap::load_mapping(o.input);
    std::ofstream out(o.out_path);
    if (!out) throw std::runtime_error("cannot write '" + o.out_path + "'");
    hmap::emit_curves(doc.mapping, parse_radii(o.radii_csv), o.samples, out);
    json j = report_base();
    j["written"] = o.out_path;
    print(j);
    return kExitOk;
  }

  return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    nlohmann::json j{{"schema", 1}, {"error", e.what()}};
    std::cerr << j.dump(2) << "\n";
    return kExitInvalid;
  }
}
