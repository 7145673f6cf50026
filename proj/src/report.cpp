#include "toric/report.hpp"

#include <sstream>

namespace toric {

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json to_json(std::span<const Integer> v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

Json to_json(const DivisorClass& c) { return to_json(std::span<const Integer>(c.coords)); }
Json to_json(const TorusDivisor& d) { return to_json(std::span<const Integer>(d.coeffs)); }

Json to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.ok();
  j["well_formed"] = r.well_formed;
  j["primitive"] = r.primitive;
  j["distinct_rays"] = r.distinct_rays;
  j["simplicial"] = r.simplicial;
  j["smooth"] = r.smooth;
  j["rays_covered"] = r.rays_covered;
  j["ridge_paired"] = r.ridge_paired;
  j["connected"] = r.connected;
  j["point_location"] = r.point_location;
  Json f = Json::array();
  for (const auto& issue : r.failures) f.push_back({{"check", issue.check}, {"detail", issue.detail}});
  j["failures"] = std::move(f);
  return j;
}

Json to_json(const NefVerdict& v) {
  Json j;
  j["class"] = to_json(v.cls);
  j["nef"] = v.is_nef;
  j["ample"] = v.is_ample;
  if (v.failing) j["failing"] = {{"cone", v.failing->first}, {"ray", v.failing->second}};
  if (v.tight) j["tight"] = {{"cone", v.tight->first}, {"ray", v.tight->second}};
  return j;
}

Json to_json(const CohomologyVector& v, bool with_patterns) {
  Json j;
  j["h"] = to_json(std::span<const Integer>(v.h));
  j["euler"] = to_json(v.euler());
  if (with_patterns) {
    Json p = Json::array();
    for (const auto& w : v.patterns) {
      Json neg = Json::array();
      for (RayIndex r = 0; r < 64; ++r)
        if (w.neg >> r & 1) neg.push_back(r);
      p.push_back({{"neg", std::move(neg)}, {"points", to_json(w.points)}, {"reduced", w.reduced}});
    }
    j["patterns"] = std::move(p);
  }
  return j;
}

Json to_json(const FrobSet& f) {
  Json j;
  j["count"] = f.size();
  j["stabilizing_ell"] = f.stabilizing_ell;
  Json e = Json::array();
  for (const auto& entry : f.entries) {
    Json w = Json::array();
    for (const auto& t : entry.witness) w.push_back(t.get_str());
    e.push_back({{"class", to_json(entry.cls)},
                 {"divisor", to_json(entry.divisor)},
                 {"min_ell", entry.min_ell},
                 {"witness_t", std::move(w)}});
  }
  j["classes"] = std::move(e);
  return j;
}

Json to_json(const TiltingCandidate& c) {
  Json j;
  Json s = Json::array();
  for (const auto& cls : c.summands) s.push_back(to_json(cls));
  j["summands"] = std::move(s);
  Json ext = Json::array();
  for (const auto& row : c.ext) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(to_json(std::span<const Integer>(cell)));
    ext.push_back(std::move(r));
  }
  j["ext"] = std::move(ext);
  Json gram = Json::array();
  for (std::size_t a = 0; a < c.gram.rows(); ++a) gram.push_back(to_json(c.gram.row(a)));
  j["gram"] = std::move(gram);
  return j;
}

Json to_json(const OrlovReport& r) {
  Json j;
  j["name"] = r.name;
  j["dim"] = r.dim;
  j["frob_count"] = r.frob_count;
  j["bu_count"] = r.bu_count;
  j["max_cones"] = r.max_cones;
  j["stabilizing_ell"] = r.stabilizing_ell;
  j["nef_fano_status"] = to_string(r.fano);
  j["ext_vanishing"] = r.ext_vanishing;
  Json w = Json::array();
  for (const auto& v : r.ext_witnesses)
    w.push_back({{"from", to_json(r.bu[v.from])},
                 {"to", to_json(r.bu[v.to])},
                 {"degree", v.degree},
                 {"dim", to_json(v.dim)}});
  j["ext_witnesses"] = std::move(w);
  j["k_rank_match"] = r.k_rank_match;
  j["gram_unimodular"] = r.gram_unimodular;
  j["gram_det"] = to_json(r.gram_det);
  j["gram_triangular"] = r.gram_order.has_value();
  j["m0"] = r.m0;
  j["gen_time_upper"] = r.gen_time_upper;
  j["rdim_lower"] = r.rdim_lower;
  j["status"] = to_string(r.status);
  j["reason"] = r.reason;
  Json bu = Json::array();
  for (const auto& c : r.bu) bu.push_back(to_json(c));
  j["bu"] = std::move(bu);
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_markdown(const Table& t) {
  std::ostringstream os;
  os << '|';
  for (const auto& h : t.header) os << ' ' << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < t.header.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& row : t.rows) {
    os << '|';
    for (const auto& cell : row) os << ' ' << cell << " |";
    os << '\n';
  }
  return os.str();
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_field(t.header[i]);
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string class_label(const DivisorClass& c) { return "O" + to_string(std::span<const Integer>(c.coords)); }

Table orlov_table(const std::vector<OrlovReport>& reports) {
  Table t;
  t.header = {"name", "dim", "frob", "bu", "max_cones", "-K", "ext_vanishing", "k_rank_match",
              "gram_unimodular", "m0", "gen_time_upper", "rdim_lower", "status"};
  for (const auto& r : reports) {
    std::string status = to_string(r.status);
    if (!r.reason.empty()) status += "(" + r.reason + ")";
    t.rows.push_back({r.name, std::to_string(r.dim), std::to_string(r.frob_count), std::to_string(r.bu_count),
                      std::to_string(r.max_cones), to_string(r.fano), r.ext_vanishing ? "yes" : "no",
                      r.k_rank_match ? "yes" : "no", r.gram_unimodular ? "yes" : "no", std::to_string(r.m0),
                      std::to_string(r.gen_time_upper), std::to_string(r.rdim_lower), status});
  }
  return t;
}

}  // namespace toric
