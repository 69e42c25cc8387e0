#include "pgcert/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pgcert/errors.hpp"
#include "pgcert/pcp_format.hpp"

namespace pgcert {

namespace {

using Json = nlohmann::ordered_json;

std::string word_text(const Element& x) {
  std::string s;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0) {
      if (!s.empty())
        s += ' ';
      s += 'g' + std::to_string(k + 1);
      if (x[k] != 1)
        s += '^' + std::to_string(x[k]);
    }
  return s.empty() ? "1" : s;
}

// Elements are written as collected words "g1 g2^2", "1" for the identity.
Json word_json(const Element& x) { return Json(word_text(x)); }

Json element_list(const std::vector<Element>& xs) {
  Json a = Json::array();
  for (const auto& x : xs)
    a.push_back(word_json(x));
  return a;
}

Json lift_json(const LiftRecord& l) {
  Json j;
  j["images"] = element_list(l.map.images);
  j["cocycle_verified"] = l.cocycle_verified;
  j["well_defined"] = l.well_defined;
  j["is_automorphism"] = l.is_automorphism;
  j["failure"] = l.failure.empty() ? Json(nullptr) : Json(l.failure);
  j["order"] = l.order;
  j["noncentral"] = l.noncentral;
  j["fixes_N"] = l.fixes_N;
  j["centralizes_G_mod_N"] = l.centralizes_G_mod_N;
  if (l.inner) {
    Json s;
    s["inner"] = l.inner->inner();
    s["witness"] = l.inner->witness ? word_json(*l.inner->witness) : Json(nullptr);
    s["candidates"] = l.inner->candidates;
    j["inner_search"] = s;
  } else {
    j["inner_search"] = nullptr;
  }
  return j;
}

Json report_json(const CertReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["group_id"] = r.group_id;
  j["p"] = r.p;
  j["m"] = r.m;
  j["class"] = r.nilpotency_class;
  j["coclass"] = r.coclass;
  j["route"] = route_name(r.route.route);
  j["citations"] = r.route.citations;
  j["outcome"] = outcome_name(r.outcome);
  j["violation"] = r.violation.empty() ? Json(nullptr) : Json(r.violation);
  if (r.context) {
    const auto& c = *r.context;
    Json x;
    x["N_basis"] = element_list(c.N_basis);
    x["a"] = word_json(c.a);
    x["b"] = word_json(c.b);
    x["w"] = word_json(c.w);
    x["c_ab"] = word_json(c.c_ab);
    x["c_wb"] = word_json(c.c_wb);
    j["context"] = x;
  } else {
    j["context"] = nullptr;
  }
  Json d;
  d["alpha_star"] = r.alpha_star ? lift_json(*r.alpha_star) : Json(nullptr);
  d["beta_star"] = r.beta_star ? lift_json(*r.beta_star) : Json(nullptr);
  j["derivations"] = d;
  if (r.certificate) {
    const auto& c = *r.certificate;
    Json x;
    x["chosen"] = chosen_name(c.chosen);
    x["images"] = element_list(c.automorphism.images);
    x["is_automorphism"] = c.is_automorphism;
    x["order"] = c.order;
    x["noncentral"] = c.noncentral;
    x["noninner"] = c.noninner;
    x["inner_search_size"] = c.inner_search_size;
    x["fixed_subgroup"] = fixed_subgroup_name(c.fixed_subgroup);
    x["fixes_elementwise"] = c.fixes_elementwise;
    x["cocycle_verified"] = c.cocycle_verified;
    j["certificate"] = x;
  } else {
    j["certificate"] = nullptr;
  }
  j["accepted"] = r.accepted();
  Json t = Json::object();
  for (const auto& [stage, ms] : r.timings_ms)
    t[stage] = ms;
  j["timings_ms"] = t;
  return j;
}

std::string images_text(const std::vector<Element>& images) {
  std::string s;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (k)
      s += ", ";
    s += "g" + std::to_string(k + 1) + " -> " + word_text(images[k]);
  }
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string report_text(const CertReport& r) {
  std::ostringstream o;
  o << "group      " << r.group_id << "\n";
  o << "order      " << r.p << "^" << r.m << ", class " << r.nilpotency_class << ", coclass "
    << r.coclass << "\n";
  o << "route      " << route_name(r.route.route) << "\n";
  for (const auto& c : r.route.citations)
    o << "  cites    " << c << "\n";
  o << "outcome    " << outcome_name(r.outcome) << "\n";
  if (!r.violation.empty())
    o << "violation  " << r.violation << "\n";
  if (r.context) {
    const auto& c = *r.context;
    o << "N          <";
    for (std::size_t k = 0; k < c.N_basis.size(); ++k)
      o << (k ? ", " : "") << word_text(c.N_basis[k]);
    o << ">\n";
    o << "a, b, w    " << word_text(c.a) << " | " << word_text(c.b) << " | " << word_text(c.w)
      << "\n";
  }
  auto lift = [&](const char* name, const std::optional<LiftRecord>& l) {
    if (!l)
      return;
    o << name << " cocycle " << yes_no(l->cocycle_verified) << ", automorphism "
      << yes_no(l->is_automorphism) << ", order " << l->order << ", noncentral "
      << yes_no(l->noncentral);
    if (l->inner)
      o << ", inner " << yes_no(l->inner->inner());
    o << "\n";
  };
  lift("alpha*    ", r.alpha_star);
  lift("beta*     ", r.beta_star);
  if (r.certificate) {
    const auto& c = *r.certificate;
    o << "certified  " << chosen_name(c.chosen) << ": " << images_text(c.automorphism.images)
      << "\n";
    o << "           order " << c.order << ", noninner over " << c.inner_search_size
      << " cosets of Z(G), fixes " << fixed_subgroup_name(c.fixed_subgroup) << " elementwise "
      << yes_no(c.fixes_elementwise) << "\n";
  }
  return o.str();
}

}  // namespace

std::string emit_report(const CertReport& r, ReportFormat format) {
  if (format == ReportFormat::text)
    return report_text(r);
  return report_json(r).dump(2) + "\n";
}

std::string strip_timings(const std::string& json_report) {
  Json j = Json::parse(json_report);
  j.erase("timings_ms");
  return j.dump(2) + "\n";
}

bool AuditEntry::route_matches() const {
  if (!expected_route)
    return true;
  return report && route_name(report->route.route) == *expected_route;
}

std::size_t AuditResult::count(Outcome o) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [&](const AuditEntry& e) { return e.report && e.report->outcome == o; }));
}

std::size_t AuditResult::load_failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const AuditEntry& e) { return !e.report; }));
}

std::size_t AuditResult::route_mismatches() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const AuditEntry& e) { return !e.route_matches(); }));
}

std::vector<std::pair<std::string, std::string>> read_manifest(const std::filesystem::path& path) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream fields(line);
    std::string id, route;
    std::getline(fields, id, '\t');
    std::getline(fields, route, '\t');
    if (!id.empty())
      rows.emplace_back(id, route);
  }
  return rows;
}

AuditResult audit_directory(const std::filesystem::path& dir, Exec exec) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw std::runtime_error("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".pcp")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());

  const auto manifest = read_manifest(dir / "manifest.tsv");
  AuditResult out;
  for (const auto& f : files) {
    AuditEntry e;
    e.file = f.filename().string();
    e.group_id = f.stem().string();
    try {
      PcpFile file = read_pcp_file(f);
      e.group_id = file.group_id;
      e.report = certify_group(file.presentation, file.group_id, exec);
    } catch (const InconsistentPresentation& ex) {
      e.inconsistent = true;
      e.error = ex.what();
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    for (const auto& [id, route] : manifest)
      if (id == e.group_id)
        e.expected_route = route;
    out.entries.push_back(std::move(e));
  }
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const AuditEntry& x, const AuditEntry& y) { return x.group_id < y.group_id; });
  for (const auto& [id, route] : manifest) {
    bool seen = std::any_of(out.entries.begin(), out.entries.end(),
                            [&](const AuditEntry& e) { return e.group_id == id; });
    if (!seen)
      out.unlisted_manifest_ids.push_back(id);
  }
  return out;
}

std::string emit_audit(const AuditResult& a, ReportFormat format) {
  if (format == ReportFormat::json) {
    Json j;
    j["schema"] = "pgcert-audit/1";
    Json summary;
    summary["files"] = a.entries.size();
    summary["certified"] = a.count(Outcome::certified);
    summary["routed"] = a.count(Outcome::routed);
    summary["theorem_violations"] = a.theorem_violations();
    summary["load_failures"] = a.load_failures();
    summary["route_mismatches"] = a.route_mismatches();
    summary["missing_files"] = a.unlisted_manifest_ids;
    j["summary"] = summary;
    Json list = Json::array();
    for (const auto& e : a.entries) {
      Json x;
      x["file"] = e.file;
      x["group_id"] = e.group_id;
      x["expected_route"] = e.expected_route ? Json(*e.expected_route) : Json(nullptr);
      x["route_matches"] = e.route_matches();
      x["error"] = e.error.empty() ? Json(nullptr) : Json(e.error);
      x["report"] = e.report ? report_json(*e.report) : Json(nullptr);
      list.push_back(x);
    }
    j["groups"] = list;
    return j.dump(2) + "\n";
  }
  std::ostringstream o;
  for (const auto& e : a.entries) {
    o << e.group_id << "\t";
    if (!e.report) {
      o << (e.inconsistent ? "INCONSISTENT" : "ERROR") << "\t" << e.error << "\n";
      continue;
    }
    const CertReport& r = *e.report;
    o << route_name(r.route.route) << "\t" << outcome_name(r.outcome);
    if (r.certificate)
      o << "\t" << chosen_name(r.certificate->chosen) << " order " << r.certificate->order
        << " fixes " << fixed_subgroup_name(r.certificate->fixed_subgroup);
    if (!r.violation.empty())
      o << "\t" << r.violation;
    if (!e.route_matches())
      o << "\tMANIFEST MISMATCH (expected " << *e.expected_route << ")";
    o << "\n";
  }
  for (const auto& id : a.unlisted_manifest_ids)
    o << id << "\tMISSING\tlisted in manifest, no file\n";
  o << "files " << a.entries.size() << ", certified " << a.count(Outcome::certified) << ", routed "
    << a.count(Outcome::routed) << ", theorem violations " << a.theorem_violations()
    << ", load failures " << a.load_failures() << ", manifest mismatches "
    << a.route_mismatches() << "\n";
  return o.str();
}

}  // namespace pgcert
