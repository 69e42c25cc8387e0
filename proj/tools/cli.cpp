#include "pgcert/cli.hpp"

#include <fstream>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "pgcert/certify.hpp"
#include "pgcert/errors.hpp"
#include "pgcert/pcp_format.hpp"
#include "pgcert/remark.hpp"
#include "pgcert/report.hpp"
#include "pgcert/structure.hpp"

namespace pgcert::cli {

namespace {

std::string order_text(int p, std::size_t log) {
  return std::to_string(p) + "^" + std::to_string(log);
}

std::string orders_text(int p, const std::vector<Subgroup>& series) {
  std::string s;
  for (const auto& S : series) {
    if (!s.empty())
      s += ' ';
    s += order_text(p, S.log_order());
  }
  return s;
}

int cmd_validate(const PcpFile& f, std::ostream& out) {
  out << f.group_id << ": consistent, order " << order_text(f.presentation.prime(), f.presentation.ngens())
      << "\n";
  return kOk;
}

int cmd_series(const PcpFile& f, std::ostream& out) {
  const auto& P = f.presentation;
  const int p = P.prime();
  auto upper = upper_central_series(P);
  auto lower = lower_central_series(P);
  auto cc = class_and_coclass(P);
  out << "group          " << f.group_id << "\n";
  out << "order          " << order_text(p, P.ngens()) << "\n";
  out << "upper central  " << orders_text(p, upper) << "\n";
  out << "lower central  " << orders_text(p, lower) << "\n";
  out << "class          " << cc.nilpotency_class << "\n";
  out << "coclass        " << cc.coclass << "\n";
  out << "Frattini       " << order_text(p, frattini(P).log_order()) << "\n";
  out << "d(G)           " << minimal_generator_count(P) << "\n";
  return kOk;
}

int cmd_conditions(const PcpFile& f, std::ostream& out) {
  const auto& P = f.presentation;
  const int p = P.prime();
  auto d = decide_route(P);
  out << "group    " << f.group_id << "\n";
  out << "route    " << route_name(d.route) << "\n";
  for (const auto& c : d.citations)
    out << "  cites  " << c << "\n";
  if (p != 2) {
    auto inv = analyze(P);
    out << "|Z(G)|   " << order_text(p, inv.upper[1].log_order()) << "\n";
    if (inv.upper.size() > 2)
      out << "|Z_2|    " << order_text(p, inv.upper[2].log_order()) << "\n";
    out << "|Phi|    " << order_text(p, inv.phi.log_order()) << "\n";
    out << "d(G)     " << inv.d << "\n";
  }
  if (d.route == Route::remark) {
    auto g = diagnostics(P);
    out << "Z(G) <= G'               " << (g.purely_nonabelian_sufficient ? "yes" : "no") << "\n";
    out << "central automorphisms    " << g.central_aut_count << "\n";
    out << "C(Z(Phi)) != Phi         " << (g.ds_condition ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_certify(const PcpFile& f, bool json, const std::string& out_path, Exec exec,
                std::ostream& out, std::ostream& err) {
  CertReport r = certify_group(f.presentation, f.group_id, exec);
  const std::string text = emit_report(r, json ? ReportFormat::json : ReportFormat::text);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    file << text;
    if (!file) {
      err << "pgcert: cannot write " << out_path << "\n";
      return kUsage;
    }
  }
  if (r.outcome == Outcome::theorem_violation) {
    err << "pgcert: THEOREM_VIOLATION on " << f.group_id << ": " << r.violation << "\n";
    return kTheoremViolation;
  }
  return kOk;
}

int cmd_audit(const std::string& dir, bool json, Exec exec, std::ostream& out, std::ostream& err) {
  AuditResult a = audit_directory(dir, exec);
  out << emit_audit(a, json ? ReportFormat::json : ReportFormat::text);
  if (a.theorem_violations() > 0) {
    err << "pgcert: " << a.theorem_violations() << " THEOREM_VIOLATION report(s)\n";
    return kTheoremViolation;
  }
  if (a.load_failures() > 0)
    return kInvalidInput;
  if (a.route_mismatches() > 0 || !a.unlisted_manifest_ids.empty())
    return kManifestMismatch;
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Route and certify noninner automorphisms of coclass-2 p-groups", "pgcert"};
  app.require_subcommand(1);
  std::string file, dir, out_path;
  bool json = false, serial = false;

  auto* validate = app.add_subcommand("validate", "Parse and consistency-check a .pcp file");
  validate->add_option("file", file, "presentation file")->required();
  auto* series = app.add_subcommand("series", "Central series, class, coclass, Frattini, d(G)");
  series->add_option("file", file, "presentation file")->required();
  auto* conditions = app.add_subcommand("conditions", "Route decision and diagnostics");
  conditions->add_option("file", file, "presentation file")->required();
  auto* certify = app.add_subcommand("certify", "Certify a noninner automorphism of order p");
  certify->add_option("file", file, "presentation file")->required();
  certify->add_flag("--json", json, "JSON report");
  certify->add_option("--out", out_path, "write the report here instead of stdout");
  certify->add_flag("--serial", serial, "use the serial reference kernels");
  auto* audit = app.add_subcommand("audit", "Certify every .pcp file in a directory");
  audit->add_option("dir", dir, "corpus directory")->required();
  audit->add_flag("--json", json, "JSON summary");
  audit->add_flag("--serial", serial, "use the serial reference kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  const Exec exec = serial ? Exec::serial : Exec::parallel;

  try {
    if (audit->parsed())
      return cmd_audit(dir, json, exec, out, err);
    PcpFile f = read_pcp_file(file);
    if (validate->parsed())
      return cmd_validate(f, out);
    if (series->parsed())
      return cmd_series(f, out);
    if (conditions->parsed())
      return cmd_conditions(f, out);
    return cmd_certify(f, json, out_path, exec, out, err);
  } catch (const InconsistentPresentation& e) {
    err << "pgcert: " << file << ": " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ParseError& e) {
    err << "pgcert: " << file << ": " << e.what() << "\n";
    return kInvalidInput;
  } catch (const PresentationError& e) {
    err << "pgcert: " << file << ": " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvariantViolation& e) {
    err << "pgcert: invariant violation: " << e.what() << "\n";
    return kTheoremViolation;
  } catch (const std::exception& e) {
    err << "pgcert: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace pgcert::cli
