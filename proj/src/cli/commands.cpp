#include "tsurf/cli/commands.hpp"

#include <cctype>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "tsurf/cli/format.hpp"
#include "tsurf/exprlang/parser.hpp"
#include "tsurf/geomcore/curve_io.hpp"
#include "tsurf/geomcore/surface.hpp"
#include "tsurf/proofpipe/cases.hpp"
#include "tsurf/realizer/realizer.hpp"

namespace tsurf::cli {

using ojson = nlohmann::ordered_json;

namespace {

constexpr std::string_view kFixturePrefix = "fixture:";

geom::Curve load(const std::string& ref) {
  if (ref.starts_with(kFixturePrefix)) return geom::fixture(ref.substr(kFixturePrefix.size()));
  return geom::load_curve(ref);
}

ojson vec(const geom::Vec3& v) { return ojson::array({v[0], v[1], v[2]}); }

// Runs body and maps library errors onto the exit code contract.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const proof::MismatchError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(o.tol > 0) || !(o.h > 0) || !(o.tol_k > 0) || !(o.tol_c > 0)) throw InputError("tolerances must be positive");
    if (o.format != "json" && o.format != "csv") throw InputError("--format must be json or csv");
    const auto [nu, nv] = parse_grid(o.grid);
    const geom::SurfacePatch s = geom::SurfacePatch::make(load(o.alpha), load(o.beta));

    std::ostringstream csv;
    csv << "u,v,phi,L,N,K\n";
    ojson skipped = ojson::array();
    double codazzi_1 = 0.0, codazzi_2 = 0.0, egregium = 0.0;
    const auto forms = [&](double u, double v) { return geom::form_coefficients(s, u, v, o.tol); };
    for (const auto& p : geom::sweep(s, nu, nv, o.tol)) {
      if (!p.regular) {
        skipped.push_back(ojson::array({p.u, p.v}));
        continue;
      }
      csv << fmt(p.u) << ',' << fmt(p.v) << ',' << fmt(p.fc.phi) << ',' << fmt(p.fc.L) << ',' << fmt(p.fc.N) << ','
          << fmt(geom::gauss_curvature_forms(p.fc)) << '\n';
      try {
        const auto [r1, r2] = geom::codazzi_residual(forms, p.u, p.v, o.h);
        codazzi_1 = std::max(codazzi_1, r1);
        codazzi_2 = std::max(codazzi_2, r2);
      } catch (const geom::RegularityError&) {
      }
      egregium = std::max(egregium, geom::egregium_residual(p.fc));
    }
    const real::SurfaceClassification cls = real::classify_surface(s, nu, nv, o.tol_k, o.tol_c);
    const real::ConservationReport cons = real::conservation_AB(forms, s.domain, nu, nv);

    ojson r;
    r["alpha"] = o.alpha;
    r["beta"] = o.beta;
    r["grid"] = {nu, nv};
    r["domain"] = {{"u", {s.domain.u0, s.domain.u1}}, {"v", {s.domain.v0, s.domain.v1}}};
    r["points"] = cls.points;
    r["skipped"] = skipped;
    r["k_mean"] = cls.k_mean;
    r["k_var"] = cls.k_var;
    r["k_min"] = cls.k_min;
    r["k_max"] = cls.k_max;
    r["cylindrical"] = cls.cylinder.is_cylindrical;
    r["ruling"] = cls.cylinder.ruling ? vec(*cls.cylinder.ruling) : ojson(nullptr);
    r["ruling_generator"] = cls.cylinder.is_cylindrical ? ojson(cls.cylinder.generator) : ojson(nullptr);
    r["tangent_spread"] = cls.cylinder.max_deviation;
    r["constant_k"] = cls.constant_k;
    r["constant_k_implies_cylinder"] = cls.consistent;
    r["residuals"] = {{"k_routes", cls.route_gap},
                      {"codazzi_1", codazzi_1},
                      {"codazzi_2", codazzi_2},
                      {"egregium", egregium}};
    r["conservation"] = {{"A_spread", cons.max_spread_A}, {"B_spread", cons.max_spread_B}};

    if (o.out.empty()) {
      out << (o.format == "json" ? dump(r) : csv.str());
    } else {
      write_file(o.out, dump(r));
      std::filesystem::path csv_path = o.csv.empty() ? std::filesystem::path(o.out).replace_extension(".csv")
                                                     : std::filesystem::path(o.csv);
      write_file(csv_path, csv.str());
      out << "wrote " << o.out << " and " << csv_path.string() << "\n";
    }
    if (!o.csv.empty() && o.out.empty()) write_file(o.csv, csv.str());
    return kExitOk;
  });
}

int cmd_verify_proof(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.which != "general" && o.which != "planar") throw InputError("case must be general or planar");
    const proof::Ledger ledger = o.which == "general" ? proof::run_general_case() : proof::run_planar_case();
    if (!o.out.empty()) {
      std::ostringstream csv;
      ledger.write_csv(csv);
      const std::filesystem::path dir(o.out);
      write_file(dir / ("ledger_" + o.which + ".csv"), csv.str());
      write_file(dir / ("summary_" + o.which + ".json"), ledger.summary_json() + "\n");
    }
    for (const auto& line : ledger.conclusion) out << line << "\n";
    out << "entries: " << ledger.entries().size() << ", match " << ledger.count(proof::Status::match) << ", scaled "
        << ledger.count(proof::Status::scaled) << ", erratum " << ledger.count(proof::Status::erratum)
        << ", mismatch " << ledger.count(proof::Status::mismatch) << ", proven "
        << ledger.count(proof::Status::proven) << ", failed " << ledger.count(proof::Status::failed) << "\n";
    if (const auto* p = ledger.first_problem()) {
      err << "first mismatch: " << p->name << " (" << proof::status_name(p->status) << ")";
      if (!p->note.empty()) err << ": " << p->note;
      err << "\n";
      return kExitMismatch;
    }
    if (!ledger.conclusion_proven()) {
      err << "conclusion not derived\n";
      return kExitMismatch;
    }
    if (o.strict) {
      for (const auto& e : ledger.entries()) {
        if (e.status == proof::Status::erratum) {
          err << "first mismatch (strict): " << e.name << ": " << e.note << "\n";
          return kExitMismatch;
        }
      }
    }
    return kExitOk;
  });
}

int cmd_realize(const RealizeOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto [nu, nv] = parse_grid(o.grid);
    if (o.domain.size() != 4 || !(o.domain[1] > o.domain[0]) || !(o.domain[3] > o.domain[2]))
      throw InputError("--domain needs u0 u1 v0 v1 with u0 < u1 and v0 < v1");
    real::RealizabilityInput in{expr::parse(o.phi, {expr::Var::u, expr::Var::v}), expr::parse(o.A, {expr::Var::u}),
                                expr::parse(o.B, {expr::Var::v}), o.K, 1, 1,
                                {o.domain[0], o.domain[1], o.domain[2], o.domain[3]}};
    const int sign = o.K < 0 ? -1 : 1;
    in.eps1 = o.eps1.value_or(1);
    in.eps2 = o.eps2.value_or(in.eps1 * sign);
    const real::RealizabilityReport rep = real::realizability_check(in, nu, nv);
    ojson r;
    r["phi"] = in.phi.str();
    r["A"] = in.A.str();
    r["B"] = in.B.str();
    r["K"] = o.K;
    r["applicable"] = rep.applicable;
    if (!rep.applicable) {
      r["message"] = rep.message;
    } else {
      r["eps"] = {in.eps1, in.eps2};
      r["grid"] = {nu, nv};
      r["points"] = rep.points;
      r["residuals"] = {{"metric", rep.metric},
                        {"gauss", rep.gauss},
                        {"egregium", rep.egregium},
                        {"codazzi_1", rep.codazzi_1},
                        {"codazzi_2", rep.codazzi_2}};
    }
    if (o.out.empty()) {
      out << dump(r);
    } else {
      write_file(o.out, dump(r));
    }
    if (!rep.applicable) err << rep.message << "\n";
    return kExitOk;
  });
}

int cmd_fixtures(const FixturesOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.list || o.names.empty()) {
      for (const auto& n : geom::fixture_names()) out << n << "\n";
      return kExitOk;
    }
    for (const auto& name : o.names) {
      const nlohmann::json j = geom::fixture_json(name);
      geom::curve_from_json(j);
      const std::string text = j.dump(2) + "\n";
      if (o.out.empty()) {
        out << text;
      } else {
        std::string file;
        for (char c : name) file += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.') ? c : '_';
        while (!file.empty() && file.back() == '_') file.pop_back();
        const auto path = std::filesystem::path(o.out) / (file + ".json");
        write_file(path, text);
        out << "wrote " << path.string() << "\n";
      }
    }
    return kExitOk;
  });
}

}  // namespace tsurf::cli
