#include "tsurf/geomcore/curve_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

#include "tsurf/exprlang/parser.hpp"

namespace tsurf::geom {

using nlohmann::json;

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

namespace {

const std::vector<expr::Var> kCurveVars = {expr::Var::t};

expr::Expr component(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw InputError(std::string("curve JSON: missing string '") + key + "'");
  try {
    return expr::parse(j[key].get<std::string>(), kCurveVars);
  } catch (const expr::ParseError& e) {
    throw InputError(std::string("curve JSON: component ") + key + ": " + e.what());
  }
}

}  // namespace

Curve curve_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InputError("curve JSON: expected an object with \"kind\"");
  const bool arclength = j.value("arclength", false);
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "analytic") {
    if (!j.contains("domain") || !j["domain"].is_array() || j["domain"].size() != 2)
      throw InputError("curve JSON: \"domain\" must be [a, b]");
    const double a = j["domain"][0].get<double>(), b = j["domain"][1].get<double>();
    return Curve::analytic(component(j, "x"), component(j, "y"), component(j, "z"), a, b, arclength);
  }
  if (kind == "samples") {
    if (!j.contains("points") || !j["points"].is_array()) throw InputError("curve JSON: \"points\" must be an array");
    std::vector<std::array<double, 4>> rows;
    for (const auto& p : j["points"]) {
      if (!p.is_array() || p.size() != 4) throw InputError("curve JSON: each point must be [t, x, y, z]");
      rows.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>(), p[3].get<double>()});
    }
    return Curve::samples(std::move(rows), arclength);
  }
  throw InputError("curve JSON: unknown kind '" + kind + "'");
}

json curve_to_json(const Curve& c) {
  json j;
  if (const auto* e = c.expressions()) {
    j["kind"] = "analytic";
    j["x"] = (*e)[0].str();
    j["y"] = (*e)[1].str();
    j["z"] = (*e)[2].str();
    j["domain"] = {c.t0(), c.t1()};
  } else if (const auto* rows = c.sample_rows()) {
    j["kind"] = "samples";
    j["points"] = json::array();
    for (const auto& r : *rows) j["points"].push_back({r[0], r[1], r[2], r[3]});
  } else {
    throw Error("only analytic and sampled curves can be serialized");
  }
  j["arclength"] = c.arclength();
  return j;
}

Curve load_curve(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open curve file '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("curve file '" + path.string() + "': " + e.what());
  }
  try {
    return curve_from_json(j);
  } catch (const json::exception& e) {
    throw InputError("curve file '" + path.string() + "': " + e.what());
  }
}

namespace {

struct FixtureCall {
  std::string name;
  std::vector<double> args;
};

FixtureCall split_call(std::string_view call) {
  FixtureCall out;
  const auto open = call.find('(');
  out.name = std::string(call.substr(0, open));
  if (open == std::string_view::npos) return out;
  if (call.back() != ')') throw InputError("fixture '" + std::string(call) + "': missing ')'");
  std::string_view body = call.substr(open + 1, call.size() - open - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw InputError("fixture '" + std::string(call) + "': bad argument '" + std::string(item) + "'");
    out.args.push_back(x);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

double arg(const FixtureCall& f, std::size_t i, double fallback) { return i < f.args.size() ? f.args[i] : fallback; }

json analytic(const std::string& x, const std::string& y, const std::string& z, double a, double b, bool arclength) {
  return json{{"kind", "analytic"}, {"x", x}, {"y", y}, {"z", z}, {"domain", {a, b}}, {"arclength", arclength}};
}

std::string num(double x) {
  const std::string s = format_double(x);
  return x < 0 ? "(" + s + ")" : s;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"line(a,b,c)", "circle(r)", "helix(a,b)", "scherk-slice(k)", "fourier(p,q)"};
}

json fixture_json(std::string_view call) {
  const FixtureCall f = split_call(call);
  const double two_pi = 2 * std::numbers::pi;
  if (f.name == "line") {
    Vec3 d(arg(f, 0, 0.0), arg(f, 1, 0.0), arg(f, 2, 1.0));
    if (f.args.size() > 3) throw InputError("line takes at most 3 arguments");
    if (d.norm() == 0.0) throw InputError("line direction must be nonzero");
    d.normalize();
    return analytic(num(d[0]) + "*t", num(d[1]) + "*t", num(d[2]) + "*t", -1.0, 1.0, true);
  }
  if (f.name == "circle") {
    const double r = arg(f, 0, 1.0);
    if (!(r > 0) || f.args.size() > 1) throw InputError("circle(r) needs one radius r > 0");
    const std::string rs = num(r);
    return analytic(rs + "*cos(t/" + rs + ")", rs + "*sin(t/" + rs + ")", "0", 0.0, two_pi * r, true);
  }
  if (f.name == "helix") {
    const double a = arg(f, 0, 1.0), b = arg(f, 1, 1.0);
    if (!(a > 0) || f.args.size() > 2) throw InputError("helix(a,b) needs a > 0");
    const double c = std::sqrt(a * a + b * b);
    const std::string as = num(a), bs = num(b), cs = num(c);
    return analytic(as + "*cos(t/" + cs + ")", as + "*sin(t/" + cs + ")", bs + "*t/" + cs, 0.0, two_pi * c, true);
  }
  if (f.name == "scherk-slice") {
    const double k = arg(f, 0, 1.0);
    if (k == 1.0) return analytic("t", "0", "log(cos(t))", -1.2, 1.2, false);
    if (k == 2.0) return analytic("0", "t", "-log(cos(t))", -1.2, 1.2, false);
    throw InputError("scherk-slice(k) needs k = 1 or 2");
  }
  if (f.name == "fourier") {
    const double p = arg(f, 0, 0.2), q = arg(f, 1, 0.3);
    if (!(std::abs(p) < 0.5) || f.args.size() > 2) throw InputError("fourier(p,q) needs |p| < 1/2");
    const std::string ps = num(p), qs = num(q);
    return analytic("cos(t) + " + ps + "*cos(2*t)", "sin(t) - " + ps + "*sin(2*t)", qs + "*sin(3*t)", 0.0, two_pi,
                    false);
  }
  throw InputError("unknown fixture '" + f.name + "'");
}

Curve fixture(std::string_view call) { return curve_from_json(fixture_json(call)); }

}  // namespace tsurf::geom
