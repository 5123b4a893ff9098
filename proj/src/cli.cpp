#include "maxplus/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "maxplus/cone.hpp"
#include "maxplus/convex_set.hpp"
#include "maxplus/errors.hpp"
#include "maxplus/halfspace.hpp"
#include "maxplus/json_io.hpp"
#include "maxplus/svg.hpp"

namespace maxplus::cli {

namespace {

using json_io::Json;
using json_io::ParseError;

struct Options {
  std::string set_path;
  std::string cone_path;
  std::string x_text;
  std::string halfspace_path;
  std::string side = "plus";
  std::string out_path;
  double tolerance = 0.0;
  std::size_t grid = 200;
};

/// Raised when a self-verified certificate does not check out.
class SelfCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string read_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path);
  if (!in) throw ParseError(flag + ": cannot open file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load(const std::string& path, const std::string& flag) {
  return json_io::parse(read_file(path, flag), flag + " " + path);
}

Vector parse_x(const Options& o, std::size_t dim) {
  if (o.x_text.empty()) throw ParseError("--x: required");
  Vector x = json_io::vector_from_json(json_io::parse(o.x_text, "--x"), "--x");
  if (x.dim() != dim)
    throw ParseError("--x: expected " + std::to_string(dim) + " coordinates, got " + std::to_string(x.dim()));
  return x;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& err) : o_(o), err_(err) {}

  std::optional<Cone> cone() const {
    if (o_.cone_path.empty()) return std::nullopt;
    Cone c = json_io::cone_from_json(load(o_.cone_path, "--cone"));
    if (c.stripped_zero_generators())
      err_ << "warning: dropped " << c.stripped_zero_generators() << " zero generator(s) from "
           << o_.cone_path << '\n';
    return c;
  }

  std::optional<ConvexSet> set() const {
    if (o_.set_path.empty()) return std::nullopt;
    ConvexSet a = json_io::set_from_json(load(o_.set_path, "--set"));
    if (a.stripped_zero_rays())
      err_ << "warning: dropped " << a.stripped_zero_rays() << " zero ray(s) from " << o_.set_path << '\n';
    return a;
  }

  ConvexSet require_set() const {
    auto a = set();
    if (!a) throw ParseError("--set: required");
    return *a;
  }

  Json member() const {
    Json out;
    if (auto c = cone()) {
      Vector x = parse_x(o_, c->dim());
      Vector proj = project(c->generators(), x);
      out["member"] = approx_equal(proj, x, o_.tolerance);
      out["projection"] = json_io::to_json(proj);
    } else {
      ConvexSet a = require_set();
      Vector x = lift(parse_x(o_, a.dim()), Scalar::one());
      Vector proj = project(maxplus::homogenize(a).generators(), x);
      out["member"] = approx_equal(proj, x, o_.tolerance);
      out["projection"] = json_io::to_json(proj);
    }
    return out;
  }

  Json basis() const {
    auto c = cone();
    if (!c) throw ParseError("--cone: required");
    return json_io::to_json(extract_basis(*c));
  }

  Json decompose() const {
    if (auto c = cone()) {
      Vector x = parse_x(o_, c->dim());
      ConeDecomposition d = maxplus::decompose(*c, x, o_.tolerance);
      if (!approx_equal(d.recombine(), x, o_.tolerance) || d.terms.size() > c->dim())
        throw SelfCheckFailure("cone decomposition failed its recombination check");
      return json_io::to_json(d);
    }
    ConvexSet a = require_set();
    Vector x = parse_x(o_, a.dim());
    SetDecomposition d = maxplus::decompose(a, x, o_.tolerance);
    Scalar top = Scalar::zero();
    for (const Term& t : d.point_terms) top = add(top, t.coeff);
    if (!approx_equal(d.recombine(), x, o_.tolerance) || !approx_equal(top, Scalar::one(), o_.tolerance) ||
        d.point_terms.size() + d.ray_terms.size() > a.dim() + 1)
      throw SelfCheckFailure("set decomposition failed its recombination check");
    return json_io::to_json(d);
  }

  Json extreme() const {
    ConvexSet a = require_set();
    Json out;
    out["extreme_points"] = json_io::to_json(Matrix(a.dim(), extreme_points(a)));
    return out;
  }

  Json recession() const { return json_io::to_json(maxplus::recession(require_set())); }

  Json homogenize() const { return json_io::to_json(maxplus::homogenize(require_set())); }

  Json minkowski() const {
    ConvexSet a = require_set();
    MinkowskiVerdict v = verify_minkowski(a);
    Json out;
    out["holds"] = v.holds;
    out["extreme_points"] = json_io::to_json(Matrix(a.dim(), extreme_points(a)));
    out["recession_basis"] = json_io::to_json(maxplus::recession(a).generators());
    out["missing_points"] = json_io::to_json(Matrix(a.dim(), v.missing_points));
    out["missing_rays"] = json_io::to_json(Matrix(a.dim(), v.missing_rays));
    if (!v.holds) {
      err_ << "error: co(ext(A)) (+) rec(A) does not reproduce the input set\n";
      failed_self_check_ = true;
    }
    return out;
  }

  Json halfspace() const {
    if (o_.halfspace_path.empty()) throw ParseError("--halfspace: required");
    HalfSpace h = json_io::halfspace_from_json(load(o_.halfspace_path, "--halfspace"));
    Side side = o_.side == "minus" ? Side::minus : Side::plus;
    Json out;
    out["side"] = o_.side;
    if (auto a = set()) {
      if (a->dim() != h.dim())
        throw ParseError("--set: dimension " + std::to_string(a->dim()) + " does not match half-space dimension " +
                         std::to_string(h.dim()));
      out["contains"] = contains_set(h, *a, side);
    } else {
      out["contains"] = contains(h, parse_x(o_, h.dim()), side);
    }
    return out;
  }

  std::string render() const {
    ConvexSet a = require_set();
    if (a.dim() != 2) throw ParseError("--set: render needs a set in dimension 2, got " + std::to_string(a.dim()));
    return render_svg(a, RenderOptions{o_.grid});
  }

  bool failed_self_check() const { return failed_self_check_; }

 private:
  const Options& o_;
  std::ostream& err_;
  mutable bool failed_self_check_ = false;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw ParseError("--out: cannot write '" + o.out_path + "'");
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finitely generated max-plus convex sets and cones"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tolerance", o.tolerance, "Absolute tolerance for final equality checks")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--out", o.out_path, "Write output to FILE instead of stdout");
  };
  auto add_set = [&](CLI::App* sub) { return sub->add_option("--set", o.set_path, "Convex set JSON file"); };
  auto add_cone = [&](CLI::App* sub) { return sub->add_option("--cone", o.cone_path, "Cone JSON file"); };
  auto add_x = [&](CLI::App* sub) { return sub->add_option("--x", o.x_text, "Query vector as a JSON array"); };

  std::vector<std::pair<CLI::App*, std::function<std::string(const Runner&)>>> commands;
  auto json_cmd = [&](CLI::App* sub, Json (Runner::*fn)() const) {
    add_common(sub);
    commands.emplace_back(sub, [fn](const Runner& r) { return (r.*fn)().dump(2) + "\n"; });
  };

  {
    auto* sub = app.add_subcommand("member", "Membership test with the canonical projection as witness");
    auto* s = add_set(sub);
    auto* c = add_cone(sub);
    s->excludes(c);
    add_x(sub)->required();
    json_cmd(sub, &Runner::member);
  }
  {
    auto* sub = app.add_subcommand("basis", "Normalized extreme generators of a cone");
    add_cone(sub)->required();
    json_cmd(sub, &Runner::basis);
  }
  {
    auto* sub = app.add_subcommand("decompose", "Certificate writing x through extreme generators/points");
    auto* s = add_set(sub);
    auto* c = add_cone(sub);
    s->excludes(c);
    add_x(sub)->required();
    json_cmd(sub, &Runner::decompose);
  }
  {
    auto* sub = app.add_subcommand("extreme-points", "Sorted extreme points of a convex set");
    add_set(sub)->required();
    json_cmd(sub, &Runner::extreme);
  }
  {
    auto* sub = app.add_subcommand("recession", "Basis of the recession cone of a convex set");
    add_set(sub)->required();
    json_cmd(sub, &Runner::recession);
  }
  {
    auto* sub = app.add_subcommand("homogenize", "Lift a convex set to its cone in dimension n+1");
    add_set(sub)->required();
    json_cmd(sub, &Runner::homogenize);
  }
  {
    auto* sub = app.add_subcommand("minkowski-verify", "Check A = co(ext(A)) (+) rec(A)");
    add_set(sub)->required();
    json_cmd(sub, &Runner::minkowski);
  }
  {
    auto* sub = app.add_subcommand("halfspace-check", "Containment of a vector or a set in a half-space");
    sub->add_option("--halfspace", o.halfspace_path, "Half-space JSON file")->required();
    sub->add_option("--side", o.side, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
    auto* s = add_set(sub);
    auto* x = add_x(sub);
    s->excludes(x);
    json_cmd(sub, &Runner::halfspace);
  }
  {
    auto* sub = app.add_subcommand("render", "SVG drawing of a set in dimension 2");
    add_set(sub)->required();
    sub->add_option("--grid", o.grid, "Sampling grid cells per axis")->check(CLI::PositiveNumber);
    add_common(sub);
    commands.emplace_back(sub, [](const Runner& r) { return r.render(); });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  Runner runner(o, err);
  try {
    for (auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      emit(o, out, fn(runner));
      return runner.failed_self_check() ? kSelfCheckFailed : kOk;
    }
  } catch (const NotMember& e) {
    Json cert;
    cert["member"] = false;
    cert["projection"] = json_io::to_json(Vector(e.projection()));
    out << cert.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const SelfCheckFailure& e) {
    err << "internal error: " << e.what() << '\n';
    return kSelfCheckFailed;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace maxplus::cli
