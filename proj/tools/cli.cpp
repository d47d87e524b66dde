#include "cli.hpp"

#include "tropfan/error.hpp"
#include "tropfan/evalmap.hpp"
#include "tropfan/io.hpp"
#include "tropfan/morphism.hpp"
#include "tropfan/svg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <ostream>
#include <utility>

namespace tropfan::cli {

namespace {

using io::Json;

constexpr long long kDefaultMemberBound = 64;

struct Output {
  Json json;
  std::string raw;  // used instead of json when non-empty
};

// A JSON argument is either inline JSON text or a path to a file; paths
// inside it resolve against the file's directory.
struct JsonArg {
  Json value;
  std::filesystem::path base_dir;
};

JsonArg load_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return {Json::parse(arg), std::filesystem::current_path()};
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("inline JSON: ") + e.what());
    }
  }
  std::filesystem::path p(arg);
  return {io::load_json(p), p.parent_path()};
}

WeightedFan load_fan(const std::string& arg) { return io::fan_from_json(load_arg(arg).value); }

// "@file.json" holds the JSON polynomial format; anything else is text.
LaurentPoly load_poly(const std::string& arg, std::optional<std::size_t> num_vars) {
  if (!arg.empty() && arg.front() == '@') {
    LaurentPoly p = io::poly_from_json(io::load_json(arg.substr(1)));
    if (num_vars && p.num_vars() != *num_vars) {
      throw Error(ErrorCode::DimensionMismatch, "polynomial in '" + arg.substr(1) + "' has " +
                                                    std::to_string(p.num_vars()) + " variables, need " +
                                                    std::to_string(*num_vars));
    }
    return p;
  }
  return io::parse_poly(arg, num_vars);
}

// Two polynomials over a common variable count.
std::pair<LaurentPoly, LaurentPoly> load_pair(const std::string& a, const std::string& b,
                                              std::optional<std::size_t> num_vars) {
  if (!num_vars) {
    num_vars = std::max(load_poly(a, std::nullopt).num_vars(), load_poly(b, std::nullopt).num_vars());
  }
  return {load_poly(a, num_vars), load_poly(b, num_vars)};
}

Json ray_map_json(const WeightedFan& source, const WeightedFan& target,
                  const std::vector<std::optional<std::size_t>>& map) {
  Json out = Json::object();
  for (std::size_t i = 0; i < map.size(); ++i) {
    out[ray_name(source.ray(i))] = map[i] ? Json(ray_name(target.ray(*map[i]))) : Json("0");
  }
  return out;
}

Json germ_json(const GermValue& g) {
  if (g.is_bottom()) return "-inf";
  return Json{{"function", io::format_poly(g.carrier().poly())}, {"value", io::to_json(g.grade())}};
}

long long member_bound_default() {
  const char* env = std::getenv("TROPFAN_MEMBER_BOUND");
  if (!env || !*env) return kDefaultMemberBound;
  try {
    std::size_t used = 0;
    long long v = std::stoll(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("TROPFAN_MEMBER_BOUND", "must be a positive integer");
}

RayFunction parse_values(const std::string& text, std::size_t num_rays) {
  Json arr = Json::array();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(start, comma - start);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item == "-inf") {
      arr.push_back(item);
    } else {
      arr.push_back(to_string(parse_integer(item)));
    }
    start = comma + 1;
  }
  return io::ray_function_from_json(arr, num_rays);
}

struct Options {
  std::string fan, poly, poly2, point, file, file2, values;
  bool report = false;
  long long bound = 0;
};

void add_fan_commands(CLI::App& app, Options& o, std::function<Output()>& action) {
  auto* fan = app.add_subcommand("fan", "Weighted 1-dimensional fans");
  fan->require_subcommand(1);

  auto* check = fan->add_subcommand("check", "Balancing and realizability diagnostics");
  check->add_option("fan", o.fan, "Fan JSON file or inline JSON")->required();
  check->callback([&] {
    action = [&] {
      WeightedFan x = load_fan(o.fan);
      Json out{{"ambient_dim", x.ambient_dim()}, {"rays", io::ray_names(x)}};
      const bool balanced = check_balancing(x);
      out["balanced"] = balanced;
      if (!balanced) {
        IntVector sum(x.ambient_dim());
        for (const Ray& r : x.rays()) {
          for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += r.weight * r.direction[i];
        }
        out["imbalance"] = io::to_json(sum);
      }
      out["realizable"] = is_realizable(generator_matrix(x));
      Integer max_weight = 1;
      for (const Ray& r : x.rays()) max_weight = std::max(max_weight, r.weight);
      out["max_weight"] = io::to_json(max_weight);
      return Output{out, {}};
    };
  });

  auto* smooth = fan->add_subcommand("smooth", "Decide smoothness at the origin");
  smooth->add_option("fan", o.fan, "Fan JSON file or inline JSON")->required();
  smooth->add_flag("--report", o.report, "Include rank, invariant factors and index");
  smooth->callback([&] {
    action = [&] {
      WeightedFan x = load_fan(o.fan);
      SmoothReport r = smooth_report(x);
      Json out{{"smooth", r.smooth}};
      if (!r.smooth) out["reason"] = r.reason(x);
      if (o.report) {
        out["rank"] = r.rank;
        out["expected_rank"] = r.expected_rank;
        out["invariant_factors"] = io::to_json(r.invariant_factors);
        if (r.rank == r.expected_rank) out["index"] = io::to_json(r.index);
      }
      return Output{out, {}};
    };
  });

  auto* evalmap = fan->add_subcommand("evalmap", "Weighted evaluation map of a Boolean polynomial");
  evalmap->add_option("fan", o.fan, "Fan JSON file or inline JSON")->required();
  evalmap->add_option("--poly", o.poly, "Boolean polynomial (text or @file.json)")->required();
  evalmap->callback([&] {
    action = [&] {
      WeightedFan x = load_fan(o.fan);
      RayFunction f = eval_map(x, load_poly(o.poly, x.ambient_dim()));
      Json out = io::to_json(x, f);
      auto deg = f.degree();
      out["degree"] = deg ? io::to_json(*deg) : Json("-inf");
      return Output{out, {}};
    };
  });

  auto* gens = fan->add_subcommand("generators", "Generator matrix, one column per ray");
  gens->add_option("fan", o.fan, "Fan JSON file or inline JSON")->required();
  gens->callback([&] {
    action = [&] {
      WeightedFan x = load_fan(o.fan);
      IntMatrix m = generator_matrix(x);
      Json cols = Json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(io::to_json(m.column(j)));
      Json rel = Json::array();
      for (const IntVector& t : linear_relations(m)) rel.push_back(io::to_json(t));
      return Output{Json{{"rays", io::ray_names(x)}, {"columns", cols}, {"relations", rel}}, {}};
    };
  });

  auto* recon = fan->add_subcommand("reconstruct", "Fan from a generator matrix");
  recon->add_option("matrix", o.file, "Matrix JSON file or inline JSON")->required();
  recon->callback([&] {
    action = [&] {
      return Output{io::to_json(reconstruct_fan(io::matrix_from_json(load_arg(o.file).value))), {}};
    };
  });

  auto* plot = fan->add_subcommand("plot", "SVG drawing of a fan in R^2");
  plot->add_option("fan", o.fan, "Fan JSON file or inline JSON")->required();
  plot->callback([&] {
    action = [&] { return Output{{}, render_svg(load_fan(o.fan))}; };
  });
}

void add_poly_commands(CLI::App& app, Options& o, std::function<Output()>& action) {
  auto* poly = app.add_subcommand("poly", "Tropical Laurent polynomials");
  poly->require_subcommand(1);

  auto point_dim = [&]() -> std::optional<std::size_t> {
    if (o.point.empty()) return std::nullopt;
    return io::parse_point(o.point).size();
  };

  auto* ev = poly->add_subcommand("eval", "Evaluate at a rational point");
  ev->add_option("--point", o.point, "Comma-separated rationals")->required();
  ev->add_option("poly", o.poly, "Polynomial (text or @file.json)")->required();
  ev->callback([&] {
    action = [&] {
      RatVector p = io::parse_point(o.point);
      return Output{Json{{"value", io::to_json(eval(load_poly(o.poly, p.size()), p))}}, {}};
    };
  });

  auto* init = poly->add_subcommand("initial", "Initial form at a point");
  init->add_option("--point", o.point, "Comma-separated rationals")->required();
  init->add_option("poly", o.poly, "Polynomial (text or @file.json)")->required();
  init->callback([&] {
    action = [&] {
      RatVector p = io::parse_point(o.point);
      return Output{Json{{"initial", io::format_poly(initial_form(load_poly(o.poly, p.size()), p))}},
                    {}};
    };
  });

  auto* canon = poly->add_subcommand("canon", "Canonical representative of the function");
  canon->add_option("poly", o.poly, "Polynomial (text or @file.json)")->required();
  canon->callback([&] {
    action = [&] {
      return Output{Json{{"canonical", io::format_poly(canonicalize(load_poly(o.poly, std::nullopt)).poly())}},
                    {}};
    };
  });

  auto* eq = poly->add_subcommand("eq", "Equality as functions, with a witness point if unequal");
  eq->add_option("p", o.poly, "First polynomial")->required();
  eq->add_option("q", o.poly2, "Second polynomial")->required();
  eq->callback([&] {
    action = [&] {
      auto [p, q] = load_pair(o.poly, o.poly2, std::nullopt);
      FnComparison c = fn_eq(p, q);
      Json out{{"equal", c.equal}};
      if (!c.equal) {
        out["witness"] = io::to_json(*c.witness);
        out["values"] = Json::array({io::to_json(eval(p, *c.witness)), io::to_json(eval(q, *c.witness))});
      }
      return Output{out, {}};
    };
  });

  auto* germ = poly->add_subcommand("germ", "Germ at a point; compares two germs if q is given");
  germ->add_option("--point", o.point, "Comma-separated rationals")->required();
  germ->add_option("p", o.poly, "Polynomial")->required();
  germ->add_option("q", o.poly2, "Optional second polynomial");
  germ->callback([&, point_dim] {
    action = [&] {
      RatVector pt = io::parse_point(o.point);
      Json out;
      if (o.poly2.empty()) {
        LaurentPoly p = load_poly(o.poly, pt.size());
        out["germ"] = germ_json(germ_localize(p, pt));
        if (!p.is_bottom()) out["radius"] = io::to_json(germ_safe_radius(p, pt));
      } else {
        auto [p, q] = load_pair(o.poly, o.poly2, point_dim());
        out["equal"] = germ_eq(p, q, pt);
        out["germs"] = Json::array({germ_json(germ_localize(p, pt)), germ_json(germ_localize(q, pt))});
      }
      return Output{out, {}};
    };
  });
}

void add_morphism_commands(CLI::App& app, Options& o, std::function<Output()>& action) {
  auto* morph = app.add_subcommand("morphism", "Fan morphisms and homomorphisms of image semirings");
  morph->require_subcommand(1);

  auto* check = morph->add_subcommand("check", "Support preservation and the induced ray map");
  check->add_option("morphism", o.file, "Morphism JSON file or inline JSON")->required();
  check->callback([&] {
    action = [&] {
      JsonArg arg = load_arg(o.file);
      WeightedFan source = io::fan_ref_from_json(arg.value.at("source"), arg.base_dir);
      WeightedFan target = io::fan_ref_from_json(arg.value.at("target"), arg.base_dir);
      IntMatrix t = io::matrix_from_json(arg.value.at("matrix"));
      if (!validate_morphism(t, source, target)) {
        Json outside = Json::array();
        for (const Ray& r : source.rays()) {
          if (!support_contains(target, t.apply(r.direction))) outside.push_back(ray_name(r));
        }
        return Output{Json{{"valid", false}, {"outside", outside}}, {}};
      }
      FanMorphism mu = FanMorphism::make(source, target, t);
      return Output{Json{{"valid", true}, {"ray_map", ray_map_json(source, target, ray_map(mu))}}, {}};
    };
  });

  auto* pull = morph->add_subcommand("pullback", "Pull back a polynomial along a morphism");
  pull->add_option("morphism", o.file, "Morphism JSON file or inline JSON")->required();
  pull->add_option("--poly", o.poly, "Polynomial on the target (text or @file.json)")->required();
  pull->callback([&] {
    action = [&] {
      JsonArg arg = load_arg(o.file);
      FanMorphism mu = io::morphism_from_json(arg.value, arg.base_dir);
      LaurentPoly q = load_poly(o.poly, mu.target().ambient_dim());
      Json out{{"poly", io::format_poly(pullback_poly(mu, q))}};
      if (q.is_boolean()) out["evalmap"] = io::to_json(mu.source(), pullback_evalmap(mu, q));
      return Output{out, {}};
    };
  });

  auto* images = morph->add_subcommand("images", "Generator images of the pullback homomorphism");
  images->add_option("morphism", o.file, "Morphism JSON file or inline JSON")->required();
  images->callback([&] {
    action = [&] {
      JsonArg arg = load_arg(o.file);
      return Output{io::to_json(pullback_homspec(io::morphism_from_json(arg.value, arg.base_dir))), {}};
    };
  });

  auto* realize = morph->add_subcommand("realize", "Realize a geometric homomorphism as a morphism");
  realize->add_option("homspec", o.file, "Homomorphism JSON file or inline JSON")->required();
  realize->callback([&] {
    action = [&] {
      JsonArg arg = load_arg(o.file);
      HomSpec h = io::homspec_from_json(arg.value, arg.base_dir);
      FanMorphism mu = realize_morphism(h);
      return Output{Json{{"geometric", true},
                         {"matrix", io::to_json(mu.matrix())["data"]},
                         {"ray_map", ray_map_json(mu.source(), mu.target(), ray_map(mu))}},
                    {}};
    };
  });
}

void add_matrix_commands(CLI::App& app, Options& o, std::function<Output()>& action) {
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form P A Q = D");
  snf_cmd->add_option("matrix", o.file, "Matrix JSON file or inline JSON")->required();
  snf_cmd->callback([&] {
    action = [&] {
      SmithForm s = snf(io::matrix_from_json(load_arg(o.file).value));
      return Output{Json{{"P", io::to_json(s.P)},
                         {"D", io::to_json(s.D)},
                         {"Q", io::to_json(s.Q)},
                         {"invariant_factors", io::to_json(s.invariant_factors)}},
                    {}};
    };
  });

  auto* hnf_cmd = app.add_subcommand("hnf", "Column Hermite normal form A U = H");
  hnf_cmd->add_option("matrix", o.file, "Matrix JSON file or inline JSON")->required();
  hnf_cmd->callback([&] {
    action = [&] {
      HermiteForm h = hnf(io::matrix_from_json(load_arg(o.file).value));
      return Output{Json{{"H", io::to_json(h.H)}, {"U", io::to_json(h.U)}, {"rank", h.rank()}}, {}};
    };
  });

  auto* transport = app.add_subcommand("transport", "Unimodular T with T A = B");
  transport->add_option("a", o.file, "Matrix A")->required();
  transport->add_option("b", o.file2, "Matrix B")->required();
  transport->callback([&] {
    action = [&] {
      IntMatrix a = io::matrix_from_json(load_arg(o.file).value);
      IntMatrix b = io::matrix_from_json(load_arg(o.file2).value);
      return Output{Json{{"T", io::to_json(unimodular_transport(a, b))}}, {}};
    };
  });

  auto* member = app.add_subcommand("member", "Membership in the image of the evaluation map");
  member->add_option("fan", o.fan, "Fan JSON file or inline JSON")->required();
  member->add_option("--values", o.values, "Comma-separated values, one per ray in sorted order")
      ->required();
  member->add_option("--bound", o.bound, "Search bound on lattice coordinates")
      ->check(CLI::PositiveNumber);
  member->callback([&] {
    action = [&] {
      WeightedFan x = load_fan(o.fan);
      RayFunction g = parse_values(o.values, x.size());
      const long long bound = o.bound > 0 ? o.bound : member_bound_default();
      MembershipResult r = image_membership(x, g, bound);
      Json out;
      switch (r.status) {
        case MembershipStatus::Member:
          out["status"] = "member";
          out["witness"] = io::format_poly(*r.witness);
          break;
        case MembershipStatus::NonMember:
          out["status"] = "non-member";
          out["ray"] = ray_name(x.ray(*r.failed_ray));
          break;
        case MembershipStatus::Inconclusive:
          out["status"] = "inconclusive";
          out["ray"] = ray_name(x.ray(*r.failed_ray));
          out["bound"] = bound;
          break;
      }
      return Output{out, {}};
    };
  });
}

void write_error(std::ostream& out, std::string_view code, const std::string& message, bool pretty) {
  Json e{{"error", Json{{"code", code}, {"message", message}}}};
  out << e.dump(pretty ? 2 : -1) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact tropical fans, evaluation maps and integer lattices", "tropfan");
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  Options opts;
  std::function<Output()> action;
  add_fan_commands(app, opts, action);
  add_poly_commands(app, opts, action);
  add_morphism_commands(app, opts, action);
  add_matrix_commands(app, opts, action);

  std::vector<const char*> argv{"tropfan"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    write_error(out, "UsageError", e.what(), pretty);
    return 2;
  }

  try {
    Output result = action();
    if (!result.raw.empty()) {
      out << result.raw;
    } else {
      out << result.json.dump(pretty ? 2 : -1) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    write_error(out, to_string(e.code()), e.what(), pretty);
    return 1;
  } catch (const CLI::ParseError& e) {
    write_error(out, "UsageError", e.what(), pretty);
    return 2;
  } catch (const nlohmann::json::exception& e) {
    write_error(out, "ParseError", e.what(), pretty);
    return 1;
  } catch (const std::exception& e) {
    write_error(out, "InternalError", e.what(), pretty);
    return 1;
  }
}

}  // namespace tropfan::cli
