#include "schubert/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubert/cw.hpp"
#include "schubert/error.hpp"
#include "schubert/problems.hpp"

namespace schubert::cli {

namespace {

using nlohmann::json;

struct Factor {
  Partition partition;
  Twist twist = Twist::O;
};

struct Options {
  bool json = false;
  bool draw = false;
  bool checkerboard = false;
  std::string frame;
  std::string ring = "chow";
  std::string twist = "o";
  std::string method = "checkerboard";
  std::vector<std::string> factors;
  std::string problem;
  std::vector<int> problem_args;
  int max_n = 10;
};

// "5,2,1" or "5,2,1:det".
Factor parse_factor(const std::string& text, Frame f) {
  Factor out;
  std::string_view s(text);
  const auto colon = s.rfind(':');
  if (colon != std::string_view::npos) {
    out.twist = parse_twist(s.substr(colon + 1));
    s = s.substr(0, colon);
  }
  out.partition = Partition::parse(s);
  if (!fits_in_frame(out.partition, f)) {
    throw FrameError("partition (" + out.partition.to_string() + ") does not fit the " + f.to_string() + " frame");
  }
  return out;
}

std::vector<Factor> parse_factors(const Options& o, Frame f) {
  std::vector<Factor> out;
  for (const auto& s : o.factors) out.push_back(parse_factor(s, f));
  return out;
}

json parts_json(const Partition& p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

json chow_json(const ChowClass& x) {
  json arr = json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    arr.push_back({{"partition", parts_json(it->first)}, {"coeff", std::to_string(it->second)}});
  }
  return arr;
}

json ch2_json(const Ch2Class& x) {
  json arr = json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    arr.push_back({{"partition", parts_json(*it)}, {"coeff", "1 (mod 2)"}});
  }
  return arr;
}

json w_json(const WClass& x) {
  std::map<Partition, std::pair<WKey, Int>> by_diagram;
  for (const auto& [key, c] : x.terms()) by_diagram.emplace(x.diagram(key), std::make_pair(key, c));
  json arr = json::array();
  for (auto it = by_diagram.rbegin(); it != by_diagram.rend(); ++it) {
    const auto& [key, c] = it->second;
    arr.push_back({{"partition", parts_json(it->first)},
                   {"coeff", std::to_string(c)},
                   {"core", parts_json(key.core)},
                   {"extra", to_string(key.extra)}});
  }
  return arr;
}

json degree_json(const Degree& d) {
  if (const auto* gw = std::get_if<GWForm>(&d)) {
    return {{"pos", std::to_string(gw->pos)}, {"neg", std::to_string(gw->neg)}};
  }
  return std::to_string(std::get<Int>(d));
}

json iclass_json(const IClass& x) {
  return {{"free", w_json(x.free())}, {"torsion", ch2_json(x.torsion())}, {"twist", to_string(x.twist())}};
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Appends a rendering of each listed diagram when requested.
void draw(std::ostream& out, const Options& o, const std::vector<Partition>& diagrams) {
  if (!o.draw && !o.checkerboard) return;
  for (const auto& p : diagrams) {
    out << '\n' << p.to_string() << ":\n" << render_diagram(p, o.checkerboard);
  }
}

template <class Map>
std::vector<Partition> keys_descending(const Map& m) {
  std::vector<Partition> out;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if constexpr (std::is_same_v<typename Map::value_type, Partition>) {
      out.push_back(*it);
    } else {
      out.push_back(it->first);
    }
  }
  return out;
}

std::vector<Partition> w_diagrams(const WClass& x) {
  std::set<Partition> ds;
  for (const auto& [key, c] : x.terms()) ds.insert(x.diagram(key));
  return keys_descending(ds);
}

std::string degree_text(const Degree& d) { return to_string(d); }

int cmd_mult(const Options& o, std::ostream& out) {
  const Frame f = Frame::parse(o.frame);
  const std::vector<Factor> factors = parse_factors(o, f);
  json j = {{"ring", o.ring}, {"frame", f.to_string()}};

  if (o.ring == "chow") {
    ChowClass x = ChowClass::one(f);
    for (const auto& fa : factors) x = mult(x, ChowClass::basis(f, fa.partition));
    if (o.json) {
      j["result"] = chow_json(x);
      emit_json(out, j);
    } else {
      out << x.to_string() << '\n';
      draw(out, o, keys_descending(x.terms()));
    }
  } else if (o.ring == "ch2") {
    Ch2Class x = Ch2Class::one(f);
    for (const auto& fa : factors) x = mult2(x, Ch2Class::basis(f, fa.partition));
    if (o.json) {
      j["result"] = ch2_json(x);
      emit_json(out, j);
    } else {
      out << x.to_string() << '\n';
      draw(out, o, keys_descending(x.terms()));
    }
  } else if (o.ring == "w") {
    WClass x = WClass::one(f);
    for (const auto& fa : factors) x = wmult(x, WClass::from_diagram(f, fa.partition));
    if (o.json) {
      j["result"] = w_json(x);
      emit_json(out, j);
    } else {
      out << x.to_string() << '\n';
      draw(out, o, w_diagrams(x));
    }
  } else if (o.ring == "i" || o.ring == "cw") {
    CWClass x = CWClass::one(f);
    for (const auto& fa : factors) x = cwmult(x, lift_schubert(fa.partition, f, fa.twist));
    const bool top = std::all_of(x.chow().terms().begin(), x.chow().terms().end(),
                                 [&](const auto& t) { return t.first.area() == f.dimension(); });
    if (o.json) {
      j["i"] = iclass_json(x.ipart());
      if (o.ring == "cw") {
        j["chow"] = chow_json(x.chow());
        if (top) j["degree"] = degree_json(cwdegree(x));
      }
      emit_json(out, j);
    } else {
      out << "free: " << x.ipart().free().to_string() << '\n';
      out << "torsion: " << x.ipart().torsion().to_string() << '\n';
      out << "twist: " << to_string(x.twist()) << '\n';
      if (o.ring == "cw") {
        out << "chow: " << x.chow().to_string() << '\n';
        if (top) out << "degree: " << degree_text(cwdegree(x)) << '\n';
      }
    }
  } else {
    throw ParseError("unknown ring '" + o.ring + "'");
  }
  return 0;
}

int cmd_sq2(const Options& o, std::ostream& out) {
  const Frame f = Frame::parse(o.frame);
  const Twist tw = parse_twist(o.twist);
  Ch2Class x(f);
  for (const auto& fa : parse_factors(o, f)) x.toggle(fa.partition);
  const Ch2Class y = o.method == "wu" ? sq2_wu(x, tw) : sq2(x, tw);
  if (o.json) {
    emit_json(out, {{"frame", f.to_string()}, {"twist", to_string(tw)}, {"input", ch2_json(x)}, {"result", ch2_json(y)}});
  } else {
    out << y.to_string() << '\n';
    draw(out, o, keys_descending(y.terms()));
  }
  return 0;
}

int cmd_lift(const Options& o, std::ostream& out, std::ostream& err) {
  const Frame f = Frame::parse(o.frame);
  const Twist tw = parse_twist(o.twist);
  if (o.factors.size() != 1) throw ParseError("lift takes exactly one partition");
  const Factor fa = parse_factor(o.factors.front(), f);
  try {
    const CWClass x = lift_schubert(fa.partition, f, tw);
    const bool even = !x.ipart().free().is_zero();
    if (o.json) {
      json j = iclass_json(x.ipart());
      j["frame"] = f.to_string();
      j["partition"] = parts_json(fa.partition);
      j["kind"] = even ? "even" : "torsion";
      emit_json(out, j);
    } else {
      out << "kind: " << (even ? "even" : "torsion") << '\n';
      out << "free: " << x.ipart().free().to_string() << '\n';
      out << "torsion: " << x.ipart().torsion().to_string() << '\n';
      draw(out, o, {fa.partition});
    }
    return 0;
  } catch (const NotLiftableError& e) {
    if (o.json) {
      emit_json(out, {{"error", "not liftable"},
                      {"frame", f.to_string()},
                      {"partition", parts_json(fa.partition)},
                      {"twist", to_string(tw)},
                      {"obstruction", ch2_json(e.obstruction())}});
    }
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_degree(const Options& o, std::ostream& out) {
  const Frame f = Frame::parse(o.frame);
  std::vector<std::pair<Partition, Twist>> factors;
  json fj = json::array();
  for (const auto& fa : parse_factors(o, f)) {
    factors.emplace_back(fa.partition, fa.twist);
    fj.push_back({{"partition", parts_json(fa.partition)}, {"twist", to_string(fa.twist)}});
  }
  const Degree d = schubert_problem(factors, f);
  const auto* gw = std::get_if<GWForm>(&d);
  const Int rank = gw ? gw->rank() : std::get<Int>(d);
  if (o.json) {
    json j = {{"frame", f.to_string()}, {"factors", fj}, {"degree", degree_json(d)}, {"rank", std::to_string(rank)}};
    j["signature"] = gw ? json(std::to_string(gw->signature())) : json(nullptr);
    emit_json(out, j);
  } else {
    out << degree_text(d) << '\n';
    out << "rank: " << rank << '\n';
    out << "signature: " << (gw ? std::to_string(gw->signature()) : std::string("n/a")) << '\n';
  }
  return 0;
}

int cmd_even_basis(const Options& o, std::ostream& out) {
  const Frame f = Frame::parse(o.frame);
  const std::vector<Partition> diagrams = even_diagrams(f);
  json arr = json::array();
  for (const auto& p : diagrams) {
    const EvenDecomposition d = decompose_even(p, f);
    if (o.json) {
      arr.push_back({{"partition", parts_json(p)},
                     {"core", parts_json(d.core)},
                     {"extra", to_string(d.extra)},
                     {"twist", to_string(twist_of(d.extra))},
                     {"degree", std::to_string(p.area())}});
    } else {
      out << p.to_string() << "  core=" << d.core.to_string() << " extra=" << to_string(d.extra)
          << " twist=" << to_string(twist_of(d.extra)) << " degree=" << p.area() << '\n';
    }
  }
  if (o.json) {
    emit_json(out, {{"frame", f.to_string()}, {"diagrams", arr}});
  } else {
    draw(out, o, diagrams);
  }
  return 0;
}

int cmd_problem(const Options& o, std::ostream& out) {
  const auto need = [&](std::size_t count) {
    if (o.problem_args.size() != count) {
      throw ParseError("problem " + o.problem + " takes " + std::to_string(count) + " integer argument(s)");
    }
  };
  json j = {{"problem", o.problem}, {"args", o.problem_args}};
  Degree d;
  std::optional<ProblemReport> report;
  if (o.problem == "balanced") {
    need(2);
    d = balanced(o.problem_args[0], o.problem_args[1]);
  } else if (o.problem == "p1power") {
    need(1);
    d = p1_power(o.problem_args[0], o.max_n);
  } else if (o.problem == "plucker") {
    need(1);
    report = plucker(o.problem_args[0]);
    d = report->result;
  } else {
    throw ParseError("unknown problem '" + o.problem + "'");
  }
  const auto* gw = std::get_if<GWForm>(&d);
  const Int rank = gw ? gw->rank() : std::get<Int>(d);
  if (o.json) {
    j["result"] = degree_json(d);
    j["rank"] = std::to_string(rank);
    j["signature"] = gw ? json(std::to_string(gw->signature())) : json(nullptr);
    if (report) {
      j["catalan"] = std::to_string(*report->catalan);
      j["mod2_top_nonzero"] = *report->mod2_top_nonzero;
    }
    emit_json(out, j);
  } else {
    out << degree_text(d) << '\n';
    if (report) {
      out << "catalan: " << *report->catalan << '\n';
      out << "mod2 top class: " << (*report->mod2_top_nonzero ? "nonzero" : "zero") << '\n';
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Oriented Schubert calculus on Grassmannians"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_flag("--draw", o.draw, "Render diagrams as rows of '#'");
  app.add_flag("--checkerboard", o.checkerboard, "Render diagrams with B/W checkerboard fill");

  const auto frame_opt = [&](CLI::App* sub) {
    sub->add_option("--frame,-f", o.frame, "Frame as KxW or Gr(k,n)")->required();
  };

  auto* mult_cmd = app.add_subcommand("mult", "Multiply Schubert classes or their lifts");
  frame_opt(mult_cmd);
  mult_cmd->add_option("--ring,-r", o.ring, "chow | ch2 | w | i | cw")
      ->check(CLI::IsMember({"chow", "ch2", "w", "i", "cw"}));
  mult_cmd->add_option("factors", o.factors, "Partitions, optionally suffixed :o or :det")->required();

  auto* sq2_cmd = app.add_subcommand("sq2", "Twisted Steenrod square of a mod-2 class");
  frame_opt(sq2_cmd);
  sq2_cmd->add_option("--twist,-t", o.twist, "o | det")->check(CLI::IsMember({"o", "det", "0", "1"}));
  sq2_cmd->add_option("--method", o.method, "checkerboard | wu")->check(CLI::IsMember({"checkerboard", "wu"}));
  sq2_cmd->add_option("terms", o.factors, "Partitions summed mod 2")->required();

  auto* lift_cmd = app.add_subcommand("lift", "Canonical lift of a Schubert class, or its obstruction");
  frame_opt(lift_cmd);
  lift_cmd->add_option("--twist,-t", o.twist, "o | det")->check(CLI::IsMember({"o", "det", "0", "1"}));
  lift_cmd->add_option("partition", o.factors, "Partition")->required();

  auto* degree_cmd = app.add_subcommand("degree", "Degree of a product of canonical lifts");
  frame_opt(degree_cmd);
  degree_cmd->add_option("factors", o.factors, "Partitions, optionally suffixed :o or :det")->required();

  auto* basis_cmd = app.add_subcommand("even-basis", "Even diagrams of a frame");
  frame_opt(basis_cmd);

  auto* problem_cmd = app.add_subcommand("problem", "Packaged enumerative problems");
  problem_cmd->add_option("name", o.problem, "balanced | p1power | plucker")
      ->required()
      ->check(CLI::IsMember({"balanced", "p1power", "plucker"}));
  problem_cmd->add_option("args", o.problem_args, "Integer arguments");
  problem_cmd->add_option("--max-n", o.max_n, "Largest n accepted by p1power");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mult_cmd) return cmd_mult(o, out);
    if (*sq2_cmd) return cmd_sq2(o, out);
    if (*lift_cmd) return cmd_lift(o, out, err);
    if (*degree_cmd) return cmd_degree(o, out);
    if (*basis_cmd) return cmd_even_basis(o, out);
    if (*problem_cmd) return cmd_problem(o, out);
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace schubert::cli
