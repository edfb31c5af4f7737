#include "opensets/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "opensets/adversary.hpp"
#include "opensets/baire.hpp"
#include "opensets/enumeration.hpp"
#include "opensets/errors.hpp"
#include "opensets/heine_borel.hpp"
#include "opensets/setexpr.hpp"
#include "opensets/urysohn_tietze.hpp"

namespace opensets {

namespace {

using json = nlohmann::ordered_json;

struct Exhausted {
  std::string what;
};

json to_json(const RatInterval& iv) {
  return json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}, {"kind", iv.kind == Bound::Open ? "open" : "closed"}};
}

json to_json(const std::vector<RatInterval>& pieces) {
  json out = json::array();
  for (const auto& p : pieces) out.push_back(to_json(p));
  return out;
}

json to_json(const PLFunction& f) {
  json out = json::array();
  for (const auto& [x, v] : f.breakpoints()) out.push_back(json::array({x.str(), v.str()}));
  return out;
}

json to_json(const std::vector<Tag>& tags) {
  json out = json::array();
  for (const auto& t : tags) out.push_back(json{{"r", t.r.str()}, {"eps", t.eps.str()}});
  return out;
}

std::vector<Rational> grid(std::size_t denominator) {
  std::vector<Rational> out;
  for (std::size_t j = 0; j <= denominator; ++j) out.emplace_back(static_cast<long>(j), static_cast<long>(denominator));
  return out;
}

// "x:v x:v ..." or comma separated.
PLFunction parse_pl(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<PLFunction::Point> points;
  for (std::string token; in >> token;) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("breakpoint '" + token + "' is not x:v");
    points.emplace_back(Rational::parse(token.substr(0, colon)), Rational::parse(token.substr(colon + 1)));
  }
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return PLFunction(std::move(points));
}

// Union of all pieces of a closed set, for the sweep.
bool closed_covered(const FinClosed& c, const std::vector<RatInterval>& pieces) {
  std::vector<RatInterval> open;
  for (const auto& p : pieces) {
    if (p.kind == Bound::Open && !p.is_empty()) open.push_back(p);
  }
  return covers(c, open);
}

bool is_stream_only(const SetExpr& e) {
  return e.kind == SetExpr::Kind::TailCover || e.kind == SetExpr::Kind::RationalComplements ||
         (e.kind == SetExpr::Kind::ComplementClosed && e.children[0].kind == SetExpr::Kind::TailCover);
}

struct Context {
  std::size_t fuel = 100000;
  std::string trace_path;
  std::ofstream trace_file;

  TraceSink sink() {
    if (trace_path.empty()) return {};
    if (!trace_file.is_open()) {
      trace_file.open(trace_path);
      if (!trace_file) throw std::invalid_argument("cannot open trace file " + trace_path);
    }
    return [this](const std::string& line) { trace_file << line << '\n'; };
  }
};

// ------------------------------------------------------------------ commands

struct ConvertArgs {
  std::string from, to, set;
  std::size_t entries = 32;
  unsigned precision = 8;
  std::vector<std::string> at;
};

int cmd_convert(const ConvertArgs& a, Context&, json& doc) {
  const SetExpr expr = parse_set(a.set);
  const FinOpen set = to_open(expr);
  std::vector<Rational> points;
  for (const auto& s : a.at) points.push_back(Rational::parse(s));
  if (points.empty()) points = grid(8);
  doc["inputs"] = {{"from", a.from}, {"to", a.to}, {"set", print_set(expr)}};

  const Rational tolerance = Rational::pow2(-static_cast<long>(a.precision));
  if (a.to == "r3") {
    json values = json::array();
    bool ok = true;
    for (const auto& q : points) {
      const CauchyReal x = CauchyReal::constant(q);
      Rational d;
      if (a.from == "r4") {
        d = r4_to_r3_fin(set).dist(x, a.precision);
        // Cross-check against the staged cover search on the same pieces.
        const Rational staged = r4_to_r3_stage(OpenR4::from_finopen(set), x, a.precision, set.pieces().size());
        ok = ok && (d - staged).abs() <= tolerance;
      } else if (a.from == "r2") {
        d = delta(OpenR2::from_finopen(set), exact_pincherle(), x, a.precision);
        ok = ok && (d - set.distance_to_complement(q)).abs() <= tolerance;
      } else {
        throw std::invalid_argument("convert to r3 needs --from r2 or r4");
      }
      values.push_back(json{{"x", q.str()}, {"dist", d.str()}});
    }
    doc["distances"] = values;
    doc["verified"] = ok;
    return kExitOk;
  }
  if (a.to != "r4") throw std::invalid_argument("--to must be r3 or r4");
  OpenR4 stream;
  if (a.from == "r3") {
    stream = r3_to_r4(r4_to_r3_fin(set));
  } else if (a.from == "r2") {
    stream = psi(OpenR2::from_finopen(set), exact_pincherle());
  } else if (a.from == "r4") {
    stream = OpenR4::from_finopen(set);
  } else {
    throw std::invalid_argument("--from must be r2, r3 or r4");
  }
  std::vector<RatInterval> entries = stream.prefix(a.entries);
  bool ok = true;
  for (const auto& e : entries) {
    if (!e.is_empty()) ok = ok && set.contains_interval(e);
  }
  doc["entries"] = to_json(entries);
  doc["verified"] = ok;
  return kExitOk;
}

struct SubcoverArgs {
  std::string set, cover;
};

int cmd_subcover(const SubcoverArgs& a, Context& ctx, json& doc) {
  const SetExpr set = parse_set(a.set);
  const SetExpr cover = parse_set(a.cover);
  doc["inputs"] = {{"set", print_set(set)}, {"cover", print_set(cover)}, {"fuel", ctx.fuel}};
  const auto cert = hbc_rm(to_closed_rm(set), to_stream(cover), ctx.fuel);
  if (!cert) throw Exhausted{"no covering prefix within fuel"};
  bool ok;
  if (is_stream_only(set)) {
    std::vector<RatInterval> all = cert->used_pieces;
    all.insert(all.end(), cert->complement_pieces.begin(), cert->complement_pieces.end());
    ok = closed_covered(FinClosed::unit(), all);
  } else {
    ok = closed_covered(to_closed(set), cert->used_pieces);
  }
  doc["n0"] = cert->n0;
  doc["used_pieces"] = to_json(cert->used_pieces);
  doc["complement_pieces"] = to_json(cert->complement_pieces);
  doc["verified"] = ok;
  return kExitOk;
}

struct WhbcArgs {
  std::string set, cover, epsilon;
};

int cmd_whbc(const WhbcArgs& a, Context& ctx, json& doc) {
  const SetExpr set = parse_set(a.set);
  const SetExpr cover = parse_set(a.cover);
  const Rational eps = Rational::parse(a.epsilon);
  if (eps.sign() <= 0) throw std::invalid_argument("--epsilon must be positive");
  doc["inputs"] = {{"set", print_set(set)}, {"cover", print_set(cover)}, {"epsilon", eps.str()}, {"fuel", ctx.fuel}};
  const ClosedRM closed = to_closed_rm(set);
  const OpenR4 stream = to_stream(cover);
  const auto result = whbc(closed, stream, eps, ctx.fuel);
  if (!result) throw Exhausted{"no patched subcover within fuel"};
  std::vector<RatInterval> pieces = stream.prefix(result->n0 + 1);
  pieces.insert(pieces.end(), result->patches.begin(), result->patches.end());
  bool ok = total_length(result->patches) < eps;
  if (is_stream_only(set)) {
    const auto comp = closed.complement.prefix(result->stage + 1);
    pieces.insert(pieces.end(), comp.begin(), comp.end());
    ok = ok && closed_covered(FinClosed::unit(), pieces);
  } else {
    ok = ok && closed_covered(to_closed(set), pieces);
  }
  doc["n0"] = result->n0;
  doc["patches"] = to_json(result->patches);
  doc["patch_length"] = total_length(result->patches).str();
  doc["verified"] = ok;
  return kExitOk;
}

struct BaireArgs {
  std::string sets = "(rational-complements)";
  unsigned precision = 10;
  std::optional<std::size_t> audit_depth;
};

int cmd_baire(const BaireArgs& a, Context& ctx, json& doc) {
  const SetExpr expr = parse_set(a.sets);
  const R2Sequence sets = to_r2_sequence(expr);
  const std::size_t depth = a.audit_depth.value_or(a.precision + 1);
  doc["inputs"] = {{"sets", print_set(expr)}, {"precision", a.precision}, {"audit_depth", depth}, {"fuel", ctx.fuel}};
  const auto point = baire_point(sets, a.precision, ctx.fuel, depth + 1);
  if (!point) throw Exhausted{"no certified rational in some tag"};

  const TraceSink trace = ctx.sink();
  bool ok = attempt_valid(Attempt{point->nest});
  for (std::size_t m = 0; m < point->nest.size(); ++m) {
    const Tag& t = point->nest[m];
    // Closed tag inside the ball of radius Y_m(r_m), read exactly.
    const Rational y = sets(m).value(CauchyReal::constant(t.r), 0);
    ok = ok && t.eps < y;
    if (trace) {
      trace(std::to_string(m) + '\t' + (m == 0 ? "i" : "ii") + '\t' +
            format_attempt(Attempt{std::vector<Tag>(point->nest.begin(), point->nest.begin() + static_cast<std::ptrdiff_t>(m + 1))}));
    }
  }
  const AuditResult audit = limit_audit(point->nest, sets, depth, kDefaultStageFuel);
  ok = ok && audit.pass;
  doc["x"] = point->x.approx(a.precision).str();
  doc["nest"] = to_json(point->nest);
  doc["audit"] = {{"depth", depth}, {"pass", audit.pass}};
  if (!audit.pass) doc["audit"]["failed"] = audit.failed;
  doc["verified"] = ok;
  return ok ? kExitOk : kExitUnsound;
}

struct GammaArgs {
  std::string sets = "(rational-complements)";
  std::size_t steps = 200;
  std::size_t max_depth = 1000;
  std::string mode = "containment";
};

int cmd_gamma(const GammaArgs& a, Context& ctx, json& doc) {
  const SetExpr expr = parse_set(a.sets);
  const TagMode mode = a.mode == "verbatim" ? TagMode::Verbatim : TagMode::Containment;
  if (a.mode != "verbatim" && a.mode != "containment") throw std::invalid_argument("--mode must be containment or verbatim");
  doc["inputs"] = {{"sets", print_set(expr)}, {"steps", a.steps}, {"max_depth", a.max_depth}, {"mode", a.mode}};
  std::map<std::string, std::size_t> cases;
  const TraceSink user = ctx.sink();
  const TraceSink trace = [&](const std::string& line) {
    const auto first = line.find('\t');
    const auto second = line.find('\t', first + 1);
    ++cases[line.substr(first + 1, second - first - 1)];
    if (user) user(line);
  };
  const MachineState state = run_machine(to_r2_sequence(expr), a.max_depth, a.steps, std::min<std::size_t>(ctx.fuel, 1u << 20), mode, trace);
  bool ok = true;
  for (const auto& att : state.attempts) ok = ok && attempt_valid(att);
  json counts = json::object();
  for (const auto& [name, n] : cases) counts[name] = n;
  doc["status"] = state.status == MachineStatus::Running ? "running" : state.status == MachineStatus::Fixed ? "fixed" : "stuck";
  if (state.status == MachineStatus::Stuck) doc["reason"] = state.reason;
  doc["cases"] = counts;
  doc["attempts"] = state.attempts.size();
  if (!state.attempts.empty()) doc["maximal"] = to_json(maximal_attempt(state).tags);
  doc["verified"] = ok;
  return state.status == MachineStatus::Stuck ? kExitExhausted : kExitOk;
}

struct UrysohnArgs {
  std::string c0, c1;
};

int cmd_urysohn(const UrysohnArgs& a, Context&, json& doc) {
  const SetExpr e0 = parse_set(a.c0), e1 = parse_set(a.c1);
  const FinClosed c0 = to_closed(e0), c1 = to_closed(e1);
  doc["inputs"] = {{"c0", print_set(e0)}, {"c1", print_set(e1)}};
  const PLFunction g = urysohn(c0, c1);
  bool ok = g.min_value() >= Rational(0) && g.max_value() <= Rational(1);
  const Rational labels[2] = {Rational(0), Rational(1)};
  const FinClosed* sides[2] = {&c0, &c1};
  for (int i = 0; i < 2; ++i) {
    for (const auto& piece : sides[i]->pieces()) ok = ok && g(piece.lo) == labels[i] && g(piece.hi) == labels[i];
    for (const auto& q : grid(1000)) {
      if (sides[i]->contains(q)) ok = ok && g(q) == labels[i];
    }
  }
  doc["breakpoints"] = to_json(g);
  doc["verified"] = ok;
  return kExitOk;
}

struct TietzeArgs {
  std::string domain, function;
};

int cmd_tietze(const TietzeArgs& a, Context&, json& doc) {
  const SetExpr e = parse_set(a.domain);
  const FinClosed d = to_closed(e);
  const PLFunction f = parse_pl(a.function);
  doc["inputs"] = {{"domain", print_set(e)}, {"function", to_json(f)}};
  const PLFunction g = tietze_extend(d, f);
  bool ok = true;
  Rational f_sup(0), g_sup(0);
  for (const auto& [x, v] : f.breakpoints()) {
    if (!d.contains(x)) continue;
    ok = ok && g(x) == v;
    f_sup = max(f_sup, v.abs());
  }
  for (const auto& [x, v] : g.breakpoints()) g_sup = max(g_sup, v.abs());
  ok = ok && f_sup == g_sup;
  doc["breakpoints"] = to_json(g);
  doc["sup"] = g_sup.str();
  doc["verified"] = ok;
  return kExitOk;
}

struct ComponentsArgs {
  std::string set;
  std::size_t entries = 64;
};

int cmd_components(const ComponentsArgs& a, Context&, json& doc) {
  const SetExpr e = parse_set(a.set);
  doc["inputs"] = {{"set", print_set(e)}, {"entries", a.entries}};
  const OpenR4 stream = to_stream(e);
  const auto parts = components_prefix(stream, a.entries);
  bool ok = true;
  for (std::size_t i = 1; i < parts.size(); ++i) ok = ok && parts[i - 1].hi <= parts[i].lo;
  std::vector<RatInterval> drawn;
  for (auto& p : stream.prefix(a.entries)) {
    if (!p.is_empty()) drawn.push_back(std::move(p));
  }
  ok = ok && FinOpen(parts) == FinOpen(drawn);
  doc["components"] = to_json(parts);
  doc["verified"] = ok;
  return kExitOk;
}

struct DistanceArgs {
  std::string set, at;
  unsigned precision = 16;
};

int cmd_distance(const DistanceArgs& a, Context&, json& doc) {
  const SetExpr e = parse_set(a.set);
  const FinClosed c = to_closed(e);
  const Rational x = Rational::parse(a.at);
  doc["inputs"] = {{"set", print_set(e)}, {"at", x.str()}, {"precision", a.precision}};
  const Rational d = distance_closed(c, CauchyReal::constant(x), a.precision);
  // Brute force over pieces: 0 inside, else the nearest endpoint.
  std::optional<Rational> best;
  for (const auto& p : c.pieces()) {
    const Rational gap = p.lo <= x && x <= p.hi ? Rational(0) : min((x - p.lo).abs(), (x - p.hi).abs());
    if (!best || gap < *best) best = gap;
  }
  doc["distance"] = d.str();
  doc["verified"] = best && (d - *best).abs() <= Rational::pow2(-static_cast<long>(a.precision));
  return kExitOk;
}

struct AdversaryArgs {
  std::string which;
  std::string beta = "naive-grid";
  std::size_t queries = 10000;
  std::size_t k = 1000000;
};

json outcome_json(const AdversaryOutcome& o) {
  json out;
  out["first_answer"] = o.first_answer ? json(*o.first_answer) : json(nullptr);
  out["second_answer"] = o.second_answer ? json(*o.second_answer) : json(nullptr);
  out["probes"] = o.probes;
  out["replay_faithful"] = o.replay_faithful;
  if (o.witness) {
    out["result"] = "refuted";
    out["witness"] = {{"x", o.witness->point.str()}, {"k", o.witness->k}};
  } else {
    out["result"] = "survived";
  }
  return out;
}

int cmd_adversary(const AdversaryArgs& a, Context& ctx, json& doc) {
  doc["inputs"] = {{"adversary", a.which}, {"beta", a.beta}};
  if (a.which == "lemma73") {
    doc["inputs"]["queries"] = a.queries;
    AdversaryFull adversary;
    const FinOpen probed = r2_probe_r4(adversary.oracle(), a.queries);
    const Rational probe_measure = measure(probed.pieces());
    const Rational assigned = measure(adversary.assigned_balls());
    const bool below = probe_measure <= Rational(1, 2);
    doc["represented_set"] = "(full)";
    doc["distinct_queries"] = adversary.log().size();
    doc["probe_measure_at_most_half"] = below;
    doc["probe_measure_approx"] = probe_measure.to_double();
    doc["assigned_measure_at_most_half"] = assigned <= Rational(1, 2);
    doc["result"] = below ? "refuted" : "survived";
    doc["verified"] = below && assigned <= Rational(1, 2);
    return below ? kExitRefuted : kExitOk;
  }
  AdversaryOutcome outcome;
  if (a.which == "hbc") {
    HbcRealiser beta;
    if (a.beta == "naive-grid") {
      beta = naive_grid_hbc();
    } else if (a.beta == "constant") {
      beta = constant_hbc(a.k);
      doc["inputs"]["k"] = a.k;
    } else if (a.beta == "refuse") {
      beta = refusing_hbc();
    } else {
      throw std::invalid_argument("hbc betas: naive-grid, constant, refuse");
    }
    outcome = adversary_hbc(beta);
  } else if (a.which == "cover") {
    R2CoverRealiser beta;
    if (a.beta == "naive-grid") {
      beta = naive_grid_r2();
    } else if (a.beta == "psi") {
      beta = psi_pipeline_r2(ctx.fuel);
    } else if (a.beta == "refuse") {
      beta = refusing_r2();
    } else {
      throw std::invalid_argument("cover betas: naive-grid, psi, refuse");
    }
    outcome = adversary_r2_cover(beta);
  } else {
    throw std::invalid_argument("adversary must be lemma73, hbc or cover");
  }
  const json summary = outcome_json(outcome);
  for (const auto& [key, value] : summary.items()) doc[key] = value;
  doc["verified"] = outcome.replay_faithful && (!outcome.witness || outcome.witness->verified);
  return outcome.refuted() ? kExitRefuted : kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact open sets, covers and Baire points over [0,1]", "opensets"};
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--fuel", ctx.fuel, "search budget")->capture_default_str();
  app.add_option("--trace", ctx.trace_path, "write step<TAB>case<TAB>attempt lines here");

  ConvertArgs convert;
  auto* c = app.add_subcommand("convert", "convert between representations");
  c->add_option("--from", convert.from)->required()->check(CLI::IsMember({"r2", "r3", "r4"}));
  c->add_option("--to", convert.to)->required()->check(CLI::IsMember({"r3", "r4"}));
  c->add_option("--set", convert.set)->required();
  c->add_option("--entries", convert.entries)->capture_default_str();
  c->add_option("--precision", convert.precision)->capture_default_str();
  c->add_option("--at", convert.at);

  SubcoverArgs subcover;
  auto* s = app.add_subcommand("subcover", "finite subcover of a countable cover");
  s->add_option("--set", subcover.set)->required();
  s->add_option("--cover", subcover.cover)->required();

  WhbcArgs wh;
  auto* w = app.add_subcommand("whbc", "finite subcover up to patches of small total length");
  w->add_option("--set", wh.set)->required();
  w->add_option("--cover", wh.cover)->required();
  w->add_option("--epsilon", wh.epsilon)->required();

  BaireArgs baire;
  auto* b = app.add_subcommand("baire", "a point in the intersection of dense open sets");
  b->add_option("--sets", baire.sets)->capture_default_str();
  b->add_option("--precision", baire.precision)->capture_default_str();
  b->add_option("--audit-depth", baire.audit_depth);

  GammaArgs gamma;
  auto* g = app.add_subcommand("gamma", "run the attempt machine");
  g->add_option("--sets", gamma.sets)->capture_default_str();
  g->add_option("--steps", gamma.steps)->capture_default_str();
  g->add_option("--max-depth", gamma.max_depth)->capture_default_str();
  g->add_option("--mode", gamma.mode)->capture_default_str();

  UrysohnArgs ury;
  auto* u = app.add_subcommand("urysohn", "separating function for disjoint closed sets");
  u->add_option("--c0", ury.c0)->required();
  u->add_option("--c1", ury.c1)->required();

  TietzeArgs tz;
  auto* t = app.add_subcommand("tietze", "extend a piecewise linear function from a closed set");
  t->add_option("--domain", tz.domain)->required();
  t->add_option("--function", tz.function, "breakpoints x:v ...")->required();

  ComponentsArgs comps;
  auto* co = app.add_subcommand("components", "maximal intervals of an open set");
  co->add_option("--set", comps.set)->required();
  co->add_option("--entries", comps.entries)->capture_default_str();

  DistanceArgs dist;
  auto* d = app.add_subcommand("distance", "distance to a closed set");
  d->add_option("--set", dist.set)->required();
  d->add_option("--at", dist.at)->required();
  d->add_option("--precision", dist.precision)->capture_default_str();

  AdversaryArgs adv;
  auto* a = app.add_subcommand("adversary", "refute naive realisers");
  a->add_option("which", adv.which, "lemma73 | hbc | cover")->required()->check(CLI::IsMember({"lemma73", "hbc", "cover"}));
  a->add_option("--beta", adv.beta)->capture_default_str();
  a->add_option("--queries", adv.queries)->capture_default_str();
  a->add_option("--k", adv.k)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  json doc;
  doc["command"] = app.get_subcommands().front()->get_name();
  int code = kExitOk;
  try {
    if (c->parsed()) code = cmd_convert(convert, ctx, doc);
    else if (s->parsed()) code = cmd_subcover(subcover, ctx, doc);
    else if (w->parsed()) code = cmd_whbc(wh, ctx, doc);
    else if (b->parsed()) code = cmd_baire(baire, ctx, doc);
    else if (g->parsed()) code = cmd_gamma(gamma, ctx, doc);
    else if (u->parsed()) code = cmd_urysohn(ury, ctx, doc);
    else if (t->parsed()) code = cmd_tietze(tz, ctx, doc);
    else if (co->parsed()) code = cmd_components(comps, ctx, doc);
    else if (d->parsed()) code = cmd_distance(dist, ctx, doc);
    else if (a->parsed()) code = cmd_adversary(adv, ctx, doc);
  } catch (const Exhausted& e) {
    doc["status"] = "exhausted";
    doc["reason"] = e.what;
    doc["verified"] = false;
    code = kExitExhausted;
  } catch (const SearchExhausted& e) {
    doc["status"] = "exhausted";
    doc["reason"] = e.what();
    doc["verified"] = false;
    code = kExitExhausted;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotDisjoint& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitUnsound;
  } catch (const EmptySet& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitUnsound;
  } catch (const OracleUnsound& e) {
    err << "oracle unsound: " << e.what() << '\n';
    return kExitUnsound;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitUnsound;
  }
  out << doc.dump(2) << '\n';
  return code;
}

}  // namespace opensets
