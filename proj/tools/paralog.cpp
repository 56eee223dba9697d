// Copyright 2026 paralog contributors
//
// Command-line front end. JSON files in, text or JSON out. Exit codes:
// 0 success, 1 domain error (bad file content, validation, evaluation,
// capacity), 2 usage or expression syntax error. Error paths print to
// stderr only. All randomized behavior takes an explicit seed, so identical
// invocations on identical files produce byte-identical output.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "paralog/cdlang.hpp"
#include "paralog/error.hpp"
#include "paralog/fca.hpp"
#include "paralog/io.hpp"
#include "paralog/ppd.hpp"
#include "paralog/probabilize.hpp"
#include "paralog/sorites.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace paralog;

int g_exit = 0;  // fca --verify reports violations through the exit code

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Evidence counts print bare when integral, 6-decimal otherwise.
std::string fmt_count(double v) {
  if (std::fabs(v) < 1e15 && v == std::floor(v)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
    return buf;
  }
  return fmt6(v);
}

void emit(const std::string& text) { std::cout << text; }
void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- eval -------------------------------------------------------------------

struct EvalOpts {
  std::string expr, valuation;
  bool as_json = false;
};

void run_eval(const EvalOpts& o) {
  cdlang::Valuation v = io::load_valuation(o.valuation);
  auto e = cdlang::parse(o.expr);
  PBit r = cdlang::evaluate(*e, v);
  if (o.as_json)
    emit_json(json{{"value", to_string(r)}});
  else
    emit(to_string(r) + "\n");
}

// ---- taut -------------------------------------------------------------------

struct TautOpts {
  std::string expr;
  bool as_json = false;
};

void run_taut(const TautOpts& o) {
  auto e = cdlang::parse(o.expr);
  auto r = cdlang::is_derivable(*e);
  if (o.as_json) {
    json j{{"derivable", r.derivable}};
    if (!r.derivable) {
      json w = json::object();
      for (const auto& [name, val] : r.witness) w[name] = to_string(val);
      j["witness"] = std::move(w);
    }
    emit_json(j);
    return;
  }
  std::string out = r.derivable ? "derivable: true\n" : "derivable: false\n";
  if (!r.derivable) {
    out += "witness:";
    for (const auto& [name, val] : r.witness)
      out += " " + name + "=" + to_string(val);
    out += "\n";
  }
  emit(out);
}

// ---- probabilize ------------------------------------------------------------

struct ProbOpts {
  std::string ensemble, prop;
  bool stv = false;
  double k = 1.0;
  bool as_json = false;
};

void run_probabilize(const ProbOpts& o) {
  auto ens = io::load_ensemble(o.ensemble);
  auto e = cdlang::parse(o.prop);
  auto counts = prob::aggregate(ens, *e);
  auto para = prob::to_para(counts);
  auto pln = prob::to_pln(counts);
  if (o.as_json) {
    json j{{"n_pos", counts.n_pos},
           {"n_neg", counts.n_neg},
           {"n_total", counts.n_total},
           {"w_pos", para.w_pos},
           {"w_neg", para.w_neg}};
    if (o.stv) {
      auto s = prob::to_stv(counts);
      j["strength"] = s.strength;
      j["count"] = s.count;
      j["confidence"] = prob::confidence(s.count, o.k);
    }
    emit_json(j);
    return;
  }
  std::string out = "t_para=(" + fmt6(para.w_pos) + "," + fmt6(para.w_neg) +
                    ") t_pln=(" + std::to_string(pln.first) + "," +
                    std::to_string(pln.second) + ")";
  if (o.stv) {
    auto s = prob::to_stv(counts);
    out += " stv=(" + fmt6(s.strength) + "," + fmt_count(s.count) + ")";
    out += " conf=" + fmt6(prob::confidence(s.count, o.k));
  }
  emit(out + "\n");
}

// ---- subsample ----------------------------------------------------------------

struct SubsampleOpts {
  std::string ensemble;
  double rate = 0.0;
  std::uint64_t seed = 0;
};

void run_subsample(const SubsampleOpts& o) {
  auto ens = io::load_ensemble(o.ensemble);
  emit(io::dump_ensemble(prob::subsample(ens, o.rate, o.seed)));
}

// ---- sorites ------------------------------------------------------------------

struct SoritesOpts {
  std::string model, z;
  bool as_json = false;
};

void run_sorites(const SoritesOpts& o) {
  auto m = io::load_series_model(o.model);
  if (!o.z.empty()) {
    PBit c = sorites::cutoff_value(m, o.z);
    if (o.as_json)
      emit_json(json{{"z", o.z}, {"cutoff", to_string(c)}});
    else
      emit(o.z + ": " + to_string(c) + "\n");
    return;
  }
  std::vector<std::pair<std::string, PBit>> table;
  for (const auto& ind : m.domain)
    table.emplace_back(ind, sorites::cutoff_value(m, ind));
  PBit p = sorites::existential_cutoff(m);
  PBit n = neg(p);
  if (o.as_json) {
    json cut = json::object();
    for (const auto& [ind, c] : table) cut[ind] = to_string(c);
    emit_json(json{{"cutoff", std::move(cut)},
                   {"exists_cutoff", to_string(p)},
                   {"not_exists_cutoff", to_string(n)}});
    return;
  }
  std::string out;
  for (const auto& [ind, c] : table) out += ind + ": " + to_string(c) + "\n";
  out += "exists-cutoff: " + to_string(p) + "\n";
  out += "not-exists-cutoff: " + to_string(n) + "\n";
  emit(out);
}

// ---- boundary -------------------------------------------------------------------

struct BoundaryOpts {
  std::string cases;
  bool as_json = false;
};

void run_boundary(const BoundaryOpts& o) {
  auto c = io::load_classification(o.cases);
  auto t = sorites::fuzzy_boundary(c);
  if (o.as_json)
    emit_json(json{{"z", c.focus}, {"s_pos", t.w_pos}, {"s_neg", t.w_neg}});
  else
    emit("t=(" + fmt6(t.w_pos) + "," + fmt6(t.w_neg) + ")\n");
}

// ---- dep ------------------------------------------------------------------------

struct DepOpts {
  std::string joint;
  bool as_json = false;
};

void run_dep(const DepOpts& o) {
  auto stats = prob::dependency_stats(io::load_joint(o.joint));
  if (o.as_json) {
    emit_json(json{{"mi_pbit", stats.mi_pbit},
                   {"mi_pos", stats.mi_pos},
                   {"mi_neg", stats.mi_neg}});
    return;
  }
  emit("mi_pbit=" + fmt6(stats.mi_pbit) + "\nmi_pos=" + fmt6(stats.mi_pos) +
       "\nmi_neg=" + fmt6(stats.mi_neg) + "\n");
}

// ---- entropy ----------------------------------------------------------------------

struct EntropyOpts {
  std::string ppd;
  bool as_json = false;
};

void run_entropy(const EntropyOpts& o) {
  auto d = io::load_ppd(o.ppd);
  auto [hp, hn] = ppd::entropy_components(d);
  if (o.as_json) {
    emit_json(json{{"h_pos", hp}, {"h_neg", hn}, {"h", hp + hn}});
    return;
  }
  emit("H_pos=" + fmt6(hp) + "\nH_neg=" + fmt6(hn) + "\nH=" + fmt6(hp + hn) +
       "\n");
}

// ---- kl ------------------------------------------------------------------------

struct KlOpts {
  std::string a, b;
  double eps = 1e-9;
  bool as_json = false;
};

void run_kl(const KlOpts& o) {
  double kl =
      ppd::relative_entropy(io::load_ppd(o.a), io::load_ppd(o.b), o.eps);
  if (o.as_json)
    emit_json(json{{"kl", kl}});
  else
    emit("kl=" + fmt6(kl) + "\n");
}

// ---- intension -------------------------------------------------------------------

struct IntensionOpts {
  std::string x, context;
  double eps = 1e-9;
  bool as_json = false;
};

void run_intension(const IntensionOpts& o) {
  double d = ppd::intension_degree(io::load_instances(o.x),
                                   io::load_instances(o.context), o.eps);
  if (o.as_json)
    emit_json(json{{"intension", d}});
  else
    emit("intension=" + fmt6(d) + "\n");
}

// ---- fca ----------------------------------------------------------------------

struct FcaOpts {
  std::string context, dot;
  bool verify = false;
  bool as_json = false;
};

std::string concept_line(const fca::ConceptLattice& l, const fca::Concept& c) {
  const auto& ctx = l.context;
  std::string s = "{";
  if (const auto* sc = std::get_if<fca::SetConcept>(&c)) {
    for (std::size_t i = 0; i < sc->extent.size(); ++i) {
      if (i) s += ",";
      s += ctx.objects[sc->extent[i]];
    }
    s += "}|{";
    for (std::size_t i = 0; i < sc->intent.size(); ++i) {
      if (i) s += ",";
      s += ctx.properties[sc->intent[i]];
    }
  } else {
    const auto& fc = std::get<fca::FuzzyConcept>(c);
    auto grade = [&](int num) {
      return fmt6(static_cast<double>(num) / ctx.grades);
    };
    for (std::size_t i = 0; i < ctx.objects.size(); ++i) {
      if (i) s += ",";
      s += ctx.objects[i] + ":" + grade(fc.extent.pos[i]) + "/" +
           grade(fc.extent.neg[i]);
    }
    s += "}|{";
    for (std::size_t i = 0; i < ctx.properties.size(); ++i) {
      if (i) s += ",";
      s += ctx.properties[i] + ":" + grade(fc.intent.pos[i]) + "/" +
           grade(fc.intent.neg[i]);
    }
  }
  return s + "}";
}

json concept_json(const fca::ConceptLattice& l, const fca::Concept& c) {
  const auto& ctx = l.context;
  if (const auto* sc = std::get_if<fca::SetConcept>(&c)) {
    json extent = json::array(), intent = json::array();
    for (int o : sc->extent) extent.push_back(ctx.objects[o]);
    for (int p : sc->intent) intent.push_back(ctx.properties[p]);
    return json{{"extent", std::move(extent)}, {"intent", std::move(intent)}};
  }
  const auto& fc = std::get<fca::FuzzyConcept>(c);
  auto side = [&](const fca::DegreePair& d,
                  const std::vector<std::string>& names) {
    json pos = json::object(), neg = json::object();
    for (std::size_t i = 0; i < names.size(); ++i) {
      pos[names[i]] = static_cast<double>(d.pos[i]) / ctx.grades;
      neg[names[i]] = static_cast<double>(d.neg[i]) / ctx.grades;
    }
    return json{{"pos", std::move(pos)}, {"neg", std::move(neg)}};
  };
  return json{{"extent", side(fc.extent, ctx.objects)},
              {"intent", side(fc.intent, ctx.properties)}};
}

void run_fca(const FcaOpts& o) {
  auto lat = fca::enumerate_concepts(io::load_context(o.context));
  std::vector<fca::LatticeViolation> violations;
  if (o.verify) violations = fca::verify_lattice(lat);
  if (!o.dot.empty()) {
    std::ofstream out(o.dot, std::ios::binary);
    if (!out) throw IoError(o.dot + ": cannot open for writing");
    out << fca::to_dot(lat);
    if (!out.good()) throw IoError(o.dot + ": write failed");
  }
  if (o.as_json) {
    json cs = json::array();
    for (const auto& c : lat.concepts) cs.push_back(concept_json(lat, c));
    json j{{"concepts", std::move(cs)}};
    if (o.verify) {
      json vs = json::array();
      for (const auto& v : violations)
        vs.push_back(json{{"kind", v.kind}, {"i", v.i}, {"j", v.j}});
      j["violations"] = std::move(vs);
    }
    emit_json(j);
  } else {
    std::string out = "concepts: " + std::to_string(lat.concepts.size()) + "\n";
    for (const auto& c : lat.concepts) out += concept_line(lat, c) + "\n";
    if (o.verify) {
      out += "violations: " + std::to_string(violations.size()) + "\n";
      for (const auto& v : violations)
        out += "violation: " + v.kind + " " + std::to_string(v.i) + " " +
               std::to_string(v.j) + "\n";
    }
    emit(out);
  }
  if (o.verify && !violations.empty()) g_exit = 1;
}

// ---- blend ------------------------------------------------------------------

struct BlendOpts {
  std::string c1, c2, strategy;
  std::uint64_t seed = 0;
  bool as_json = false;
};

void run_blend(const BlendOpts& o) {
  fca::BlendStrategy s;
  if (o.strategy == "select_first")
    s = fca::BlendStrategy::SelectFirst;
  else if (o.strategy == "select_second")
    s = fca::BlendStrategy::SelectSecond;
  else if (o.strategy == "average")
    s = fca::BlendStrategy::Average;
  else if (o.strategy == "sample")
    s = fca::BlendStrategy::Sample;
  else
    throw CLI::ValidationError(
        "--strategy",
        "expected select_first, select_second, average or sample");
  auto r = fca::blend(io::load_property_map(o.c1), io::load_property_map(o.c2),
                      s, o.seed);
  if (o.as_json) {
    json vals = json::array();
    for (const auto& [p, n] : r.values) vals.push_back(json::array({p, n}));
    emit_json(json{{"properties", r.properties}, {"values", std::move(vals)}});
    return;
  }
  std::string out;
  for (std::size_t i = 0; i < r.properties.size(); ++i) {
    auto [p, n] = r.values[i];
    out += r.properties[i] + ": ";
    bool unit = (p == 0.0 || p == 1.0) && (n == 0.0 || n == 1.0);
    if (unit)
      out += to_string(make_pbit(p == 1.0, n == 1.0));
    else
      out += "(" + fmt6(p) + "," + fmt6(n) + ")";
    out += "\n";
  }
  emit(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paraconsistent probabilistic logic toolkit"};
  app.require_subcommand(1);

  EvalOpts eval_o;
  auto* eval_c = app.add_subcommand("eval", "evaluate an expression over a valuation file");
  eval_c->add_option("--expr", eval_o.expr, "expression text")->required();
  eval_c->add_option("--valuation", eval_o.valuation, "valuation JSON file")->required();
  eval_c->add_flag("--json", eval_o.as_json, "JSON output");
  eval_c->callback([&] { run_eval(eval_o); });

  TautOpts taut_o;
  auto* taut_c = app.add_subcommand("taut", "check derivability (designated under every assignment)");
  taut_c->add_option("--expr", taut_o.expr, "expression text")->required();
  taut_c->add_flag("--json", taut_o.as_json, "JSON output");
  taut_c->callback([&] { run_taut(taut_o); });

  ProbOpts prob_o;
  auto* prob_c = app.add_subcommand("probabilize", "aggregate evidence for a proposition over an ensemble");
  prob_c->add_option("--ensemble", prob_o.ensemble, "ensemble JSON file")->required();
  prob_c->add_option("--prop", prob_o.prop, "proposition text")->required();
  prob_c->add_flag("--stv", prob_o.stv, "also print strength/count and confidence");
  prob_c->add_option("--k", prob_o.k, "confidence personality parameter (default 1)");
  prob_c->add_flag("--json", prob_o.as_json, "JSON output");
  prob_c->callback([&] { run_probabilize(prob_o); });

  SubsampleOpts sub_o;
  auto* sub_c = app.add_subcommand("subsample", "drop ensemble rows at a seeded random rate");
  sub_c->add_option("--ensemble", sub_o.ensemble, "ensemble JSON file")->required();
  sub_c->add_option("--rate", sub_o.rate, "drop probability in [0,1]")->required();
  sub_c->add_option("--seed", sub_o.seed, "generator seed")->required();
  sub_c->callback([&] { run_subsample(sub_o); });

  SoritesOpts sor_o;
  auto* sor_c = app.add_subcommand("sorites", "cutoff analysis of a series model");
  sor_c->add_option("--model", sor_o.model, "series model JSON file")->required();
  sor_c->add_option("--z", sor_o.z, "only report this individual");
  sor_c->add_flag("--json", sor_o.as_json, "JSON output");
  sor_c->callback([&] { run_sorites(sor_o); });

  BoundaryOpts bnd_o;
  auto* bnd_c = app.add_subcommand("boundary", "fuzzy boundary value from weighted classifications");
  bnd_c->add_option("--cases", bnd_o.cases, "classification JSON file")->required();
  bnd_c->add_flag("--json", bnd_o.as_json, "JSON output");
  bnd_c->callback([&] { run_boundary(bnd_o); });

  DepOpts dep_o;
  auto* dep_c = app.add_subcommand("dep", "mutual-information stats of a 4x4 joint");
  dep_c->add_option("--joint", dep_o.joint, "joint table JSON file")->required();
  dep_c->add_flag("--json", dep_o.as_json, "JSON output");
  dep_c->callback([&] { run_dep(dep_o); });

  EntropyOpts ent_o;
  auto* ent_c = app.add_subcommand("entropy", "entropy of a paraconsistent distribution");
  ent_c->add_option("--ppd", ent_o.ppd, "distribution JSON file")->required();
  ent_c->add_flag("--json", ent_o.as_json, "JSON output");
  ent_c->callback([&] { run_entropy(ent_o); });

  KlOpts kl_o;
  auto* kl_c = app.add_subcommand("kl", "relative entropy between two distributions");
  kl_c->add_option("--a", kl_o.a, "numerator distribution file")->required();
  kl_c->add_option("--b", kl_o.b, "denominator distribution file")->required();
  kl_c->add_option("--eps", kl_o.eps, "denominator smoothing (default 1e-9)");
  kl_c->add_flag("--json", kl_o.as_json, "JSON output");
  kl_c->callback([&] { run_kl(kl_o); });

  IntensionOpts int_o;
  auto* int_c = app.add_subcommand("intension", "intension degree of evidence against a context");
  int_c->add_option("--x", int_o.x, "instance evidence file")->required();
  int_c->add_option("--context", int_o.context, "context evidence file")->required();
  int_c->add_option("--eps", int_o.eps, "denominator smoothing (default 1e-9)");
  int_c->add_flag("--json", int_o.as_json, "JSON output");
  int_c->callback([&] { run_intension(int_o); });

  FcaOpts fca_o;
  auto* fca_c = app.add_subcommand("fca", "enumerate the concept lattice of a context");
  fca_c->add_option("--context", fca_o.context, "context JSON file")->required();
  fca_c->add_option("--dot", fca_o.dot, "write the Hasse diagram to this DOT file");
  fca_c->add_flag("--verify", fca_o.verify, "check pairwise meets/joins; exit 1 on violations");
  fca_c->add_flag("--json", fca_o.as_json, "JSON output");
  fca_c->callback([&] { run_fca(fca_o); });

  BlendOpts blend_o;
  auto* blend_c = app.add_subcommand("blend", "combine two property maps");
  blend_c->add_option("--c1", blend_o.c1, "first property map file")->required();
  blend_c->add_option("--c2", blend_o.c2, "second property map file")->required();
  blend_c->add_option("--strategy", blend_o.strategy,
                      "select_first | select_second | average | sample")->required();
  blend_c->add_option("--seed", blend_o.seed, "sample seed (default 0)");
  blend_c->add_flag("--json", blend_o.as_json, "JSON output");
  blend_c->callback([&] { run_blend(blend_o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text to stdout, exit 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // diagnostic to stderr
    return 2;
  } catch (const cdlang::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}
