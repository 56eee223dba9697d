// Copyright 2026 paralog contributors
#include "paralog/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "paralog/error.hpp"

namespace paralog::io {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw IoError(path + ": " + what);
}

json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    fail(path, e.what());
  }
}

const json& need(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

PBit get_pbit(const json& j, const std::string& path) {
  if (j.is_string())
    if (auto b = pbit_from_string(j.get<std::string>())) return *b;
  fail(path, "expected a p-bit value (T, F, B or N), got " + j.dump());
}

double get_number(const json& j, const std::string& path, const char* what) {
  if (!j.is_number()) fail(path, std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<std::string> get_names(const json& j, const std::string& path,
                                   const char* what) {
  if (!j.is_array()) fail(path, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) fail(path, std::string(what) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<double> get_numbers(const json& j, const std::string& path,
                                const char* what) {
  if (!j.is_array()) fail(path, std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& e : j) out.push_back(get_number(e, path, what));
  return out;
}

bool get_flag(const json& j, const char* key, bool dflt,
              const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) return dflt;
  if (!it->is_boolean()) fail(path, std::string(key) + " must be a boolean");
  return it->get<bool>();
}

std::string trimmed(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.pop_back();
  return s;
}

std::pair<std::string, std::string> split_pair_key(const std::string& key,
                                                   const std::string& path) {
  auto comma = key.find(',');
  if (comma == std::string::npos)
    fail(path, "pair key \"" + key + "\" needs the form \"a,b\"");
  std::string l = trimmed(key.substr(0, comma));
  std::string r = trimmed(key.substr(comma + 1));
  if (l.empty() || r.empty())
    fail(path, "pair key \"" + key + "\" needs the form \"a,b\"");
  return {l, r};
}

}  // namespace

cdlang::Valuation load_valuation(const std::string& path) {
  json j = read_json(path);
  if (!j.is_object()) fail(path, "top level must be an object");
  cdlang::Valuation v;
  if (j.contains("domain")) v.domain = get_names(j["domain"], path, "domain");
  if (j.contains("atoms")) {
    const json& a = j["atoms"];
    if (!a.is_object()) fail(path, "atoms must be an object");
    for (auto& [name, val] : a.items()) v.atoms[name] = get_pbit(val, path);
  }
  if (j.contains("preds")) {
    const json& ps = j["preds"];
    if (!ps.is_object()) fail(path, "preds must be an object");
    for (auto& [pname, table] : ps.items()) {
      if (!table.is_object())
        fail(path, "pred " + pname + " must map individuals to values");
      for (auto& [ind, val] : table.items())
        v.preds[{pname, ind}] = get_pbit(val, path);
    }
  }
  if (j.contains("less")) {
    const json& o = j["less"];
    if (!o.is_object()) fail(path, "less must be an object");
    for (auto& [key, val] : o.items())
      v.less[split_pair_key(key, path)] = get_pbit(val, path);
  }
  v.open_world = get_flag(j, "open_world", false, path);
  return v;
}

prob::SituationEnsemble load_ensemble(const std::string& path) {
  json j = read_json(path);
  if (!j.is_object()) fail(path, "top level must be an object");
  prob::SituationEnsemble ens;
  ens.atoms = get_names(need(j, "atoms", path), path, "atoms");
  ens.open_world = get_flag(j, "open_world", false, path);
  const json& rows = need(j, "situations", path);
  if (!rows.is_array()) fail(path, "situations must be an array");
  for (const auto& row : rows) {
    if (!row.is_object()) fail(path, "each situation must be an object");
    std::vector<PBit> vals;
    vals.reserve(ens.atoms.size());
    for (const auto& atom : ens.atoms) {
      auto it = row.find(atom);
      if (it == row.end()) {
        if (!ens.open_world)
          fail(path, "situation is missing atom " + atom +
                         " (set open_world to read it as N)");
        vals.push_back(PBit::N);
      } else {
        vals.push_back(get_pbit(*it, path));
      }
    }
    for (auto& [key, val] : row.items()) {
      (void)val;
      bool known = false;
      for (const auto& atom : ens.atoms)
        if (atom == key) {
          known = true;
          break;
        }
      if (!known) fail(path, "situation uses unknown atom " + key);
    }
    ens.situations.push_back(std::move(vals));
  }
  return ens;
}

std::string dump_ensemble(const prob::SituationEnsemble& ens) {
  json j;
  j["atoms"] = ens.atoms;
  j["open_world"] = ens.open_world;
  json rows = json::array();
  for (const auto& row : ens.situations) {
    json r = json::object();
    for (std::size_t i = 0; i < ens.atoms.size(); ++i)
      r[ens.atoms[i]] = to_string(row[i]);
    rows.push_back(std::move(r));
  }
  j["situations"] = std::move(rows);
  return j.dump(2) + "\n";
}

prob::JointTable load_joint(const std::string& path) {
  json j = read_json(path);
  if (!j.is_object()) fail(path, "top level must be an object");
  std::array<PBit, 4> order = {PBit::N, PBit::T, PBit::F, PBit::B};
  if (j.contains("values")) {
    auto names = get_names(j["values"], path, "values");
    if (names.size() != 4) fail(path, "values must list the four p-bit letters");
    bool seen[4] = {};
    for (int i = 0; i < 4; ++i) {
      auto b = pbit_from_string(names[i]);
      if (!b) fail(path, "values entry " + names[i] + " is not a p-bit letter");
      order[i] = *b;
      seen[static_cast<int>(*b)] = true;
    }
    for (bool s : seen)
      if (!s) fail(path, "values must be a permutation of N, T, F, B");
  }
  const json& m = need(j, "matrix", path);
  if (!m.is_array() || m.size() != 4) fail(path, "matrix must have 4 rows");
  prob::JointTable t;
  for (int r = 0; r < 4; ++r) {
    const json& row = m[r];
    if (!row.is_array() || row.size() != 4)
      fail(path, "matrix rows must have 4 entries");
    for (int c = 0; c < 4; ++c)
      t.p[static_cast<int>(order[r])][static_cast<int>(order[c])] =
          get_number(row[c], path, "matrix entry");
  }
  return t;
}

sorites::SeriesModel load_series_model(const std::string& path) {
  json j = read_json(path);
  if (!j.is_object()) fail(path, "top level must be an object");
  sorites::SeriesModel m;
  m.domain = get_names(need(j, "domain", path), path, "domain");
  const json& psi = need(j, "psi", path);
  if (!psi.is_object()) fail(path, "psi must be an object");
  for (auto& [name, val] : psi.items()) m.psi[name] = get_pbit(val, path);
  if (j.contains("less_true")) {
    const json& pairs = j["less_true"];
    if (!pairs.is_array()) fail(path, "less_true must be an array of pairs");
    for (const auto& e : pairs) {
      auto p = get_names(e, path, "less_true entry");
      if (p.size() != 2) fail(path, "less_true entries must be [lhs, rhs]");
      m.less[{p[0], p[1]}] = PBit::T;
    }
  }
  m.transitive = get_flag(j, "transitive", true, path);
  return m;
}

sorites::SituationClassification load_classification(const std::string& path) {
  json j = read_json(path);
  if (!j.is_object()) fail(path, "top level must be an object");
  sorites::SituationClassification c;
  if (j.contains("z")) {
    if (!j["z"].is_string()) fail(path, "z must be a string");
    c.focus = j["z"].get<std::string>();
  }
  const json& cases = need(j, "cases", path);
  if (!cases.is_array()) fail(path, "cases must be an array");
  for (const auto& e : cases) {
    if (!e.is_object()) fail(path, "each case must be an object");
    const json& lab = need(e, "label", path);
    if (!lab.is_string()) fail(path, "case label must be a string");
    std::string s = lab.get<std::string>();
    sorites::CaseLabel label;
    if (s == "high")
      label = sorites::CaseLabel::High;
    else if (s == "not_high")
      label = sorites::CaseLabel::NotHigh;
    else if (s == "cutoff")
      label = sorites::CaseLabel::Cutoff;
    else
      fail(path, "unknown case label " + s +
                     " (expected high, not_high or cutoff)");
    double w = e.contains("weight")
                   ? get_number(e["weight"], path, "case weight")
                   : 1.0;
    c.cases.push_back({label, w});
  }
  return c;
}

ppd::Ppd load_ppd(const std::string& path) {
  json j = read_json(path);
  if (!j.is_object()) fail(path, "top level must be an object");
  ppd::Ppd d;
  d.outcomes = get_names(need(j, "outcomes", path), path, "outcomes");
  d.pos = get_numbers(need(j, "pos", path), path, "pos");
  d.neg = get_numbers(need(j, "neg", path), path, "neg");
  if (d.pos.size() != d.outcomes.size() || d.neg.size() != d.outcomes.size())
    fail(path, "pos and neg must have one entry per outcome");
  return d;
}

ppd::InstanceEvidence load_instances(const std::string& path) {
  json j = read_json(path);
  if (!j.is_object()) fail(path, "top level must be an object");
  ppd::InstanceEvidence e;
  const json& inst = need(j, "instances", path);
  if (!inst.is_object())
    fail(path, "instances must map names to [pos, neg] weight pairs");
  for (auto& [name, w] : inst.items()) {
    if (!w.is_array() || w.size() != 2)
      fail(path, "instance " + name + " needs a [pos, neg] weight pair");
    e.instances.push_back(name);
    e.w_pos.push_back(get_number(w[0], path, "instance weight"));
    e.w_neg.push_back(get_number(w[1], path, "instance weight"));
  }
  return e;
}

fca::FormalContext load_context(const std::string& path) {
  json j = read_json(path);
  if (!j.is_object()) fail(path, "top level must be an object");
  fca::FormalContext ctx;
  const json& mode = need(j, "mode", path);
  if (!mode.is_string()) fail(path, "mode must be a string");
  std::string ms = mode.get<std::string>();
  if (ms == "crisp")
    ctx.mode = fca::Mode::Crisp;
  else if (ms == "para")
    ctx.mode = fca::Mode::Para;
  else if (ms == "fuzzy")
    ctx.mode = fca::Mode::Fuzzy;
  else
    fail(path, "unknown mode " + ms + " (expected crisp, para or fuzzy)");
  ctx.objects = get_names(need(j, "objects", path), path, "objects");
  ctx.properties = get_names(need(j, "properties", path), path, "properties");

  auto object_id = [&](const std::string& name) {
    for (std::size_t i = 0; i < ctx.objects.size(); ++i)
      if (ctx.objects[i] == name) return static_cast<int>(i);
    fail(path, "incidence names unknown object " + name);
  };
  auto property_id = [&](const std::string& name) {
    for (std::size_t i = 0; i < ctx.properties.size(); ++i)
      if (ctx.properties[i] == name) return static_cast<int>(i);
    fail(path, "incidence names unknown property " + name);
  };

  const std::size_t cells = ctx.objects.size() * ctx.properties.size();
  std::vector<bool> listed(cells, false);
  auto cell_of = [&](const json& entry) {
    if (!entry.is_array() || entry.size() < 2 || !entry[0].is_string() ||
        !entry[1].is_string())
      fail(path, "incidence entries must start with [object, property]");
    int o = object_id(entry[0].get<std::string>());
    int p = property_id(entry[1].get<std::string>());
    std::size_t cell = o * ctx.properties.size() + p;
    if (listed[cell])
      fail(path, "duplicate incidence entry for (" +
                     entry[0].get<std::string>() + ", " +
                     entry[1].get<std::string>() + ")");
    listed[cell] = true;
    return cell;
  };

  const json& inc = need(j, "incidence", path);
  if (!inc.is_array()) fail(path, "incidence must be an array of entries");

  if (ctx.mode == fca::Mode::Fuzzy) {
    if (j.contains("grades")) {
      const json& g = j["grades"];
      if (!g.is_number_integer()) fail(path, "grades must be an integer");
      ctx.grades = g.get<int>();
    }
    if (ctx.grades < 1) fail(path, "grades must be at least 1");
    if (j.contains("residuum")) {
      const json& r = j["residuum"];
      if (!r.is_string()) fail(path, "residuum must be a string");
      std::string rs = r.get<std::string>();
      if (rs == "goedel")
        ctx.residuum = fca::Residuum::Goedel;
      else if (rs == "lukasiewicz")
        ctx.residuum = fca::Residuum::Lukasiewicz;
      else
        fail(path, "unknown residuum " + rs +
                       " (expected goedel or lukasiewicz)");
    }
    ctx.inc_pos.assign(cells, 0);
    ctx.inc_neg.assign(cells, 0);
    auto on_chain = [&](double d) {
      // the file carries reals; they must land on {0, 1/g, ..., 1}
      double scaled = d * ctx.grades;
      int num = static_cast<int>(std::lround(scaled));
      if (num < 0 || num > ctx.grades || std::fabs(scaled - num) > 1e-9)
        fail(path, "degree " + std::to_string(d) + " is not on the chain of " +
                       std::to_string(ctx.grades + 1) + " grades");
      return num;
    };
    for (const auto& entry : inc) {
      std::size_t cell = cell_of(entry);
      if (entry.size() != 4)
        fail(path, "fuzzy incidence entries are [object, property, pos, neg]");
      ctx.inc_pos[cell] = on_chain(get_number(entry[2], path, "degree"));
      ctx.inc_neg[cell] = on_chain(get_number(entry[3], path, "degree"));
    }
  } else {
    ctx.inc.assign(cells,
                   ctx.mode == fca::Mode::Crisp ? PBit::F : PBit::N);
    for (const auto& entry : inc) {
      std::size_t cell = cell_of(entry);
      if (entry.size() != 3)
        fail(path, "incidence entries are [object, property, value]");
      PBit v = get_pbit(entry[2], path);
      if (ctx.mode == fca::Mode::Crisp && v != PBit::T && v != PBit::F)
        fail(path, "crisp incidence entries must be T or F");
      ctx.inc[cell] = v;
    }
  }
  return ctx;
}

fca::PropertyMap load_property_map(const std::string& path) {
  json j = read_json(path);
  if (!j.is_object()) fail(path, "top level must be an object");
  fca::PropertyMap m;
  m.properties = get_names(need(j, "properties", path), path, "properties");
  const json& vals = need(j, "values", path);
  if (!vals.is_array() || vals.size() != m.properties.size())
    fail(path, "values must have one entry per property");
  for (const auto& e : vals) {
    if (e.is_string()) {
      PBit b = get_pbit(e, path);
      m.values.emplace_back(pos_bit(b) ? 1.0 : 0.0, neg_bit(b) ? 1.0 : 0.0);
    } else if (e.is_array() && e.size() == 2) {
      m.values.emplace_back(get_number(e[0], path, "value pair"),
                            get_number(e[1], path, "value pair"));
    } else {
      fail(path, "each value must be a p-bit letter or a [pos, neg] pair");
    }
  }
  return m;
}

heyting::Poset load_poset(const std::string& path) {
  json j = read_json(path);
  if (!j.is_object()) fail(path, "top level must be an object");
  auto elements = get_names(need(j, "elements", path), path, "elements");
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) {
    const json& cs = j["covers"];
    if (!cs.is_array()) fail(path, "covers must be an array of pairs");
    for (const auto& e : cs) {
      auto p = get_names(e, path, "covers entry");
      if (p.size() != 2) fail(path, "covers entries must be [below, above]");
      covers.emplace_back(p[0], p[1]);
    }
  }
  return heyting::Poset(std::move(elements), covers);
}

}  // namespace paralog::io
