#include "qdp/presets.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qdp/semiclassical.hpp"

#ifndef QDP_SOURCE_DATA_DIR
#define QDP_SOURCE_DATA_DIR "core/data"
#endif

namespace qdp {

namespace {

struct Sections {
  // section name -> lines (comments and blanks stripped)
  std::map<std::string, std::vector<std::string>> lines;
  std::vector<std::string> order;  // first-seen order
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Sections read_sections(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open " + path);
  Sections out;
  std::string line, section;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      if (!out.lines.count(section)) out.order.push_back(section);
      out.lines[section];
      continue;
    }
    if (section.empty())
      throw AlgebraError("content before any section in " + path);
    out.lines[section].push_back(line);
  }
  return out;
}

std::map<std::string, std::string> keyvals(const std::vector<std::string>& ls) {
  std::map<std::string, std::string> out;
  for (const std::string& l : ls) {
    auto eq = l.find('=');
    if (eq == std::string::npos)
      throw AlgebraError("expected key = value, got: " + l);
    out[trim(l.substr(0, eq))] = trim(l.substr(eq + 1));
  }
  return out;
}

std::pair<std::string, std::string> split_arrow(const std::string& l) {
  auto pos = l.find("->");
  if (pos == std::string::npos)
    throw AlgebraError("expected '->' in line: " + l);
  return {trim(l.substr(0, pos)), trim(l.substr(pos + 2))};
}

Monomial parse_plain_word(const Presentation& p, const std::string& text) {
  Monomial w;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    int g = p.generator_index(cur);
    if (g < 0) throw AlgebraError("unknown generator in word: " + cur);
    w.push_back(g);
    cur.clear();
  };
  for (char c : text) {
    if (c == '*' || c == ' ' || c == '\t') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return w;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Registry& Registry::global() {
  static Registry reg;
  return reg;
}

Registry::Registry(std::string data_dir) : dir_(std::move(data_dir)) {
  if (dir_.empty()) {
    if (const char* env = std::getenv("QDP_DATA_DIR"))
      dir_ = env;
    else
      dir_ = QDP_SOURCE_DATA_DIR;
  }
}

std::vector<std::string> Registry::catalog() const {
  return {"Fq_SL2",       "F_SL2_classical", "Uq_sl2",        "Uq_sl3",
          "I_mu_nu",      "C_mu_nu",         "sl2_borel_C",   "sl2_torus_C",
          "sl3_gC_H",     "sl2_bialgebra",   "sl3_bialgebra", "sl2_dual_bialgebra",
          "sl2_pairing"};
}

const Presentation* Registry::load_presentation_file(const std::string& path) {
  Sections sec = read_sections(path);
  auto head = keyvals(sec.lines.at("presentation"));
  auto p = std::make_unique<Presentation>();
  p->name = head.at("name");
  for (const std::string& l : sec.lines.at("generators")) {
    std::vector<std::string> toks = split_ws(l);
    int weight = toks.size() > 1 ? std::stoi(toks[1]) : 1;
    p->add_generator(toks[0], weight);
  }
  if (sec.lines.count("order")) {
    std::vector<std::string> names;
    for (const std::string& l : sec.lines.at("order"))
      for (const std::string& t : split_ws(l)) names.push_back(t);
    p->set_order(names);
  }
  if (sec.lines.count("params"))
    for (const auto& [k, v] : keyvals(sec.lines.at("params")))
      p->set_param(k, parse_scalar(v));
  if (sec.lines.count("relations"))
    for (const std::string& l : sec.lines.at("relations")) {
      auto [lhs, rhs] = split_arrow(l);
      Monomial w = parse_plain_word(*p, lhs);
      Element e = parse_element(rhs, p.get());
      std::vector<std::pair<Monomial, Scalar>> terms(e.terms().begin(),
                                                     e.terms().end());
      p->add_rule(w, std::move(terms));
    }
  if (sec.lines.count("counit"))
    for (const std::string& l : sec.lines.at("counit")) {
      auto [g, rhs] = split_arrow(l);
      int gi = p->generator_index(trim(g));
      if (gi < 0) throw AlgebraError("unknown generator: " + g);
      p->set_counit(gi, parse_scalar(rhs, &p->params()));
    }
  if (sec.lines.count("coproduct"))
    for (const std::string& l : sec.lines.at("coproduct")) {
      auto [g, rhs] = split_arrow(l);
      int gi = p->generator_index(trim(g));
      if (gi < 0) throw AlgebraError("unknown generator: " + g);
      Tensor t = parse_tensor(rhs, p.get());
      if (t.arity() != 2) throw AlgebraError("coproduct entries need arity 2");
      std::vector<RawTensorTerm> terms;
      for (const auto& [slots, c] : t.terms())
        terms.push_back(RawTensorTerm{slots, c});
      p->set_coproduct(gi, std::move(terms));
    }
  if (sec.lines.count("antipode"))
    for (const std::string& l : sec.lines.at("antipode")) {
      auto [g, rhs] = split_arrow(l);
      int gi = p->generator_index(trim(g));
      if (gi < 0) throw AlgebraError("unknown generator: " + g);
      Element e = parse_element(rhs, p.get());
      std::vector<std::pair<Monomial, Scalar>> terms(e.terms().begin(),
                                                     e.terms().end());
      p->set_antipode(gi, std::move(terms));
    }
  p->finalize();
  const std::string name = p->name;
  std::vector<Element> lattice;
  if (sec.lines.count("lattice"))
    for (const std::string& l : sec.lines.at("lattice"))
      lattice.push_back(parse_element(l, p.get()));
  const Presentation* out = p.get();
  pres_[name] = std::move(p);
  lattices_[name] = std::move(lattice);
  return out;
}

const Presentation* Registry::presentation(const std::string& name) {
  auto it = pres_.find(name);
  if (it != pres_.end()) return it->second.get();
  std::string path = dir_ + "/" + name + ".pres";
  const Presentation* p = load_presentation_file(path);
  if (p->name != name)
    throw AlgebraError("preset file " + path + " declares name " + p->name);
  CheckReport rep = axioms_check(*p, validation_degree);
  if (!rep.pass)
    throw AlgebraError("preset " + name +
                       " fails validation: " + rep.failures.front());
  return p;
}

const std::vector<Element>& Registry::lattice_of(const std::string& name) {
  presentation(name);
  return lattices_.at(name);
}

SubobjectSpec Registry::load_subobject_file(
    const std::string& path, const std::map<std::string, Scalar>& params) {
  Sections sec = read_sections(path);
  auto head = keyvals(sec.lines.at("subobject"));
  SubobjectSpec s;
  s.name = head.at("name");
  s.kind = kind_from_name(head.at("kind"));
  s.side = head.at("side") == "right" ? Side::right : Side::left;
  const Presentation* host = presentation(head.at("host"));
  s.host = host;
  s.host_lattice = lattice_of(head.at("host"));
  std::map<std::string, Scalar> bound;
  if (sec.lines.count("params"))
    for (const auto& [k, v] : keyvals(sec.lines.at("params")))
      bound[k] = parse_scalar(v);
  for (const auto& [k, v] : params) bound[k] = v;
  for (const std::string& l : sec.lines.at("generators")) {
    Element g = parse_element(l, host, &bound);
    if (!g.is_zero()) s.gens.push_back(std::move(g));
  }
  return s;
}

SubobjectSpec Registry::subobject(const std::string& name,
                                  const std::map<std::string, Scalar>& params) {
  return load_subobject_file(dir_ + "/" + name + ".sub", params);
}

SubobjectSpec Registry::classical_subobject(
    const std::string& name, const std::string& classical_host,
    const std::map<std::string, Scalar>& params) {
  SubobjectSpec q = subobject(name, params);
  const Presentation* cl = presentation(classical_host);
  SubobjectSpec s = q;
  s.host = cl;
  s.host_lattice = lattice_of(classical_host);
  s.name = name + "_classical";
  s.gens.clear();
  for (const Element& g : q.gens) {
    Element cg = specialize(g, cl);
    if (!cg.is_zero()) s.gens.push_back(std::move(cg));
  }
  return s;
}

LieBialgebra Registry::load_liebialgebra_file(const std::string& path) {
  Sections sec = read_sections(path);
  auto head = keyvals(sec.lines.at("liebialgebra"));
  LieBialgebra g;
  g.name = head.at("name");
  for (const std::string& t : split_ws(head.at("basis"))) g.basis.push_back(t);
  int n = g.dim();
  g.bracket.assign(static_cast<size_t>(n),
                   std::vector<QVec>(static_cast<size_t>(n),
                                     QVec(static_cast<size_t>(n), Rat(0))));
  g.cobracket.assign(
      static_cast<size_t>(n),
      QMat(static_cast<size_t>(n), QVec(static_cast<size_t>(n), Rat(0))));
  // pseudo-presentation for expression parsing over the basis labels
  Presentation pp;
  pp.name = g.name + "_labels";
  for (const std::string& b : g.basis) pp.add_generator(b);
  pp.finalize();
  auto to_coords = [&](const Element& e) {
    QVec v(static_cast<size_t>(n), Rat(0));
    for (const auto& [m, c] : e.terms()) {
      if (m.size() != 1)
        throw AlgebraError("expected a linear combination of basis labels");
      v[static_cast<size_t>(m[0])] += c.eval_q1();
    }
    return v;
  };
  if (sec.lines.count("brackets"))
    for (const std::string& l : sec.lines.at("brackets")) {
      auto [lhs, rhs] = split_arrow(l);
      std::vector<std::string> toks = split_ws(lhs);
      if (toks.size() != 2)
        throw AlgebraError("bracket lines need two basis labels");
      int i = g.index_of(toks[0]), j = g.index_of(toks[1]);
      if (i < 0 || j < 0) throw AlgebraError("unknown basis label in " + l);
      QVec v = to_coords(parse_element(rhs, &pp));
      g.bracket[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
      for (Rat& c : v) c = -c;
      g.bracket[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
    }
  if (sec.lines.count("cobrackets"))
    for (const std::string& l : sec.lines.at("cobrackets")) {
      auto [lhs, rhs] = split_arrow(l);
      int k = g.index_of(trim(lhs));
      if (k < 0) throw AlgebraError("unknown basis label in " + l);
      Tensor t = parse_tensor(rhs, &pp);
      if (t.is_zero()) continue;
      if (t.arity() != 2)
        throw AlgebraError("cobracket entries need arity 2");
      for (const auto& [slots, c] : t.terms()) {
        if (slots[0].size() != 1 || slots[1].size() != 1)
          throw AlgebraError("cobracket entries must be linear in each slot");
        g.cobracket[static_cast<size_t>(k)][static_cast<size_t>(slots[0][0])]
                   [static_cast<size_t>(slots[1][0])] += c.eval_q1();
      }
    }
  return g;
}

LieBialgebra Registry::liebialgebra(const std::string& name) {
  if (name == "sl2_dual_bialgebra")
    return liebialgebra("sl2_bialgebra").dual();
  LieBialgebra g = load_liebialgebra_file(dir_ + "/" + name + ".lie");
  CheckReport rep = g.validate();
  if (!rep.pass)
    throw AlgebraError("Lie bialgebra " + name +
                       " fails validation: " + rep.failures.front());
  return g;
}

PairingSpec Registry::load_pairing_file(const std::string& path) {
  Sections sec = read_sections(path);
  auto head = keyvals(sec.lines.at("pairing"));
  PairingSpec ps;
  ps.name = head.at("name");
  ps.left = presentation(head.at("left"));
  ps.right = presentation(head.at("right"));
  for (const std::string& l : sec.lines.at("table")) {
    auto [lhs, rhs] = split_arrow(l);
    std::vector<std::string> toks = split_ws(lhs);
    if (toks.size() != 2)
      throw AlgebraError("pairing table lines need two generator names");
    int gl = ps.left->generator_index(toks[0]);
    int gr = ps.right->generator_index(toks[1]);
    if (gl < 0 || gr < 0)
      throw AlgebraError("unknown generator in pairing line: " + l);
    ps.table[{gl, gr}] = parse_scalar(rhs);
  }
  return ps;
}

PairingSpec Registry::pairing(const std::string& name) {
  return load_pairing_file(dir_ + "/" + name + ".pair");
}

Workspace& Registry::workspace(const Presentation* p) {
  auto it = workspaces_.find(p);
  if (it == workspaces_.end())
    it = workspaces_.emplace(p, std::make_unique<Workspace>(p)).first;
  return *it->second;
}

}  // namespace qdp
