// Batch front end: load presentations and subobjects, run any operation,
// emit text or JSON reports. Exit codes: 0 all checks pass, 1 a check
// failed, 2 usage or input error.

#include <CLI11.hpp>
#include <iostream>

#include "qdp/classify.hpp"
#include "qdp/presets.hpp"
#include "qdp/report.hpp"
#include "qdp/semiclassical.hpp"
#include "qdp/version.hpp"

using namespace qdp;

namespace {

std::string strip_builtin(const std::string& s) {
  return s.rfind("builtin:", 0) == 0 ? s.substr(8) : s;
}

bool looks_like_path(const std::string& s) {
  return s.find('/') != std::string::npos ||
         s.find(".pres") != std::string::npos ||
         s.find(".sub") != std::string::npos ||
         s.find(".lie") != std::string::npos ||
         s.find(".pair") != std::string::npos;
}

std::map<std::string, Scalar> parse_params(const std::string& text) {
  std::map<std::string, Scalar> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw AlgebraError("bad --params entry: " + item);
    std::string key = item.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    out[key] = parse_scalar(item.substr(eq + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

SubobjectSpec resolve_subobject(const std::string& name,
                                const std::string& params) {
  Registry& reg = Registry::global();
  std::map<std::string, Scalar> pp =
      params.empty() ? std::map<std::string, Scalar>{} : parse_params(params);
  if (looks_like_path(name)) return reg.load_subobject_file(name, pp);
  return reg.subobject(strip_builtin(name), pp);
}

int emit(const Report& rep, bool json) {
  std::cout << (json ? rep.to_json() + "\n" : rep.to_text());
  return rep.all_pass() ? 0 : 1;
}

std::string verdict_str(const Verdict& v) {
  switch (v.status) {
    case Verdict::Status::InUpTo:
      return "InUpTo(" + std::to_string(v.bound) + ")";
    case Verdict::Status::NotIn:
      return "NotIn(witness n = " + std::to_string(v.witness_n) +
             ", coefficient " + v.witness_coeff.str() + ")";
    default:
      return "Unknown";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for quantum subgroup and homogeneous-space "
               "dualities"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON reports");

  // validate ----------------------------------------------------------------
  std::string v_target;
  int v_bound = 3;
  auto* sc_validate = app.add_subcommand("validate",
                                         "validate a presentation, subobject, "
                                         "Lie bialgebra or pairing");
  sc_validate->add_option("target", v_target)->required();
  sc_validate->add_option("--bound", v_bound);

  // delta -------------------------------------------------------------------
  std::string d_host, d_expr, d_subset;
  int d_n = 2;
  auto* sc_delta = app.add_subcommand("delta", "iterated deviation operators");
  sc_delta->add_option("--host", d_host)->required();
  sc_delta->add_option("--n", d_n);
  sc_delta->add_option("--expr", d_expr)->required();
  sc_delta->add_option("--subset", d_subset,
                       "comma-separated positions for the subset operator");

  // member ------------------------------------------------------------------
  std::string m_in, m_host, m_sub, m_expr, m_params;
  int m_bound = 3, m_degree = 3;
  auto* sc_member = app.add_subcommand("member", "membership verdicts");
  sc_member->add_option("--in", m_in)->required()
      ->check(CLI::IsMember({"vee", "prime", "bang", "lsh"}));
  sc_member->add_option("--host", m_host);
  sc_member->add_option("--sub", m_sub);
  sc_member->add_option("--params", m_params);
  sc_member->add_option("--expr", m_expr)->required();
  sc_member->add_option("--bound", m_bound);
  sc_member->add_option("--degree", m_degree);

  // map ---------------------------------------------------------------------
  std::string map_kind, map_sub, map_params;
  int map_bound = 3;
  auto* sc_map = app.add_subcommand("map", "the four duality maps and the "
                                           "subgroup/space pair");
  sc_map->add_option("kind", map_kind)->required()
      ->check(CLI::IsMember({"vee", "down", "psi", "phi"}));
  sc_map->add_option("--sub", map_sub)->required();
  sc_map->add_option("--params", map_params);
  sc_map->add_option("--bound", map_bound);

  // classify ------------------------------------------------------------
  std::string cl_sub, cl_params, cl_target, cl_target_host;
  int cl_bound = 3;
  auto* sc_classify = app.add_subcommand("classify",
                                         "weak/proper/strict verdicts");
  sc_classify->add_option("--sub", cl_sub)->required();
  sc_classify->add_option("--params", cl_params);
  sc_classify->add_option("--target", cl_target,
                          "classical target subobject (builtin or file)");
  sc_classify->add_option("--target-host", cl_target_host,
                          "classical host for the specialized comparison");
  sc_classify->add_option("--bound", cl_bound);

  // semiclassical -------------------------------------------------------
  std::string s_mode, s_host, s_classical, s_f, s_g;
  int s_bound = 3;
  auto* sc_semi = app.add_subcommand("semiclassical",
                                     "brackets, cobrackets and the blow-up "
                                     "bialgebra");
  sc_semi->add_option("mode", s_mode)->required()
      ->check(CLI::IsMember({"bracket", "cobracket", "liebialg"}));
  sc_semi->add_option("--host", s_host)->required();
  sc_semi->add_option("--classical", s_classical);
  sc_semi->add_option("--f", s_f);
  sc_semi->add_option("--g", s_g);
  sc_semi->add_option("--bound", s_bound);

  // lie -----------------------------------------------------------------
  std::string l_mode, l_builtin, l_sub;
  auto* sc_lie = app.add_subcommand("lie", "Lie bialgebra layer");
  sc_lie->add_option("mode", l_mode)->required()
      ->check(CLI::IsMember({"ortho", "closure", "coiso", "interior"}));
  sc_lie->add_option("--builtin", l_builtin)->required();
  sc_lie->add_option("--sub", l_sub)->required();

  // pair ------------------------------------------------------------------
  std::string p_pairing, p_left, p_right;
  auto* sc_pair = app.add_subcommand("pair", "evaluate a Hopf pairing");
  sc_pair->add_option("--pairing", p_pairing)->required();
  sc_pair->add_option("--left", p_left)->required();
  sc_pair->add_option("--right", p_right)->required();

  // report ------------------------------------------------------------------
  std::string r_suite = "paper-examples";
  auto* sc_report = app.add_subcommand("report", "run a check suite");
  sc_report->add_option("--suite", r_suite)
      ->check(CLI::IsMember({"paper-examples"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Registry& reg = Registry::global();
  try {
    if (*sc_validate) {
      Report rep;
      rep.command = "validate";
      std::string t = v_target;
      if (looks_like_path(t)) {
        if (t.find(".sub") != std::string::npos) {
          SubobjectSpec s = reg.load_subobject_file(t, {});
          rep.add("subobject " + s.name + " loads", true,
                  std::to_string(s.gens.size()) + " generators");
        } else if (t.find(".lie") != std::string::npos) {
          LieBialgebra g = reg.load_liebialgebra_file(t);
          auto r = g.validate();
          rep.add("Lie bialgebra axioms", r.pass,
                  r.pass ? "" : r.failures.front());
        } else if (t.find(".pair") != std::string::npos) {
          PairingSpec ps = reg.load_pairing_file(t);
          rep.add("pairing " + ps.name + " loads", true);
        } else {
          const Presentation* p = reg.load_presentation_file(t);
          auto r = axioms_check(*p, v_bound);
          rep.add("Hopf axioms (deg " + std::to_string(v_bound) + ")", r.pass,
                  r.pass ? "" : r.failures.front());
        }
      } else {
        std::string name = strip_builtin(t);
        if (name.find("bialgebra") != std::string::npos) {
          LieBialgebra g = reg.liebialgebra(name);
          auto r = g.validate();
          rep.add("Lie bialgebra axioms", r.pass);
        } else if (name.find("pairing") != std::string::npos) {
          PairingSpec ps = reg.pairing(name);
          rep.add("pairing " + ps.name + " loads", true);
        } else if (name.find("_C") != std::string::npos ||
                   name.find("_mu_nu") != std::string::npos ||
                   name.find("gC") != std::string::npos) {
          SubobjectSpec s = reg.subobject(name, {});
          rep.add("subobject " + s.name + " loads", true);
        } else {
          const Presentation* p = reg.presentation(name);
          auto r = axioms_check(*p, v_bound);
          rep.add("Hopf axioms (deg " + std::to_string(v_bound) + ")", r.pass,
                  r.pass ? "" : r.failures.front());
        }
      }
      rep.fields["bound"] = std::to_string(v_bound);
      return emit(rep, json);
    }

    if (*sc_delta) {
      const Presentation* p = reg.presentation(strip_builtin(d_host));
      Element x = parse_element(d_expr, p);
      Report rep;
      rep.command = "delta";
      rep.fields["n"] = std::to_string(d_n);
      if (d_subset.empty()) {
        Tensor t = delta_n(x, d_n);
        rep.fields["delta_n"] = t.str();
        rep.add("delta_n computed", true, t.str());
      } else {
        std::set<int> sigma;
        size_t pos = 0;
        while (pos < d_subset.size()) {
          size_t comma = d_subset.find(',', pos);
          sigma.insert(std::stoi(d_subset.substr(pos, comma - pos)));
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
        Tensor t = delta_subset(x, sigma, d_n);
        rep.fields["delta_subset"] = t.str();
        rep.add("delta_subset computed", true, t.str());
      }
      return emit(rep, json);
    }

    if (*sc_member) {
      Report rep;
      rep.command = "member";
      rep.fields["bound"] = std::to_string(m_bound);
      rep.fields["degree"] = std::to_string(m_degree);
      Verdict v;
      if (m_in == "vee" || m_in == "prime") {
        if (m_host.empty())
          throw AlgebraError("--host is required for vee/prime membership");
        const Presentation* p = reg.presentation(strip_builtin(m_host));
        Workspace& ws = reg.workspace(p);
        Element x = parse_element(m_expr, p);
        if (m_in == "vee") {
          v = member_vee(ws, x, m_degree);
        } else {
          v = member_prime(ws, x, m_bound,
                           reg.lattice_of(strip_builtin(m_host)));
        }
      } else {
        SubobjectSpec s = resolve_subobject(m_sub, m_params);
        Workspace& ws = reg.workspace(s.host);
        Element x = parse_element(m_expr, s.host);
        v = m_in == "bang" ? member_bang(ws, x, s, m_bound, m_degree)
                           : member_lsh(ws, x, s, m_bound, m_degree);
      }
      rep.fields["verdict"] = verdict_str(v);
      rep.add("membership " + m_in, v.in(), verdict_str(v));
      std::cout << (json ? rep.to_json() + "\n" : rep.to_text());
      return v.in() ? 0 : 1;
    }

    if (*sc_map) {
      SubobjectSpec s = resolve_subobject(map_sub, map_params);
      Workspace& ws = reg.workspace(s.host);
      Report rep;
      rep.command = "map " + map_kind;
      if (map_kind == "phi") {
        std::vector<Element> basis = phi(ws, s, map_bound);
        for (size_t i = 0; i < basis.size(); ++i)
          rep.fields["basis." + std::to_string(i)] = basis[i].str();
        rep.add("phi basis computed", true,
                std::to_string(basis.size()) + " elements at degree <= " +
                    std::to_string(map_bound));
      } else {
        SubobjectSpec out = map_kind == "vee"   ? map_vee(s)
                            : map_kind == "down" ? map_down(s)
                                                 : psi(ws, s, map_bound);
        rep.fields["kind"] = kind_name(out.kind);
        for (size_t i = 0; i < out.gens.size(); ++i)
          rep.fields["gen." + std::to_string(i)] = out.gens[i].str();
        rep.add("map computed", true,
                std::to_string(out.gens.size()) + " generators");
      }
      return emit(rep, json);
    }

    if (*sc_classify) {
      SubobjectSpec s = resolve_subobject(cl_sub, cl_params);
      Workspace& ws = reg.workspace(s.host);
      Report rep;
      rep.command = "classify";
      rep.fields["bound"] = std::to_string(cl_bound);
      if (!cl_target.empty()) {
        SubobjectSpec target = resolve_subobject(cl_target, cl_params);
        Workspace& cws = reg.workspace(target.host);
        ClassVerdict w = check_weak(ws, cws, s, target, cl_bound);
        rep.add("weak", w.pass, w.witness);
      }
      ClassVerdict p = check_proper(ws, s, cl_bound);
      rep.add("proper", p.pass, p.witness);
      ClassVerdict st = check_strict(ws, s, cl_bound);
      rep.add("strict", st.pass, st.witness);
      return emit(rep, json);
    }

    if (*sc_semi) {
      Report rep;
      rep.command = "semiclassical " + s_mode;
      const Presentation* host = reg.presentation(strip_builtin(s_host));
      Workspace& ws = reg.workspace(host);
      if (s_mode == "bracket") {
        if (s_classical.empty() || s_f.empty() || s_g.empty())
          throw AlgebraError("bracket needs --classical, --f and --g lifts");
        const Presentation* cl = reg.presentation(strip_builtin(s_classical));
        Element f = parse_element(s_f, host);
        Element g = parse_element(s_g, host);
        Element out = poisson_bracket(f, g, cl);
        rep.fields["bracket"] = out.str();
        rep.add("poisson bracket computed", true, out.str());
      } else if (s_mode == "cobracket") {
        if (s_f.empty()) throw AlgebraError("cobracket needs an --f lift");
        SemiclassicalMap sm;
        sm.quantum = host;
        sm.lattice = reg.lattice_of(strip_builtin(s_host));
        sm.budget = s_bound;
        // designated directions: lattice generators with nontrivial class
        SemiclassicalMap probe_sm = sm;
        PrimitiveQuotient probe(ws, probe_sm);
        for (const Element& g : sm.lattice) {
          Element sh = g.shifted();
          if (sh.is_zero()) continue;
          QVec cls = probe.raw_class(ws, sh);
          bool nonzero = false;
          for (const Rat& c : cls) nonzero = nonzero || c != 0;
          if (nonzero) {
            sm.lifts.push_back(sh);
            sm.labels.push_back(g.str());
          }
        }
        PrimitiveQuotient pq(ws, sm);
        Element lift = parse_element(s_f, host);
        QMat m = cobracket_matrix(ws, pq, lift);
        std::string out;
        for (size_t i = 0; i < m.size(); ++i)
          for (size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != 0)
              out += (out.empty() ? "" : " + ") + m[i][j].str() + "*(" +
                     sm.labels[i] + " ^ " + sm.labels[j] + ")";
        if (out.empty()) out = "0";
        rep.fields["cobracket"] = out;
        rep.add("cobracket computed", true, out);
      } else {
        VeeBialgebra vb(ws, s_bound);
        const LieBialgebra& g = vb.bialgebra();
        rep.fields["dimension"] = std::to_string(g.dim());
        std::string basis;
        for (const std::string& b : g.basis) basis += b + " ";
        rep.fields["basis"] = basis;
        std::string dropped;
        for (const std::string& d : vb.dropped()) dropped += d + " ";
        rep.fields["dependent"] = dropped;
        rep.add("blow-up bialgebra valid", g.validate().pass);
      }
      return emit(rep, json);
    }

    if (*sc_lie) {
      LieBialgebra g = reg.liebialgebra(strip_builtin(l_builtin));
      // comma-separated vector expressions over the basis labels
      QMat vecs;
      size_t pos = 0;
      while (pos < l_sub.size()) {
        size_t comma = l_sub.find(',', pos);
        std::string item = l_sub.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        vecs.push_back(g.parse_vector(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      LieSubspace k = span_of(vecs);
      Report rep;
      rep.command = "lie " + l_mode;
      auto describe = [&](const LieSubspace& s) {
        std::string out;
        for (const QVec& r : s.rows) {
          std::string row;
          for (size_t i = 0; i < r.size(); ++i)
            if (r[i] != 0)
              row += (row.empty() ? "" : " + ") +
                     (r[i] == 1 ? "" : r[i].str() + "*") + g.basis[i];
          out += (out.empty() ? "" : ", ") + row;
        }
        return out.empty() ? std::string("0") : out;
      };
      if (l_mode == "ortho") {
        LieSubspace o = orthogonal(k, g.dim());
        rep.fields["result"] = describe(o);
        rep.add("orthogonal computed", true,
                "dim " + std::to_string(o.dim()));
      } else if (l_mode == "closure") {
        LieSubspace c = lie_closure(g, k);
        rep.fields["result"] = describe(c);
        rep.add("closure computed", true, "dim " + std::to_string(c.dim()));
      } else if (l_mode == "coiso") {
        bool co = is_coisotropic(g, k);
        rep.fields["coisotropic"] = co ? "true" : "false";
        rep.add("coisotropy decided", true, co ? "true" : "false");
      } else {
        LieSubspace in = coisotropic_interior(g, k);
        rep.fields["result"] = describe(in);
        rep.add("interior computed", true, describe(in));
      }
      return emit(rep, json);
    }

    if (*sc_pair) {
      PairingSpec ps = reg.pairing(strip_builtin(p_pairing));
      Element u = parse_element(p_left, ps.left);
      Element f = parse_element(p_right, ps.right);
      Scalar val = pair_elements(ps, u, f);
      Report rep;
      rep.command = "pair";
      rep.fields["value"] = val.str();
      rep.add("pairing evaluated", true, val.str());
      return emit(rep, json);
    }

    if (*sc_report) {
      Report rep = run_paper_examples();
      return emit(rep, json);
    }
  } catch (const std::exception& e) {
    if (json) {
      std::cout << "{\"schema\": 1, \"error\": \"" << e.what() << "\"}\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
  return 2;
}
