#include "padic/json_io.hpp"

#include "padic/bounds.hpp"

namespace padic {

using nlohmann::json;

json poly_to_json(const SparsePoly& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    terms.push_back(json::array({t.exp, t.coeff.get_str()}));
  }
  return json{{"terms", std::move(terms)}};
}

SparsePoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw syntax_error("expected {\"terms\": [[exp, \"coeff\"], ...]}", 0);
  }
  std::vector<SparsePoly::Term> ts;
  for (const auto& e : j["terms"]) {
    if (!e.is_array() || e.size() != 2) {
      throw syntax_error("each term must be [exponent, coefficient]", 0);
    }
    long exp = e[0].get<long>();
    mpz_class c;
    if (e[1].is_string()) {
      if (mpz_set_str(c.get_mpz_t(), e[1].get<std::string>().c_str(), 10) !=
          0) {
        throw syntax_error("bad coefficient string", 0);
      }
    } else {
      c = e[1].get<long>();
    }
    ts.push_back({exp, std::move(c)});
  }
  return SparsePoly(std::move(ts));
}

json polygon_to_json(const std::vector<PolygonEdge>& edges) {
  json out = json::array();
  for (const auto& e : edges) {
    out.push_back(json{{"from", json::array({e.from_exp, e.from_val})},
                       {"to", json::array({e.to_exp, e.to_val})},
                       {"slope", e.slope.get_str()},
                       {"length", e.length}});
  }
  return out;
}

json tree_to_json(const NodalTree& tree) {
  json nodes = json::array();
  PadicContext mod_p(tree.p, 1);
  for (const auto& n : tree.nodes) {
    json jn;
    jn["depth"] = n.depth;
    jn["prefix"] = n.prefix;
    jn["k_node"] = n.k_node;
    if (n.s_consumed >= 0) jn["s_consumed"] = n.s_consumed;
    jn["s_sum"] = n.s_sum;
    jn["parent"] = n.parent;
    jn["children"] = n.children;
    jn["nondegenerate_digits"] = n.nondeg_digits;
    jn["degenerate_digits"] = n.deg_digits;
    // dense mod-p coefficient list, constant term first
    std::vector<long> coeffs;
    long deg = n.poly.is_zero() ? -1 : n.poly.degree();
    for (long i = 0; i <= deg; ++i) {
      coeffs.push_back(mod_p.reduce(n.poly.coeff(i)).get_si());
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    jn["mod_p_coeffs"] = coeffs;
    jn["terms"] = poly_to_json(n.poly)["terms"];
    nodes.push_back(std::move(jn));
  }
  json out;
  out["p"] = tree.p.get_str();
  out["k"] = tree.k;
  out["max_depth"] = tree.max_depth;
  out["precision_exhausted"] = tree.precision_exhausted;
  out["exhausted_prefixes"] = tree.exhausted_prefixes;
  out["nodes"] = std::move(nodes);
  return out;
}

json root_to_json(const ApproxRoot& r) {
  json out;
  out["numerator"] = r.numerator.get_str();
  out["denominator"] = r.denominator.get_str();
  out["valuation"] = r.valuation;
  out["prefix_digits"] = r.prefix_digits;
  out["unit_value"] = r.unit_value.get_str();
  out["unit_k"] = r.unit_k;
  out["ell"] = r.ell;
  out["cert_j"] = r.cert_j;
  out["degenerate"] = r.degenerate;
  out["multiplicity"] = r.multiplicity;
  return out;
}

json report_to_json(const SolveReport& rep) {
  json out;
  out["root_count"] = rep.root_count;
  out["zero_root_multiplicity"] = rep.zero_root_multiplicity;
  switch (rep.policy) {
    case PolicyKind::ExactResultant:
      out["policy"] = "resultant";
      break;
    case PolicyKind::AdaptiveDoubling:
      out["policy"] = "adaptive";
      break;
    case PolicyKind::YuFormula:
      out["policy"] = "yu";
      break;
  }
  out["final_k"] = rep.final_k;
  out["certified"] = rep.certified;
  if (!rep.message.empty()) out["message"] = rep.message;
  json roots = json::array();
  json deg = json::array();
  for (const auto& r : rep.roots) {
    roots.push_back(root_to_json(r));
    if (r.degenerate) deg.push_back(root_to_json(r));
  }
  out["roots"] = std::move(roots);
  out["degenerate_roots"] = std::move(deg);
  out["polygon"] = polygon_to_json(rep.polygon);
  out["tree"] = json{{"nodes", rep.tree_nodes}, {"max_depth", rep.tree_depth}};
  return out;
}

json bounds_to_json(const SparsePoly& f, const mpz_class& p) {
  json out;
  auto [g, a1] = f.normalize_x_power();
  (void)a1;
  SparsePoly h = g.divide_content();
  if (h.term_count() == 2) {
    mpz_class H = 1;
    for (const auto& t : h.terms()) {
      mpz_class a = abs(t.coeff);
      if (a > H) H = a;
    }
    long d = h.degree();
    out["binomial_separation"] =
        json{{"kind", "p-adic"},
             {"log_bound", binomial_separation_bound(d, H, p)},
             {"d", d},
             {"H", H.get_str()}};
    out["binomial_separation_archimedean"] =
        json{{"kind", "archimedean"},
             {"log_bound", binomial_separation_bound(d, H, 0)}};
  } else if (h.term_count() == 3) {
    TrinomialBound tb = trinomial_separation_bound(h, p);
    out["trinomial_separation"] = json{{"input_size_s", tb.input_size_s},
                                       {"ord_bound", tb.ord_bound},
                                       {"log_bound", tb.log_bound},
                                       {"k_required", tb.k_required}};
  }
  return out;
}

json separation_to_json(const TetranomialInstance& inst,
                        const SeparationResult& sep) {
  json out;
  out["p"] = inst.p.get_str();
  out["h"] = inst.h;
  out["d"] = inst.d;
  out["poly"] = poly_to_json(inst.poly);
  out["expected_gap"] = inst.expected_gap;
  out["measured_gap"] = sep.measured_gap;
  out["digits_to_distinguish"] = sep.digits_to_distinguish;
  out["root1"] = sep.root1.get_str();
  out["root2"] = sep.root2.get_str();
  out["ord_f_root1"] = sep.ord_f_root1;
  out["ord_f_root2"] = sep.ord_f_root2;
  return out;
}

}  // namespace padic
