#include "homcon/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "homcon/box.hpp"
#include "homcon/families.hpp"
#include "homcon/orbit_complex.hpp"
#include "homcon/parallel.hpp"
#include "homcon/rect.hpp"

namespace homcon {

namespace {

using Json = nlohmann::ordered_json;

Json json_bigint(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

Json json_poly(const QPolynomial& p) {
  Json coeffs = Json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(json_bigint(c));
  return Json{{"string", p.to_string()}, {"coefficients", coeffs}};
}

template <typename T>
std::string brace_list(const std::vector<T>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << "}";
  return os.str();
}

template <typename T>
Json json_list(const std::vector<T>& v) {
  Json out = Json::array();
  for (const T& x : v) out.push_back(x);
  return out;
}

// Collected output of one command: key/value lines for text, a json object,
// csv rows, and any failed cross-checks.
struct Report {
  Json json;
  std::vector<std::pair<std::string, std::string>> lines;
  std::string csv_header;
  std::vector<std::string> csv_rows;
  std::vector<std::string> violations;

  Report(const std::string& command) {
    json["schema"] = "homcon/1";
    json["command"] = command;
  }
  void add(const std::string& key, const std::string& value) { lines.emplace_back(key, value); }
  void violate(const std::string& what) { violations.push_back(what); }

  int emit(const std::string& format, std::ostream& out, std::ostream& err) {
    json["violations"] = json_list(violations);
    if (format == "json") {
      out << json.dump(2) << "\n";
    } else if (format == "csv") {
      out << csv_header << "\n";
      for (const std::string& row : csv_rows) out << row << "\n";
    } else {
      std::size_t width = 0;
      for (const auto& [k, v] : lines) width = std::max(width, k.size());
      for (const auto& [k, v] : lines)
        out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
    }
    for (const std::string& v : violations) err << "cross-check FAILED: " << v << "\n";
    return violations.empty() ? 0 : 4;
  }
};

MorseReport certify_and_record(const SupportedComplex& sc, const Matching& matching,
                               Report& rep) {
  MorseReport mr = certify(sc, matching);
  rep.add("matched pairs", std::to_string(matching.edges.size()));
  rep.add("acyclic", mr.acyclic ? "yes" : "no");
  rep.add("unit coefficients", mr.unit_coefficients ? "yes" : "no");
  rep.add("parity condition", mr.parity_condition ? "yes" : "no");
  rep.add("vanishing condition", mr.vanishing_condition ? "yes" : "no");
  Json cert;
  cert["matched_pairs"] = matching.edges.size();
  cert["acyclic"] = mr.acyclic;
  if (!mr.acyclic) cert["cycle_witness"] = json_list(mr.cycle_witness);
  cert["unit_coefficients"] = mr.unit_coefficients;
  cert["parity_condition"] = mr.parity_condition;
  cert["vanishing_condition"] = mr.vanishing_condition;
  if (mr.concluded_homology) cert["concluded_homology"] = json_list(*mr.concluded_homology);
  rep.json["certification"] = cert;
  if (!mr.acyclic) rep.violate("matching is not acyclic");
  if (!mr.unit_coefficients) rep.violate("matched edge with zero boundary coefficient");
  if (!mr.parity_condition) rep.violate("critical cells span both parities");
  return mr;
}

int cmd_orbits(const std::string& spec, const Limits& limits, const std::string& format,
               std::ostream& out, std::ostream& err) {
  Report rep("orbits");
  PermGroup g = parse_group(spec);
  auto orbits = subset_orbits(g, limits);
  QPolynomial x = orbit_polynomial(orbits, g.n);
  int sc = 0;
  for (const SubsetOrbit& orb : orbits) sc += orb.self_complementary();
  bool su = is_symmetric_unimodal(x);

  rep.json["group"] = format_group(g);
  rep.json["n"] = g.n;
  rep.json["orbit_polynomial"] = json_poly(x);
  rep.json["orbit_count"] = json_bigint(x.at_one());
  rep.json["at_minus_one"] = json_bigint(x.at_minus_one());
  rep.json["self_complementary_orbits"] = sc;
  rep.json["symmetric_unimodal"] = su;

  rep.add("group", format_group(g));
  rep.add("X(G,q)", x.to_string());
  rep.add("X(G,1)", x.at_one().str());
  rep.add("X(G,-1)", x.at_minus_one().str());
  rep.add("self-complementary orbits", std::to_string(sc));
  rep.add("symmetric and unimodal", su ? "yes" : "no");

  rep.csv_header = "exponent,coefficient";
  for (int i = 0; i <= std::max(x.degree(), 0); ++i)
    rep.csv_rows.push_back(std::to_string(i) + "," + x.coeff(i).str());

  if (x.at_minus_one() != sc)
    rep.violate("X(G,-1) differs from the self-complementary orbit count");
  return rep.emit(format, out, err);
}

int cmd_homology(const std::string& spec, const std::string& kind_str, bool check,
                 const Limits& limits, const std::string& format, std::ostream& out,
                 std::ostream& err) {
  Report rep("homology");
  PermGroup g = parse_group(spec);
  ComplexKind kind = complex_kind_from_string(kind_str);
  GradedComplex c = build_orbit_complex(g, kind, limits);
  auto h = homology_ranks(c);
  auto dims = c.dims();
  long long chi = euler_characteristic(c);
  BigInt x_minus = orbit_polynomial(g, limits).at_minus_one();

  rep.json["group"] = format_group(g);
  rep.json["kind"] = to_string(kind);
  rep.json["chain_dims"] = json_list(dims);
  rep.json["homology"] = json_list(h);
  rep.json["euler_characteristic"] = chi;
  rep.json["x_at_minus_one"] = json_bigint(x_minus);

  rep.add("group", format_group(g));
  rep.add("kind", to_string(kind));
  rep.add("chain dims", brace_list(dims));
  rep.add("homology ranks", brace_list(h));
  rep.add("euler characteristic", std::to_string(chi));
  rep.add("X(G,-1)", x_minus.str());

  rep.csv_header = "rank,dim,homology";
  for (std::size_t i = 0; i < h.size(); ++i)
    rep.csv_rows.push_back(std::to_string(i) + "," + std::to_string(dims[i]) + "," +
                           std::to_string(h[i]));

  if (chi != x_minus) rep.violate("Euler characteristic differs from X(G,-1)");

  if (check) {
    std::vector<std::vector<std::size_t>> ranks(4);
    Json kinds;
    for (ComplexKind k : kAllKinds) {
      GradedComplex ck = build_orbit_complex(g, k, limits);
      if (!ck.is_chain_complex()) rep.violate(to_string(k) + ": d^2 != 0");
      if (euler_characteristic(ck) != chi) rep.violate(to_string(k) + ": Euler mismatch");
      ranks[static_cast<int>(k)] = homology_ranks(ck);
      kinds[to_string(k)] = json_list(ranks[static_cast<int>(k)]);
      rep.add("homology " + to_string(k), brace_list(ranks[static_cast<int>(k)]));
    }
    rep.json["all_kinds"] = kinds;
    auto rev = [](std::vector<std::size_t> v) {
      std::reverse(v.begin(), v.end());
      return v;
    };
    const auto& inv_d = ranks[0];
    const auto& coinv_d = ranks[1];
    const auto& inv_u = ranks[2];
    const auto& coinv_u = ranks[3];
    if (inv_u != rev(inv_d)) rep.violate("inv-u ranks are not the reverse of inv-d");
    if (coinv_d != inv_u) rep.violate("coinv-d ranks differ from inv-u");
    if (coinv_u != rev(coinv_d)) rep.violate("coinv-u ranks are not the reverse of coinv-d");
    bool odd_orbit = has_odd_orbit(g);
    bool all_zero = std::all_of(inv_d.begin(), inv_d.end(), [](std::size_t x) { return x == 0; });
    if (odd_orbit && !all_zero) rep.violate("group has an odd point orbit but is not acyclic");
    if (!odd_orbit && (inv_d[0] != 1 || inv_d[1] != 0))
      rep.violate("group with even point orbits must have H_0 = F_2 and H_1 = 0");
    rep.add("duality relations", rep.violations.empty() ? "verified" : "FAILED");
  }
  return rep.emit(format, out, err);
}

int cmd_rect(int k, int l, bool check, const Limits& limits, const std::string& format,
             std::ostream& out, std::ostream& err) {
  Report rep("rect");
  RectComplex rc = build_rect_complex(k, l);
  SupportedComplex sc = rect_supported_complex(rc);
  Matching matching = rect_morse_matching(rc);

  rep.json["k"] = k;
  rep.json["l"] = l;
  rep.json["chain_dims"] = json_list(rc.complex.dims());
  rep.add("rectangle", std::to_string(k) + " x " + std::to_string(l));
  rep.add("partitions", std::to_string(enumerate_rect_partitions(k, l).size()));
  rep.add("chain dims", brace_list(rc.complex.dims()));

  MorseReport mr = certify_and_record(sc, matching, rep);
  auto h = homology_ranks(rc.complex);
  rep.json["homology"] = json_list(h);
  rep.add("homology ranks", brace_list(h));
  if (mr.concluded_homology && *mr.concluded_homology != h)
    rep.violate("Morse-concluded homology differs from the GF(2) oracle");

  auto criticals = rect_critical_cells(k, l);
  Json crit = Json::array();
  rep.csv_header = "partition,rank,phi";
  bool both_odd = (k % 2) && (l % 2);
  std::vector<RectPartition> images;
  for (const RectPartition& p : criticals) {
    Json entry{{"cell", p.label()}, {"rank", p.rank()}};
    std::string phi_str = "-";
    if (!both_odd) {
      RectPartition img = phi(p);
      images.push_back(img);
      entry["phi"] = img.label();
      phi_str = img.label();
    }
    crit.push_back(entry);
    rep.csv_rows.push_back(p.label() + "," + std::to_string(p.rank()) + "," + phi_str);
    rep.add("critical " + p.label(), "rank " + std::to_string(p.rank()) + "  phi -> " + phi_str);
  }
  rep.json["critical_cells"] = crit;

  BigInt expect = q_binomial(k, l).at_minus_one();
  rep.json["q_binomial_at_minus_one"] = json_bigint(expect);
  rep.add("critical cells", std::to_string(criticals.size()));
  rep.add("[k+l choose k]_q at q=-1", expect.str());
  if (expect != static_cast<int>(criticals.size()))
    rep.violate("critical-cell count differs from the q-binomial at q=-1");
  if (static_cast<std::size_t>(mr.critical_count()) != criticals.size())
    rep.violate("unmatched cells differ from the structural critical-cell description");

  std::sort(images.begin(), images.end());
  if (!both_odd &&
      std::adjacent_find(images.begin(), images.end()) != images.end())
    rep.violate("phi is not injective");

  if (check) {
    if (!rc.complex.is_chain_complex()) rep.violate("rect complex: d^2 != 0");
    if (k * l <= limits.sweep_n) {
      auto matched = rect_orbit_crosscheck(rc, limits);
      Json jm;
      for (ComplexKind kind : kAllKinds)
        jm[to_string(kind)] = matched[static_cast<int>(kind)];
      rep.json["orbit_complex_match"] = jm;
      std::string matched_str;
      for (ComplexKind kind : kAllKinds)
        if (matched[static_cast<int>(kind)])
          matched_str += (matched_str.empty() ? "" : " ") + to_string(kind);
      rep.add("matches orbit complex", matched_str.empty() ? "none" : matched_str);
      if (!matched[static_cast<int>(ComplexKind::InvariantsD)])
        rep.violate("boundary differs from the wreath invariants-D orbit complex");
    } else {
      rep.add("matches orbit complex", "skipped (k*l above sweep limit)");
    }
  }
  return rep.emit(format, out, err);
}

int cmd_box(int r, int c, int t, bool check, const Limits& limits, const std::string& format,
            std::ostream& out, std::ostream& err) {
  Report rep("box");
  BoxComplex bc = build_box_complex(r, c, t, limits);
  SupportedComplex sc = box_supported_complex(bc);
  Matching matching = box_morse_matching(bc);

  std::size_t total = 0;
  for (const auto& rank : bc.cells) total += rank.size();
  rep.json["r"] = r;
  rep.json["c"] = c;
  rep.json["t"] = t;
  rep.json["tableau_count"] = total;
  rep.json["chain_dims"] = json_list(bc.complex.dims());
  rep.add("box", std::to_string(r) + " x " + std::to_string(c) + " x " + std::to_string(t));
  rep.add("tableaux", std::to_string(total));

  QPolynomial mac = macmahon(r, c, t);
  if (mac.at_one() != static_cast<long long>(total))
    rep.violate("tableau count differs from the MacMahon formula at q=1");

  MorseReport mr = certify_and_record(sc, matching, rep);
  auto h = homology_ranks(bc.complex);
  rep.json["homology"] = json_list(h);
  rep.add("homology ranks", brace_list(h));
  if (mr.concluded_homology && *mr.concluded_homology != h)
    rep.violate("Morse-concluded homology differs from the GF(2) oracle");
  for (std::size_t i = 1; i < h.size(); i += 2)
    if (h[i] != 0) rep.violate("homology is not concentrated in even ranks");

  auto criticals = box_critical_cells(r, c, t, limits);
  Json crit = Json::array();
  rep.csv_header = "tableau,rank,domino";
  std::vector<std::string> domino_labels;
  for (const Tableau& T : criticals) {
    DominoTableau dt = to_domino(T);
    domino_labels.push_back(dt.label());
    crit.push_back(Json{{"cell", T.label()}, {"rank", T.rank()}, {"domino", dt.label()}});
    rep.csv_rows.push_back("\"" + T.label() + "\"," + std::to_string(T.rank()) + ",\"" +
                           dt.label() + "\"");
    rep.add("critical " + T.label(), "rank " + std::to_string(T.rank()));
  }
  rep.json["critical_cells"] = crit;

  BigInt expect = mac.at_minus_one();
  rep.json["macmahon_at_minus_one"] = json_bigint(expect);
  rep.add("critical cells", std::to_string(criticals.size()));
  rep.add("X(r,c,t,-1)", expect.str());
  if (expect != static_cast<long long>(criticals.size()))
    rep.violate("critical-cell count differs from the MacMahon formula at q=-1");
  std::sort(domino_labels.begin(), domino_labels.end());
  if (std::adjacent_find(domino_labels.begin(), domino_labels.end()) != domino_labels.end())
    rep.violate("domino bijection is not injective");

  auto intervals = boolean_decomposition(r, c, t, limits);
  std::size_t covered = 0, singletons = 0;
  for (const BooleanInterval& iv : intervals) {
    covered += iv.members.size();
    singletons += iv.members.size() == 1;
  }
  rep.json["boolean_intervals"] = intervals.size();
  rep.json["boolean_singletons"] = singletons;
  rep.add("boolean intervals", std::to_string(intervals.size()) + " (" +
                                   std::to_string(singletons) + " singletons)");
  if (covered != total) rep.violate("Boolean intervals do not cover all tableaux");
  if (singletons != criticals.size())
    rep.violate("rank-0 Boolean intervals differ from the critical cells");

  if (check) {
    if (!bc.complex.is_chain_complex()) rep.violate("box complex: d^2 != 0");
    for (const BooleanInterval& iv : intervals)
      if (iv.members.size() != (std::size_t(1) << iv.free_moves.size()))
        rep.violate("Boolean interval size is not 2^|E(bottom)|");
    bool schur = schur_specialization_check(r, c, t, limits);
    rep.json["schur_specialization"] = schur;
    rep.add("Schur specialization", schur ? "verified" : "FAILED");
    if (!schur) rep.violate("Schur specialization identity failed");
  }
  return rep.emit(format, out, err);
}

int cmd_necklace(int n, bool check_conjecture, const Limits& limits, const std::string& format,
                 std::ostream& out, std::ostream& err) {
  Report rep("necklace");
  NecklaceReport nr = necklace_report(n, check_conjecture, limits);

  rep.json["n"] = n;
  rep.json["homology"] = json_list(nr.homology);
  rep.json["orbit_polynomial"] = json_poly(nr.orbit_polynomial);
  rep.json["x_at_minus_one"] = json_bigint(nr.orbit_polynomial.at_minus_one());
  rep.add("n", std::to_string(n));
  rep.add("homology ranks", brace_list(nr.homology));
  rep.add("X(C_n,q)", nr.orbit_polynomial.to_string());
  rep.add("X(C_n,-1)", nr.orbit_polynomial.at_minus_one().str());

  rep.csv_header = "rank,homology";
  for (std::size_t i = 0; i < nr.homology.size(); ++i)
    rep.csv_rows.push_back(std::to_string(i) + "," + std::to_string(nr.homology[i]));

  if (nr.conjecture_checked) {
    rep.json["conjecture_checked"] = true;
    rep.json["conjecture_holds"] = *nr.conjecture_holds;
    rep.add("doubling recursion", *nr.conjecture_holds ? "holds" : "VIOLATED");
    if (!*nr.conjecture_holds) {
      rep.json["conjecture_note"] = nr.conjecture_note;
      rep.add("violation", nr.conjecture_note);
      rep.violate("necklace homology recursion violated: " + nr.conjecture_note);
    }
  }
  return rep.emit(format, out, err);
}

int cmd_isbell(int b, const Limits& limits, const std::string& format, std::ostream& out,
               std::ostream& err) {
  Report rep("isbell");
  IsbellGroup ig = isbell_group(b, limits);
  std::uint64_t order = group_order(ig.group, limits);
  bool derangement = has_two_power_derangement(ig.group, limits);
  ConcentrationReport cr = concentration_failure_check(ig.group, limits);

  rep.json["b"] = b;
  rep.json["d"] = ig.d;
  rep.json["points"] = ig.group.n;
  rep.json["order"] = order;
  rep.json["group"] = format_group(ig.group);
  rep.json["trace"] = json_list(ig.trace);
  rep.json["transitive"] = is_transitive(ig.group);
  rep.json["two_power_derangement"] = derangement;
  rep.json["homology"] = json_list(cr.homology);
  rep.json["odd_rank_nonzero"] = cr.odd_rank_nonzero;

  rep.add("b", std::to_string(b));
  rep.add("d", std::to_string(ig.d));
  rep.add("points", std::to_string(ig.group.n));
  rep.add("group order", std::to_string(order));
  for (const std::string& line : ig.trace) rep.add("construction", line);
  rep.add("transitive", is_transitive(ig.group) ? "yes" : "no");
  rep.add("2-power-order derangement", derangement ? "yes" : "no");
  rep.add("homology ranks", brace_list(cr.homology));
  rep.add("odd-rank homology", cr.odd_rank_nonzero ? "present" : "absent");

  rep.csv_header = "rank,homology";
  for (std::size_t i = 0; i < cr.homology.size(); ++i)
    rep.csv_rows.push_back(std::to_string(i) + "," + std::to_string(cr.homology[i]));

  if (order != (std::uint64_t(b) << ig.d)) rep.violate("group order is not b * 2^d");
  if (derangement) rep.violate("group has a 2-power-order derangement");
  if (!cr.odd_rank_nonzero)
    rep.violate("homology is concentrated in even ranks, contradicting the construction");
  return rep.emit(format, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"homcon: mod-2 homology of combinatorial chain complexes\n"
               "(orbit complexes of permutation groups, partitions in a rectangle,\n"
               "plane partitions in a box, necklaces) with certified Morse matchings"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  int limit = 24;
  auto* limit_opt =
      app.add_option("--limit", limit, "raise the n <= 24 subset-sweep cap")
          ->envname("HOMCON_LIMIT");
  int threads = 0;
  app.add_option("--threads", threads, "worker threads for rank computations");

  std::string group_spec, kind_str = "inv-d";
  bool check = false, check_conjecture = false;
  int k = 0, l = 0, r = 0, c = 0, t = 0, n = 0, b = 0;

  CLI::App* orbits = app.add_subcommand("orbits", "orbit polynomial X(G,q) and q=-1 counts");
  orbits->add_option("--group", group_spec, "group spec, e.g. cyclic:4")->required();

  CLI::App* homology = app.add_subcommand("homology", "homology of an orbit complex");
  homology->add_option("--group", group_spec)->required();
  homology->add_option("--kind", kind_str, "inv-d, coinv-d, inv-u, coinv-u");
  homology->add_flag("--check", check, "verify d^2=0, duality and acyclicity rules");

  CLI::App* rect = app.add_subcommand("rect", "partitions in a k x l rectangle");
  rect->add_option("--k", k)->required();
  rect->add_option("--l", l)->required();
  rect->add_flag("--check", check, "cross-validate against the wreath orbit complex");

  CLI::App* box = app.add_subcommand("box", "plane partitions in an r x c x t box");
  box->add_option("--r", r)->required();
  box->add_option("--c", c)->required();
  box->add_option("--t", t)->required();
  box->add_flag("--check", check, "verify d^2=0, Boolean intervals and Schur identity");

  CLI::App* necklace = app.add_subcommand("necklace", "cyclic-group homology table row");
  necklace->add_option("--n", n)->required();
  necklace->add_flag("--check-conjecture", check_conjecture, "verify the doubling recursion");

  CLI::App* isbell = app.add_subcommand("isbell", "transitive group without 2-power derangements");
  isbell->add_option("--b", b, "odd integer > 1")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Limits limits;
  if (limit_opt->count()) {
    limits.sweep_n = limit;
    limits.box_volume = std::max(limits.box_volume, 4 * limit);
    if (limit > 22 && limit < 40)
      limits.group_order = std::max<std::uint64_t>(limits.group_order, std::uint64_t(1) << limit);
  }
  if (threads > 0) set_thread_budget(threads);

  try {
    if (orbits->parsed()) return cmd_orbits(group_spec, limits, format, out, err);
    if (homology->parsed())
      return cmd_homology(group_spec, kind_str, check, limits, format, out, err);
    if (rect->parsed()) return cmd_rect(k, l, check, limits, format, out, err);
    if (box->parsed()) return cmd_box(r, c, t, check, limits, format, out, err);
    if (necklace->parsed()) {
      int cap = limit_opt->count() ? limits.sweep_n : 18;
      if (n > cap)
        throw LimitError("necklace computation for n = " + std::to_string(n) +
                         " is above the configured cap of " + std::to_string(cap));
      return cmd_necklace(n, check_conjecture, limits, format, out, err);
    }
    if (isbell->parsed()) return cmd_isbell(b, limits, format, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace homcon
