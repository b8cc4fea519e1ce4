#include "burnside/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <future>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "burnside/error.hpp"
#include "burnside/io.hpp"
#include "burnside/spectra.hpp"

namespace burnside::cli {

namespace {

struct Context {
  std::string group_spec;
  std::string functor_spec;
  std::shared_ptr<const SubgroupLattice> subgroups;
  std::shared_ptr<const MonoidFunctor> functor;
  std::shared_ptr<GreenFunctor> green;
  std::shared_ptr<const BasisSystem> basis;
  std::shared_ptr<GhostMaps> maps;
};

Context load(const std::string& group, const std::string& functor, int cap_order) {
  Context c{group, functor, {}, {}, {}, {}, {}};
  auto g = std::make_shared<const FiniteGroup>(load_group(group, cap_order));
  c.subgroups = std::make_shared<const SubgroupLattice>(g);
  c.functor = load_functor(functor, c.subgroups);
  c.green = std::make_shared<GreenFunctor>(c.functor);
  c.basis = c.green->basis();
  c.maps = std::make_shared<GhostMaps>(c.basis);
  return c;
}

Json header(const Context& c, const std::string& command) {
  return Json{{"command", command},
              {"group", c.group_spec},
              {"functor", c.functor_spec},
              {"signature", c.basis->signature()},
              {"rank", c.basis->rank()}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

Json labels_json(const BasisSystem& b) {
  Json l = Json::array();
  for (int i = 0; i < b.rank(); ++i) l.push_back(b.label(i));
  return l;
}

Json matrix_json(const IntMatrix& m) {
  Json j = Json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}

void print_matrix(std::ostream& out, const BasisSystem& b, const IntMatrix& m) {
  for (int i = 0; i < b.rank(); ++i) {
    out << b.label(i) << ":";
    for (long long v : m[i]) out << " " << v;
    out << "\n";
  }
}

Json report_json(const FundamentalReport& r) {
  Json inv = Json::array();
  for (const auto& v : r.invariants) inv.push_back(v.get_str());
  return Json{{"prime", r.prime.str()},
              {"ok", r.ok()},
              {"injective", r.injective},
              {"psi_kills_phi", r.psi_kills_phi},
              {"triangular", r.triangular},
              {"det_matches", r.det_matches},
              {"snf_matches", r.snf_matches},
              {"psi_surjective", r.psi_surjective},
              {"det", r.det.get_str()},
              {"obstruction_order", r.obstruction_order.get_str()},
              {"invariants", inv},
              {"failures", r.failures}};
}

Json axioms_json(const AxiomReport& r) {
  Json checked = Json::object();
  for (const auto& [k, v] : r.checked) checked[k] = v;
  return Json{{"ok", r.ok()},
              {"exhaustive", r.exhaustive},
              {"checked", checked},
              {"counterexamples", r.counterexamples}};
}

Json functor_report_json(const FunctorReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(x.axiom + ": " + x.detail);
  return Json{{"ok", r.ok()}, {"violations", v}};
}

void print_element_csv(std::ostream& out, const std::string& tag, const RingElement& x) {
  for (const auto& [i, c] : x.coeffs())
    out << csv_field(tag) << "," << i << "," << csv_field(x.basis().label(i)) << "," << to_string(c)
        << "\n";
}

RingElement parse_element(const std::string& text, const std::shared_ptr<const BasisSystem>& b) {
  if (std::filesystem::exists(text)) return ring_element_from_json(read_json_file(text), b);
  if (!text.empty() && std::all_of(text.begin(), text.end(), ::isdigit)) {
    const int i = std::stoi(text);
    if (i >= b->rank()) throw Error(ErrorCode::InvalidInput, "basis index " + text + " out of range");
    return RingElement::basis_element(b, i);
  }
  for (int i = 0; i < b->rank(); ++i)
    if (b->label(i) == text) return RingElement::basis_element(b, i);
  throw Error(ErrorCode::InvalidInput, "'" + text + "' is not a basis index, label or element file");
}

// ------------------------------------------------------------- commands

int cmd_basis(const Context& c, const std::string& fmt, std::ostream& out) {
  const BasisSystem& b = *c.basis;
  if (fmt == "json") {
    Json j = header(c, "basis");
    Json rows = Json::array();
    for (int i = 0; i < b.rank(); ++i)
      rows.push_back(Json{{"index", i}, {"label", b.label(i)}, {"weyl_order", b.weyl(i).order()}});
    j["basis"] = rows;
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "index,label,weyl_order\n";
    for (int i = 0; i < b.rank(); ++i)
      out << i << "," << csv_field(b.label(i)) << "," << b.weyl(i).order() << "\n";
  } else {
    for (int i = 0; i < b.rank(); ++i)
      out << i << " " << b.label(i) << " |W|=" << b.weyl(i).order() << "\n";
  }
  return kOk;
}

int cmd_marks(const Context& c, const std::string& fmt, std::ostream& out) {
  const BasisSystem& b = *c.basis;
  const bool lattice = c.functor->is_lattice();
  if (fmt == "json") {
    Json j = header(c, "marks");
    j["labels"] = labels_json(b);
    j["phi"] = matrix_json(c.maps->marks());
    if (lattice) j["alpha_phi"] = matrix_json(c.maps->lattice_marks());
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    auto emit = [&](const std::string& name, const IntMatrix& m) {
      for (int i = 0; i < b.rank(); ++i) {
        out << name << "," << csv_field(b.label(i));
        for (long long v : m[i]) out << "," << v;
        out << "\n";
      }
    };
    out << "matrix,row";
    for (int i = 0; i < b.rank(); ++i) out << "," << csv_field(b.label(i));
    out << "\n";
    emit("phi", c.maps->marks());
    if (lattice) emit("alpha_phi", c.maps->lattice_marks());
  } else {
    out << "phi\n";
    print_matrix(out, b, c.maps->marks());
    if (lattice) {
      out << "alpha.phi\n";
      print_matrix(out, b, c.maps->lattice_marks());
    }
  }
  return kOk;
}

int cmd_multiply(const Context& c, const std::string& fmt, const std::string& lhs,
                 const std::string& rhs, std::ostream& out) {
  if (lhs.empty() || rhs.empty()) throw Error(ErrorCode::InvalidInput, "multiply needs --lhs and --rhs");
  const RingElement x = parse_element(lhs, c.basis), y = parse_element(rhs, c.basis);
  const RingElement xy = x * y;
  if (fmt == "json") {
    Json j = header(c, "multiply");
    j["lhs"] = ring_element_to_json(x);
    j["rhs"] = ring_element_to_json(y);
    j["product"] = ring_element_to_json(xy);
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "factor,index,label,coeff\n";
    print_element_csv(out, "lhs", x);
    print_element_csv(out, "rhs", y);
    print_element_csv(out, "product", xy);
  } else {
    out << x.str() << " * " << y.str() << " = " << xy.str() << "\n";
  }
  return kOk;
}

int cmd_verify(const Context& c, const std::string& fmt, Prime p, std::ostream& out) {
  const FunctorReport fr = check_functor(*c.functor);
  const AxiomReport ar = axiom_report(*c.green, c.subgroups->whole());
  const FundamentalReport fund = verify_fundamental(*c.maps, p);
  const bool lattice = c.functor->is_lattice();
  FundamentalReport lat;
  if (lattice) lat = verify_lattice_fundamental(*c.maps, p);
  const bool ok = fr.ok() && ar.ok() && fund.ok() && (!lattice || lat.ok());
  if (fmt == "json") {
    Json j = header(c, "verify");
    j["prime"] = p.str();
    j["functor_axioms"] = functor_report_json(fr);
    j["green_axioms"] = axioms_json(ar);
    j["fundamental"] = report_json(fund);
    if (lattice) j["lattice_fundamental"] = report_json(lat);
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "check,ok\n";
    out << "functor_axioms," << fr.ok() << "\n";
    out << "green_axioms," << ar.ok() << "\n";
    out << "fundamental," << fund.ok() << "\n";
    if (lattice) out << "lattice_fundamental," << lat.ok() << "\n";
  } else {
    out << "functor axioms: " << (fr.ok() ? "ok" : fr.str()) << "\n";
    out << "green axioms: " << ar.str() << "\n";
    out << "fundamental: " << fund.str() << "\n";
    if (lattice) out << "lattice fundamental: " << lat.str() << "\n";
    out << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_idempotents(const Context& c, const std::string& fmt, Prime p, std::ostream& out) {
  const auto idem = idempotents_local(*c.maps, p);
  const BasisSystem& b = *c.basis;
  if (fmt == "json") {
    Json j = header(c, "idempotents");
    j["prime"] = p.str();
    Json list = Json::array();
    for (const auto& e : idem) {
      Json members = Json::array();
      for (int i : e.members) members.push_back(b.label(i));
      list.push_back(Json{{"members", members}, {"element", ring_element_to_json(e.element)}});
    }
    j["idempotents"] = list;
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "class,index,label,coeff\n";
    for (std::size_t k = 0; k < idem.size(); ++k) print_element_csv(out, std::to_string(k), idem[k].element);
  } else {
    out << idem.size() << " primitive idempotent(s) over " << ScalarDomain::local(p).str() << "\n";
    for (std::size_t k = 0; k < idem.size(); ++k) {
      out << "class " << k << ":";
      for (int i : idem[k].members) out << " " << b.label(i);
      out << "\n  " << idem[k].element.str() << "\n";
    }
  }
  return kOk;
}

int cmd_units(const Context& c, const std::string& fmt, int cap_rank, std::ostream& out) {
  const UnitGroup u = unit_group(*c.maps, cap_rank);
  const bool ok = u.squares_trivial && u.closed;
  if (fmt == "json") {
    Json j = header(c, "units");
    j["order"] = u.order;
    j["rank"] = u.rank;
    j["squares_trivial"] = u.squares_trivial;
    j["closed"] = u.closed;
    Json gens = Json::array();
    for (const auto& g : u.generators) gens.push_back(ring_element_to_json(g));
    j["generators"] = gens;
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "generator,index,label,coeff\n";
    for (std::size_t k = 0; k < u.generators.size(); ++k)
      print_element_csv(out, std::to_string(k), u.generators[k]);
  } else {
    out << "order " << u.order << ", rank " << u.rank << "\n";
    for (const auto& g : u.generators) out << "  " << g.str() << "\n";
    if (!ok) out << "FAIL: unit set is not an elementary abelian 2-group\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_partial(const Context& c, const std::string& fmt, const std::string& which, Prime p,
                std::ostream& out) {
  const PartialSystem ps = which == "section" ? section_system(c.basis)
                           : which.rfind("file:", 0) == 0
                               ? partial_from_json(read_json_file(which.substr(5)), c.basis)
                               : throw Error(ErrorCode::InvalidInput, "unknown partial system '" + which + "'");
  const FundamentalReport rep = verify_partial(ps, *c.maps, p);
  const auto eps = partial_idempotents(ps);
  if (fmt == "json") {
    Json j = header(c, "partial");
    j["system"] = ps.name();
    j["subring"] = ps.subring();
    Json reps = Json::array();
    for (int i = 0; i < ps.rank(); ++i) reps.push_back(ps.label(i));
    j["reps"] = reps;
    j["report"] = report_json(rep);
    Json list = Json::array();
    for (const auto& e : eps) list.push_back(ring_element_to_json(e));
    j["idempotents"] = list;
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "idempotent,index,label,coeff\n";
    for (int i = 0; i < ps.rank(); ++i) print_element_csv(out, ps.label(i), eps[i]);
  } else {
    out << ps.name() << ": " << ps.rank() << " of " << c.basis->rank() << " representatives"
        << (ps.subring() ? ", subring" : "") << "\n";
    for (int i = 0; i < ps.rank(); ++i) out << "  " << ps.label(i) << "\n";
    out << "exactness: " << rep.str() << "\n";
    for (int i = 0; i < ps.rank(); ++i) out << "eps" << ps.label(i) << " = " << eps[i].str() << "\n";
  }
  return rep.ok() ? kOk : kFailed;
}

// ------------------------------------------------------------ verify-all

struct CellResult {
  std::vector<std::string> lines;
  std::vector<Json> json;
  bool ok = true;
};

CellResult run_cell(const std::string& group, const std::string& functor,
                    const std::vector<Prime>& primes, const VerifyAllOptions& o) {
  CellResult res;
  std::string fail;
  try {
    const Context c = load(group, functor, o.cap_order);
    const FunctorReport fr = check_functor(*c.functor);
    const AxiomReport ar = axiom_report(*c.green, c.subgroups->whole());
    long long axiom_checks = 0;
    for (const auto& [k, v] : ar.checked) axiom_checks += v;

    // Rational idempotents, once per cell.
    bool idem_ok = true;
    if (c.functor->is_lattice()) {
      const auto e = idempotents_rational(*c.maps);
      RingElement sum(c.basis, ScalarDomain::rationals());
      for (std::size_t i = 0; i < e.size(); ++i) {
        sum = sum + e[i];
        idem_ok = idem_ok && e[i] * e[i] == e[i] &&
                  c.maps->lattice_phi(e[i]) == GhostVector::delta(c.basis, static_cast<int>(i));
      }
      idem_ok = idem_ok && sum == RingElement::one(c.basis);
    }
    std::string units = "skipped";
    bool units_ok = true;
    if (c.functor->is_lattice() && c.basis->rank() <= o.cap_rank) {
      const UnitGroup u = unit_group(*c.maps, o.cap_rank);
      units_ok = u.squares_trivial && u.closed;
      units = std::to_string(u.order);
    }
    for (const Prime& p : primes) {
      const FundamentalReport fund = verify_fundamental(*c.maps, p);
      bool lat_ok = true;
      int classes = -1;
      bool local_ok = true;
      if (c.functor->is_lattice()) {
        lat_ok = verify_lattice_fundamental(*c.maps, p).ok();
        const auto local = idempotents_local(*c.maps, p);
        classes = static_cast<int>(local.size());
        RingElement sum(c.basis, ScalarDomain::rationals());
        for (const auto& e : local) {
          sum = sum + e.element;
          local_ok = local_ok && e.element * e.element == e.element;
        }
        local_ok = local_ok && sum == RingElement::one(c.basis);
      }
      const bool ok = fr.ok() && ar.ok() && fund.ok() && lat_ok && idem_ok && local_ok && units_ok;
      res.ok = res.ok && ok;
      std::ostringstream line;
      line << group << " " << functor << " p=" << p.str() << ": " << (ok ? "PASS" : "FAIL")
           << " rank=" << c.basis->rank() << " axioms=" << (ar.ok() && fr.ok() ? "ok" : "FAIL") << "("
           << axiom_checks << (ar.exhaustive ? "" : ",sampled") << ")"
           << " fundamental=" << (fund.ok() ? "ok" : "FAIL") << " lattice=" << (lat_ok ? "ok" : "FAIL")
           << " idempotents=" << (idem_ok && local_ok ? "ok" : "FAIL") << " classes=" << classes
           << " units=" << units;
      res.lines.push_back(line.str());
      res.json.push_back(Json{{"group", group},
                              {"functor", functor},
                              {"prime", p.str()},
                              {"ok", ok},
                              {"rank", c.basis->rank()},
                              {"axiom_checks", axiom_checks},
                              {"axioms_exhaustive", ar.exhaustive},
                              {"axioms", ar.ok() && fr.ok()},
                              {"fundamental", fund.ok()},
                              {"lattice", lat_ok},
                              {"idempotents", idem_ok && local_ok},
                              {"classes", classes},
                              {"units", units}});
    }
  } catch (const std::exception& e) {
    res.ok = false;
    res.lines.push_back(group + " " + functor + ": FAIL " + e.what());
    res.json.push_back(Json{{"group", group}, {"functor", functor}, {"ok", false}, {"error", e.what()}});
  }
  return res;
}

}  // namespace

int verify_all(const VerifyAllOptions& o, std::ostream& out) {
  std::vector<Prime> primes;
  for (const auto& s : o.primes) primes.push_back(Prime::parse(s));
  std::vector<std::pair<std::string, std::string>> cells;
  for (const auto& g : o.groups)
    for (const auto& f : o.functors) cells.emplace_back(g, f);

  const unsigned jobs = o.jobs ? o.jobs : std::max(1U, std::thread::hardware_concurrency());
  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(jobs, cells.size()); ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++)
          results[i] = run_cell(cells[i].first, cells[i].second, primes, o);
      });
  }
  int failures = 0, lines = 0;
  for (const auto& r : results) {
    for (const auto& j : r.json) {
      ++lines;
      if (!j.value("ok", false)) ++failures;
    }
  }
  if (o.output == "json") {
    Json all = Json::array();
    for (const auto& r : results)
      for (const auto& j : r.json) all.push_back(j);
    out << Json{{"command", "verify-all"}, {"cells", all}, {"failures", failures}}.dump(2) << "\n";
  } else if (o.output == "csv") {
    out << "group,functor,prime,ok,rank,classes,units\n";
    for (const auto& r : results)
      for (const auto& j : r.json)
        out << j.value("group", "") << "," << j.value("functor", "") << "," << j.value("prime", "")
            << "," << j.value("ok", false) << "," << j.value("rank", -1) << "," << j.value("classes", -1)
            << "," << j.value("units", "") << "\n";
  } else {
    for (const auto& r : results)
      for (const auto& l : r.lines) out << l << "\n";
    out << "summary: " << lines << " cell(s), " << failures << " failure(s)\n";
  }
  return failures == 0 ? kOk : kFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice Burnside rings of finite groups", "burnside"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string group, functor = "trivial", prime = "inf", partial = "section", output = "text";
  std::string lhs, rhs;
  int cap_order = kDefaultOrderCap, cap_rank = kUnitRankCap;
  app.add_option("--group", group, "built-in group name or group JSON file");
  app.add_option("--functor", functor, "trivial | slice | conormal | crossed:F | lattice:F | monomial:F")
      ->capture_default_str();
  app.add_option("--p", prime, "prime or inf")->capture_default_str();
  app.add_option("--partial", partial, "section | file:<pairs.json>")->capture_default_str();
  app.add_option("--output", output, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cap-order", cap_order, "largest group order accepted")->capture_default_str();
  app.add_option("--cap-rank", cap_rank, "largest rank for the unit search")->capture_default_str();

  app.add_subcommand("basis", "list the standard basis");
  app.add_subcommand("marks", "mark matrices");
  auto* mult = app.add_subcommand("multiply", "product of two elements");
  mult->add_option("--lhs", lhs, "basis index, label or element JSON file");
  mult->add_option("--rhs", rhs, "basis index, label or element JSON file");
  app.add_subcommand("verify", "functor axioms, Green axioms and exactness");
  app.add_subcommand("idempotents", "primitive idempotents over Z_(p)");
  app.add_subcommand("units", "unit group");
  app.add_subcommand("partial", "partial lattice Burnside ring");
  VerifyAllOptions all;
  auto* va = app.add_subcommand("verify-all", "run the verification matrix");
  va->add_option("--groups", all.groups)->delimiter(',');
  va->add_option("--functors", all.functors)->delimiter(',');
  va->add_option("--primes", all.primes)->delimiter(',');
  va->add_option("--jobs", all.jobs);

  std::vector<const char*> argv{"burnside"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kInvalid;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "verify-all") {
      all.cap_rank = cap_rank;
      all.cap_order = cap_order;
      all.output = output;
      return verify_all(all, out);
    }
    if (group.empty()) throw Error(ErrorCode::InvalidInput, command + " needs --group");
    const Prime p = Prime::parse(prime);
    std::ostringstream buf;
    int code = kOk;
    const Context c = load(group, functor, cap_order);
    if (command == "basis") code = cmd_basis(c, output, buf);
    else if (command == "marks") code = cmd_marks(c, output, buf);
    else if (command == "multiply") code = cmd_multiply(c, output, lhs, rhs, buf);
    else if (command == "verify") code = cmd_verify(c, output, p, buf);
    else if (command == "idempotents") code = cmd_idempotents(c, output, p, buf);
    else if (command == "units") code = cmd_units(c, output, cap_rank, buf);
    else if (command == "partial") code = cmd_partial(c, output, partial, p, buf);
    out << buf.str();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace burnside::cli
